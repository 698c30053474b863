#pragma once

#include <cstdint>
#include <vector>

#include "crowdtraits/analysis.hpp"
#include "crowdtraits/features.hpp"
#include "crowdtraits/groups.hpp"
#include "crowdtraits/types.hpp"

namespace crowdtraits::synth {

/// Oval walking loop matching the controlled corridor experiments: two
/// straight segments joined by semicircular caps, 17.3 m of centerline,
/// 0.8 m passage width, with a 2 x 0.8 m measurement rectangle on the
/// first straight.
inline constexpr double kLoopLength = 17.3;
inline constexpr double kCorridorWidth = 0.8;
inline constexpr double kStraightLength = 4.0;
inline constexpr double kMinLoopSpacing = 0.4;  // capacity bound, meters

/// Point on the loop centerline at arc position s (meters, wraps).
Point2 loop_point(double s);

/// The 2 x 0.8 m measurement rectangle centered on the first straight.
Roi corridor_roi();

enum class ScenarioKind { lone_walker, lockstep_pair, cluster, corridor_loop };

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::lone_walker;
    int n = 1;
    double spacing = 1.0;      // meters (ignored by corridor_loop)
    double speed = 0.05;       // meters/frame
    int frames = 100;
    std::uint64_t seed = 0;
};

/// Deterministic synthetic dataset for the given scenario.
///   lone_walker    n straight walkers far outside each other's social space
///   lockstep_pair  two side-by-side walkers `spacing` apart
///   cluster        n walkers on a lockstep grid with `spacing` pitch
///   corridor_loop  n walkers equally spaced along the 17.3 m loop
/// Throws InfeasibleScenarioError when corridor spacing drops below
/// kMinLoopSpacing.
SceneDataset generate(const ScenarioSpec& spec);

/// n isolated walkers with slowly oscillating headings, anchored far apart;
/// the oscillation phase is drawn from `seed`.
SceneDataset wanderers(int n, int frames, double speed, std::uint64_t seed);

/// Concatenates datasets, renumbering person ids to stay unique.
SceneDataset merge(const std::vector<SceneDataset>& parts);

/// Seeded random scene for oracle-equivalence tests: n persons with random
/// walks (a fraction standing still), `frames` frames.
SceneDataset random_scene(std::uint64_t seed, int max_persons = 20, int frames = 50);

/// Reference implementations: direct O(n^2) evaluation of the defining
/// equations, no spatial indexing. Kept independent of the main pipeline.
std::vector<FrameFeatures> oracle_frame_features(const FrameState& frame,
                                                 const ProxemicsConfig& config = {});

/// Reference group partition: exhaustive pair tests, then repeated merging of
/// pair sets that share an individual until all are disjoint.
std::vector<std::vector<int>> oracle_detect_groups(const FrameState& frame,
                                                   const GroupRuleConfig& config = {});

}  // namespace crowdtraits::synth
