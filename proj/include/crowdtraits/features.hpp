#pragma once

#include <cstddef>
#include <vector>

#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// Proxemics and collectivity constants.
struct ProxemicsConfig {
    double d_hall = 3.6;  // social space radius, meters
    double gamma = 1.0;   // collectivity value at zero speed/heading difference
    double beta = 0.3;    // collectivity decay constant
    double w1 = 1.0;      // weight of the speed difference (meters/frame)
    double w2 = 1.0;      // weight of the orientation difference (radians)
};

/// Per-person per-frame feature vector [s, alpha, isolation, socialization,
/// collectivity]. collectivity is the raw sum over social neighbors;
/// collectivity_mean divides by the neighbor count (0 when alone).
struct FrameFeatures {
    int person_id = 0;
    int frame = 0;
    double speed = 0.0;
    double alpha_deg = 0.0;
    double isolation = 0.0;
    double socialization = 0.0;
    double collectivity = 0.0;
    double collectivity_mean = 0.0;
};

/// Per-video averages of the per-frame features, plus the standard deviation
/// of the per-frame heading-change series.
struct AveragedFeatures {
    int person_id = 0;
    int frame_count = 0;
    double speed = 0.0;
    double alpha_deg = 0.0;
    double isolation = 0.0;
    double socialization = 0.0;
    double collectivity = 0.0;
    double collectivity_mean = 0.0;
    double std_alpha_change_deg = 0.0;
};

/// Indices (into frame.persons) of everyone within d_hall of person i,
/// boundary inclusive, ascending.
std::vector<std::size_t> social_neighbors(const FrameState& frame, std::size_t i,
                                          double d_hall);

/// 1 when alone, otherwise mean distance to social neighbors over d_hall.
double isolation(const FrameState& frame, std::size_t i,
                 const std::vector<std::size_t>& neighbors, double d_hall);

/// n_social / rho, 0 when alone. rho counts everyone in the frame.
/// Throws EmptyFrameError when rho == 0.
double socialization(std::size_t n_social, std::size_t rho);

/// Absolute speed difference, meters/frame.
double speed_difference(double speed_i, double speed_j);

/// Absolute heading difference in radians, wrapped to [0, pi].
double orientation_difference_rad(double alpha_i_deg, double alpha_j_deg);

/// Sum over social neighbors of gamma * exp(-beta * w(i,j)^2) with
/// w(i,j) = |ds|*w1 + |do|*w2.
double collectivity(const FrameState& frame, std::size_t i,
                    const std::vector<std::size_t>& neighbors,
                    const ProxemicsConfig& config);

struct FeatureTable {
    std::vector<FrameFeatures> rows;          // ordered by (frame, person_id)
    std::vector<AveragedFeatures> averages;   // ordered by person_id
};

/// Full per-frame and averaged feature extraction for a video. Uses a uniform
/// grid index for neighbor queries; results are identical to the brute-force
/// evaluation of the defining equations.
FeatureTable feature_vector(const std::vector<FrameState>& frames,
                            const std::vector<PersonKinematics>& kinematics,
                            const ProxemicsConfig& config = {});

/// Features of a single frame (grid-indexed path).
std::vector<FrameFeatures> frame_features(const FrameState& frame,
                                          const ProxemicsConfig& config = {});

}  // namespace crowdtraits
