#pragma once

#include <cstddef>
#include <vector>

#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// Pairwise thresholds for the three group membership tests.
struct GroupRuleConfig {
    double max_distance = 1.2;           // meters
    double max_orientation_diff_deg = 15.0;
    double speed_fraction = 0.05;        // of the higher speed
};

/// A detected social group with its video statistics.
struct Group {
    int group_id = 0;
    std::vector<int> members;     // person ids, ascending, size >= 2
    double mean_speed = 0.0;      // meters/frame
    double mean_alpha_deg = 0.0;
    double mean_distance = 0.0;   // mean pairwise member distance, meters
};

/// A group stable over the video: members grouped together in at least
/// `min_fraction` of the frames where they are co-present.
struct VideoGroup {
    Group group;
    int frames_grouped = 0;     // frames where all members share one group
    int frames_copresent = 0;   // frames where all members are present
};

/// True iff distance <= max_distance, heading difference <= the orientation
/// bound, and |s_i - s_j| < speed_fraction * max(s_i, s_j). Two standing
/// agents pass the speed test.
bool pair_test(const PersonState& a, const PersonState& b, const GroupRuleConfig& config);

/// Connected components of the pair-test graph with >= 2 members.
/// Each component is an ascending person-id list; components ordered by
/// smallest member id.
std::vector<std::vector<int>> detect_groups(const FrameState& frame,
                                            const GroupRuleConfig& config);

/// Per-frame partitions for a whole video, index-aligned with `frames`.
std::vector<std::vector<std::vector<int>>> detect_groups_per_frame(
    const std::vector<FrameState>& frames, const GroupRuleConfig& config);

/// Video-level groups: connected components of the "co-grouped in >=
/// min_fraction of co-present frames" pair relation.
std::vector<VideoGroup> detect_video_groups(
    const std::vector<FrameState>& frames,
    const std::vector<std::vector<std::vector<int>>>& per_frame_groups,
    double min_fraction = 0.5);

/// Mean speed/heading over members and frames where all members are present,
/// and the mean over those frames of the mean pairwise member distance.
Group group_stats(const std::vector<int>& members, int group_id,
                  const std::vector<FrameState>& frames);

}  // namespace crowdtraits
