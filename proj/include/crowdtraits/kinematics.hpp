#pragma once

#include <vector>

#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// Derives per-sample velocity, speed and heading for a world-meter
/// trajectory. Velocity is the forward difference to the next sample divided
/// by the frame gap; the last sample repeats the previous velocity. Speed is
/// the Euclidean norm (meters/frame). alpha_deg is the unsigned angle between
/// the velocity and (1,0); 0 below kStillSpeed.
/// Throws InsufficientDataError for trajectories with fewer than 2 samples.
PersonKinematics derive_kinematics(const Trajectory& trajectory, double frame_rate);

/// Kinematics for every trajectory in the dataset (propagates errors).
std::vector<PersonKinematics> derive_all_kinematics(const SceneDataset& dataset);

/// Reassembles kinematics into per-frame states, one FrameState per frame
/// that has at least one person, ordered by frame; persons sorted by id.
std::vector<FrameState> build_frame_states(const std::vector<PersonKinematics>& kinematics);

}  // namespace crowdtraits
