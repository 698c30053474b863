#include "crowdtraits/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "crowdtraits/errors.hpp"

namespace crowdtraits {

namespace {

double heading_deg(const Point2& velocity, double speed) {
    if (speed < kStillSpeed) return 0.0;
    // Unsigned angle between the velocity and (1,0): acos(vx / |v|).
    const double c = std::clamp(velocity.x / speed, -1.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
}

}  // namespace

PersonKinematics derive_kinematics(const Trajectory& trajectory, double /*frame_rate*/) {
    if (trajectory.samples.size() < 2) {
        throw InsufficientDataError("trajectory of person " + std::to_string(trajectory.person_id) +
                                    " has fewer than 2 samples");
    }

    PersonKinematics out;
    out.person_id = trajectory.person_id;
    out.samples.resize(trajectory.samples.size());

    const auto& samples = trajectory.samples;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        KinematicSample& k = out.samples[i];
        k.frame = samples[i].frame;
        k.position = samples[i].position;
        if (i + 1 < samples.size()) {
            const double gap = static_cast<double>(samples[i + 1].frame - samples[i].frame);
            k.velocity = {(samples[i + 1].position.x - samples[i].position.x) / gap,
                          (samples[i + 1].position.y - samples[i].position.y) / gap};
        } else {
            k.velocity = out.samples[i - 1].velocity;  // last sample repeats
        }
        k.speed = std::hypot(k.velocity.x, k.velocity.y);
        k.alpha_deg = heading_deg(k.velocity, k.speed);
        k.heading_change_deg = i == 0 ? 0.0 : k.alpha_deg - out.samples[i - 1].alpha_deg;
    }
    return out;
}

std::vector<PersonKinematics> derive_all_kinematics(const SceneDataset& dataset) {
    std::vector<PersonKinematics> out;
    out.reserve(dataset.trajectories.size());
    for (const auto& traj : dataset.trajectories) {
        out.push_back(derive_kinematics(traj, dataset.frame_rate));
    }
    return out;
}

std::vector<FrameState> build_frame_states(const std::vector<PersonKinematics>& kinematics) {
    std::map<int, FrameState> by_frame;
    for (const auto& person : kinematics) {
        for (const auto& s : person.samples) {
            FrameState& fs = by_frame[s.frame];
            fs.frame = s.frame;
            fs.persons.push_back({person.person_id, s.position, s.velocity, s.speed, s.alpha_deg});
        }
    }
    std::vector<FrameState> out;
    out.reserve(by_frame.size());
    for (auto& [frame, fs] : by_frame) {
        std::sort(fs.persons.begin(), fs.persons.end(),
                  [](const PersonState& a, const PersonState& b) {
                      return a.person_id < b.person_id;
                  });
        out.push_back(std::move(fs));
    }
    return out;
}

}  // namespace crowdtraits
