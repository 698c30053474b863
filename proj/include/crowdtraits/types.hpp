#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace crowdtraits {

/// Speeds below this (meters/frame) count as standing still; headings are
/// undefined there and the stored angle falls back to 0.
inline constexpr double kStillSpeed = 1e-6;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

struct TrajectorySample {
    int frame = 0;
    Point2 position;
};

/// One person's track: samples ordered by strictly increasing frame.
struct Trajectory {
    int person_id = 0;
    std::vector<TrajectorySample> samples;
};

enum class Units { image_pixels, world_meters };

/// Everything known about one video: tracks plus scene metadata.
struct SceneDataset {
    std::vector<Trajectory> trajectories;
    double frame_rate = 25.0;  // frames/second
    Units units = Units::world_meters;
    std::string label;
};

/// Kinematic state of one person at one frame, in world meters.
/// alpha_deg is the unsigned angle between the velocity and the reference
/// vector (1,0), in [0, 180]; 0 when standing still.
/// heading_change_deg is alpha's change since the previous sample (0 at the
/// first sample).
struct KinematicSample {
    int frame = 0;
    Point2 position;
    Point2 velocity;            // meters/frame
    double speed = 0.0;         // meters/frame
    double alpha_deg = 0.0;
    double heading_change_deg = 0.0;
};

struct PersonKinematics {
    int person_id = 0;
    std::vector<KinematicSample> samples;
};

/// Per-frame slice of the scene used by the feature and group computations.
struct PersonState {
    int person_id = 0;
    Point2 position;
    Point2 velocity;         // meters/frame
    double speed = 0.0;      // meters/frame
    double alpha_deg = 0.0;  // heading vs (1,0), [0, 180]
};

struct FrameState {
    int frame = 0;
    std::vector<PersonState> persons;  // sorted by person_id
};

}  // namespace crowdtraits
