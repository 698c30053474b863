#include "crowdtraits/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "crowdtraits/errors.hpp"

namespace crowdtraits::synth {

namespace {

constexpr double kPi = std::numbers::pi;

// Cap radius from loop length = 2 * straight + 2 * pi * r.
constexpr double kCapRadius = (kLoopLength - 2.0 * kStraightLength) / (2.0 * kPi);

Trajectory straight_walk(int person_id, Point2 start, Point2 direction, double speed,
                         int frames) {
    Trajectory t;
    t.person_id = person_id;
    t.samples.reserve(frames);
    for (int f = 0; f < frames; ++f) {
        t.samples.push_back(
            {f, {start.x + direction.x * speed * f, start.y + direction.y * speed * f}});
    }
    return t;
}

}  // namespace

Point2 loop_point(double s) {
    s = std::fmod(s, kLoopLength);
    if (s < 0) s += kLoopLength;

    const double l = kStraightLength;
    const double r = kCapRadius;
    if (s < l) {
        // first straight, walking +x
        return {s, 0.0};
    }
    s -= l;
    if (s < kPi * r) {
        // right cap, turning counterclockwise
        const double phi = s / r;
        return {l + r * std::sin(phi), r - r * std::cos(phi)};
    }
    s -= kPi * r;
    if (s < l) {
        // second straight, walking -x
        return {l - s, 2.0 * r};
    }
    s -= l;
    // left cap
    const double phi = s / r;
    return {-r * std::sin(phi), r + r * std::cos(phi)};
}

Roi corridor_roi() {
    // 2 x 0.8 m rectangle centered on the first straight.
    return {kStraightLength / 2.0 - 1.0, -kCorridorWidth / 2.0, 2.0, kCorridorWidth};
}

SceneDataset generate(const ScenarioSpec& spec) {
    if (spec.n < 1) throw InfeasibleScenarioError("scenario needs n >= 1");
    if (spec.frames < 2) throw InfeasibleScenarioError("scenario needs >= 2 frames");

    SceneDataset dataset;
    dataset.units = Units::world_meters;

    switch (spec.kind) {
        case ScenarioKind::lone_walker: {
            dataset.label = "lone_walker";
            // Parallel straight walkers far outside each other's social space.
            for (int i = 0; i < spec.n; ++i) {
                dataset.trajectories.push_back(
                    straight_walk(i + 1, {0.0, i * 10.8}, {1.0, 0.0}, spec.speed, spec.frames));
            }
            break;
        }
        case ScenarioKind::lockstep_pair: {
            dataset.label = "lockstep_pair";
            dataset.trajectories.push_back(
                straight_walk(1, {0.0, 0.0}, {1.0, 0.0}, spec.speed, spec.frames));
            dataset.trajectories.push_back(
                straight_walk(2, {0.0, spec.spacing}, {1.0, 0.0}, spec.speed, spec.frames));
            break;
        }
        case ScenarioKind::cluster: {
            dataset.label = "cluster";
            const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
            for (int i = 0; i < spec.n; ++i) {
                const int row = i / cols;
                const int col = i % cols;
                dataset.trajectories.push_back(straight_walk(
                    i + 1, {col * spec.spacing, row * spec.spacing}, {1.0, 0.0}, spec.speed,
                    spec.frames));
            }
            break;
        }
        case ScenarioKind::corridor_loop: {
            dataset.label = "corridor_loop_n" + std::to_string(spec.n);
            const double arc_spacing = kLoopLength / spec.n;
            if (arc_spacing < kMinLoopSpacing) {
                throw InfeasibleScenarioError(
                    "corridor capacity exceeded: " + std::to_string(spec.n) +
                    " walkers leave spacing " + std::to_string(arc_spacing) + " m < " +
                    std::to_string(kMinLoopSpacing) + " m");
            }
            for (int i = 0; i < spec.n; ++i) {
                Trajectory t;
                t.person_id = i + 1;
                t.samples.reserve(spec.frames);
                for (int f = 0; f < spec.frames; ++f) {
                    t.samples.push_back({f, loop_point(i * arc_spacing + f * spec.speed)});
                }
                dataset.trajectories.push_back(std::move(t));
            }
            break;
        }
    }
    return dataset;
}

SceneDataset wanderers(int n, int frames, double speed, std::uint64_t seed) {
    SceneDataset dataset;
    dataset.units = Units::world_meters;
    dataset.label = "wanderers";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> base(0.0, 2.0 * kPi);

    // Anchors 12 m apart; the oscillating heading keeps each walker near its
    // anchor, so pairwise separation never drops into social space.
    for (int i = 0; i < n; ++i) {
        const double phase_i = phase(rng);
        const double base_i = base(rng);
        Trajectory t;
        t.person_id = i + 1;
        Point2 pos{0.0, i * 12.0};
        for (int f = 0; f < frames; ++f) {
            t.samples.push_back({f, pos});
            const double heading =
                base_i + (40.0 * kPi / 180.0) * std::sin(2.0 * kPi * f / 50.0 + phase_i);
            pos.x += speed * std::cos(heading);
            pos.y += speed * std::sin(heading);
        }
        dataset.trajectories.push_back(std::move(t));
    }
    return dataset;
}

SceneDataset merge(const std::vector<SceneDataset>& parts) {
    SceneDataset out;
    out.units = Units::world_meters;
    int next_id = 1;
    for (const auto& part : parts) {
        if (out.label.empty()) {
            out.label = part.label;
            out.frame_rate = part.frame_rate;
        } else if (!part.label.empty()) {
            out.label += "+" + part.label;
        }
        for (const auto& traj : part.trajectories) {
            Trajectory copy = traj;
            copy.person_id = next_id++;
            out.trajectories.push_back(std::move(copy));
        }
    }
    return out;
}

SceneDataset random_scene(std::uint64_t seed, int max_persons, int frames) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> person_count(2, max_persons);
    std::uniform_real_distribution<double> coordinate(0.0, 15.0);
    std::uniform_real_distribution<double> speed_dist(0.02, 0.1);
    std::uniform_real_distribution<double> heading(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> turn(-0.3, 0.3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SceneDataset dataset;
    dataset.units = Units::world_meters;
    dataset.label = "random_scene_" + std::to_string(seed);

    const int n = person_count(rng);
    for (int i = 0; i < n; ++i) {
        const bool standing = unit(rng) < 0.1;
        double theta = heading(rng);
        const double speed = standing ? 0.0 : speed_dist(rng);
        Point2 pos{coordinate(rng), coordinate(rng)};
        Trajectory t;
        t.person_id = i + 1;
        for (int f = 0; f < frames; ++f) {
            t.samples.push_back({f, pos});
            theta += turn(rng);
            pos.x += speed * std::cos(theta);
            pos.y += speed * std::sin(theta);
        }
        dataset.trajectories.push_back(std::move(t));
    }
    return dataset;
}

std::vector<FrameFeatures> oracle_frame_features(const FrameState& frame,
                                                 const ProxemicsConfig& config) {
    const std::size_t rho = frame.persons.size();
    std::vector<FrameFeatures> out;
    out.reserve(rho);
    for (std::size_t i = 0; i < rho; ++i) {
        const PersonState& me = frame.persons[i];
        // Direct evaluation of the defining equations over every other person.
        std::vector<std::size_t> neighbors;
        for (std::size_t j = 0; j < rho; ++j) {
            if (j == i) continue;
            const double dx = me.position.x - frame.persons[j].position.x;
            const double dy = me.position.y - frame.persons[j].position.y;
            if (std::sqrt(dx * dx + dy * dy) <= config.d_hall) neighbors.push_back(j);
        }

        FrameFeatures f;
        f.person_id = me.person_id;
        f.frame = frame.frame;
        f.speed = me.speed;
        f.alpha_deg = me.alpha_deg;

        if (neighbors.empty()) {
            f.isolation = 1.0;
            f.socialization = 0.0;
            f.collectivity = 0.0;
            f.collectivity_mean = 0.0;
        } else {
            double dist_sum = 0.0;
            for (std::size_t j : neighbors) {
                const double dx = me.position.x - frame.persons[j].position.x;
                const double dy = me.position.y - frame.persons[j].position.y;
                dist_sum += std::sqrt(dx * dx + dy * dy);
            }
            f.isolation = dist_sum / static_cast<double>(neighbors.size()) / config.d_hall;
            f.socialization = static_cast<double>(neighbors.size()) / static_cast<double>(rho);
            double coll = 0.0;
            for (std::size_t j : neighbors) {
                const PersonState& other = frame.persons[j];
                double diff_rad = std::abs(me.alpha_deg - other.alpha_deg) * kPi / 180.0;
                diff_rad = std::fmod(diff_rad, 2.0 * kPi);
                if (diff_rad > kPi) diff_rad = 2.0 * kPi - diff_rad;
                const double w =
                    std::abs(me.speed - other.speed) * config.w1 + diff_rad * config.w2;
                coll += config.gamma * std::exp(-config.beta * w * w);
            }
            f.collectivity = coll;
            f.collectivity_mean = coll / static_cast<double>(neighbors.size());
        }
        out.push_back(f);
    }
    return out;
}

std::vector<std::vector<int>> oracle_detect_groups(const FrameState& frame,
                                                   const GroupRuleConfig& config) {
    const std::size_t n = frame.persons.size();

    // All passing pairs, evaluated directly from the three rules.
    std::vector<std::vector<int>> sets;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const PersonState& a = frame.persons[i];
            const PersonState& b = frame.persons[j];
            const double dx = a.position.x - b.position.x;
            const double dy = a.position.y - b.position.y;
            if (std::sqrt(dx * dx + dy * dy) > config.max_distance) continue;
            double diff_rad = std::abs(a.alpha_deg - b.alpha_deg) * kPi / 180.0;
            diff_rad = std::fmod(diff_rad, 2.0 * kPi);
            if (diff_rad > kPi) diff_rad = 2.0 * kPi - diff_rad;
            if (diff_rad * 180.0 / kPi > config.max_orientation_diff_deg) continue;
            const double hi = std::max(a.speed, b.speed);
            if (hi != 0.0 && !(std::abs(a.speed - b.speed) < config.speed_fraction * hi)) continue;
            sets.push_back({a.person_id, b.person_id});
        }
    }

    // Merge sets sharing an individual until all are disjoint.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < sets.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < sets.size() && !merged; ++j) {
                const bool shares = std::any_of(sets[i].begin(), sets[i].end(), [&](int id) {
                    return std::find(sets[j].begin(), sets[j].end(), id) != sets[j].end();
                });
                if (shares) {
                    sets[i].insert(sets[i].end(), sets[j].begin(), sets[j].end());
                    std::sort(sets[i].begin(), sets[i].end());
                    sets[i].erase(std::unique(sets[i].begin(), sets[i].end()), sets[i].end());
                    sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sets;
}

}  // namespace crowdtraits::synth
