#include <doctest.h>

#include <algorithm>
#include <set>

#include "crowdtraits/groups.hpp"
#include "crowdtraits/kinematics.hpp"
#include "crowdtraits/synth.hpp"

using namespace crowdtraits;

namespace {

PersonState person(int id, double x, double y, double speed, double alpha) {
    return {id, {x, y}, {speed, 0.0}, speed, alpha};
}

FrameState frame_of(std::vector<PersonState> persons) {
    FrameState f;
    f.frame = 0;
    f.persons = std::move(persons);
    return f;
}

}  // namespace

TEST_CASE("pair test: all three rules pass") {
    // d = 1.0 m, heading difference 10 deg, speed difference 2% of the higher.
    CHECK(pair_test(person(1, 0, 0, 1.00, 0), person(2, 1, 0, 1.02, 10), {}));
}

TEST_CASE("pair test: thresholds") {
    CHECK_FALSE(pair_test(person(1, 0, 0, 1.0, 0), person(2, 1.21, 0, 1.0, 0), {}));
    CHECK(pair_test(person(1, 0, 0, 1.0, 0), person(2, 1.2, 0, 1.0, 0), {}));  // inclusive
    CHECK_FALSE(pair_test(person(1, 0, 0, 1.0, 0), person(2, 1, 0, 1.0, 16), {}));
    CHECK(pair_test(person(1, 0, 0, 1.0, 0), person(2, 1, 0, 1.0, 15), {}));   // inclusive
}

TEST_CASE("pair test: speed rule is strict and scaled by the higher speed") {
    // |1.06 - 1.00| = 0.06 > 0.05 * 1.06
    CHECK_FALSE(pair_test(person(1, 0, 0, 1.00, 0), person(2, 1, 0, 1.06, 0), {}));
    // |1.05 - 1.00| = 0.05 < 0.0525
    CHECK(pair_test(person(1, 0, 0, 1.00, 0), person(2, 1, 0, 1.05, 0), {}));
}

TEST_CASE("pair test: two standing agents form a pair") {
    CHECK(pair_test(person(1, 0, 0, 0.0, 0), person(2, 0.5, 0, 0.0, 0), {}));
    // one standing, one walking: 0.05 * max fails against the full difference
    CHECK_FALSE(pair_test(person(1, 0, 0, 0.0, 0), person(2, 0.5, 0, 1.0, 0), {}));
}

TEST_CASE("detect: pairs sharing a member merge into one group") {
    // (A,B) and (B,C) pass pairwise; (A,C) alone would fail the distance rule.
    const auto f = frame_of({person(1, 0.0, 0, 1.0, 0), person(2, 1.1, 0, 1.0, 0),
                             person(3, 2.2, 0, 1.0, 0)});
    const auto groups = detect_groups(f, {});
    REQUIRE(groups.size() == 1);
    CHECK(groups[0] == std::vector<int>{1, 2, 3});
}

TEST_CASE("detect: no passing pairs yields no groups") {
    const auto f = frame_of({person(1, 0, 0, 1.0, 0), person(2, 5, 0, 1.0, 0)});
    CHECK(detect_groups(f, {}).empty());
}

TEST_CASE("detect: two disjoint pairs stay two groups") {
    const auto f = frame_of({person(1, 0, 0, 1.0, 0), person(2, 1, 0, 1.0, 0),
                             person(3, 10, 0, 1.0, 0), person(4, 11, 0, 1.0, 0)});
    const auto groups = detect_groups(f, {});
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == std::vector<int>{1, 2});
    CHECK(groups[1] == std::vector<int>{3, 4});
    CHECK(groups == synth::oracle_detect_groups(f, {}));
}

TEST_CASE("detect equals the transitive-closure oracle on random frames") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto d = synth::random_scene(seed, 20, 10);
        const auto frames = build_frame_states(derive_all_kinematics(d));
        for (const auto& frame : frames) {
            CHECK(detect_groups(frame, {}) == synth::oracle_detect_groups(frame, {}));
        }
    }
}

TEST_CASE("groups are disjoint") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        const auto d = synth::random_scene(seed, 20, 5);
        const auto frames = build_frame_states(derive_all_kinematics(d));
        for (const auto& frame : frames) {
            std::set<int> seen;
            for (const auto& g : detect_groups(frame, {})) {
                CHECK(g.size() >= 2);
                for (int id : g) {
                    CHECK(seen.insert(id).second);  // no person in two groups
                }
            }
        }
    }
}

TEST_CASE("enlarging max_distance only merges groups, never splits them") {
    for (std::uint64_t seed = 200; seed < 215; ++seed) {
        const auto d = synth::random_scene(seed, 15, 4);
        const auto frames = build_frame_states(derive_all_kinematics(d));
        GroupRuleConfig narrow;
        GroupRuleConfig wide;
        wide.max_distance = 2.5;
        for (const auto& frame : frames) {
            const auto small = detect_groups(frame, narrow);
            const auto large = detect_groups(frame, wide);
            // every small group is contained in exactly one large group
            for (const auto& g : small) {
                int containers = 0;
                for (const auto& big : large) {
                    const bool contains = std::includes(big.begin(), big.end(), g.begin(), g.end());
                    if (contains) ++containers;
                }
                CHECK(containers == 1);
            }
        }
    }
}

TEST_CASE("group stats: lockstep pair at fixed 1 m") {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::lockstep_pair;
    spec.spacing = 1.0;
    spec.speed = 0.05;
    spec.frames = 10;
    const auto frames = build_frame_states(derive_all_kinematics(synth::generate(spec)));
    const auto g = group_stats({1, 2}, 1, frames);
    CHECK(g.mean_distance == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(g.mean_speed == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(g.mean_alpha_deg == doctest::Approx(0.0));
}

TEST_CASE("group stats: means over members and frames") {
    // two members at constant speeds 1.0 and 1.2 -> mean 1.1;
    // distances 1.0 then 1.2 across two frames -> mean 1.1
    std::vector<FrameState> frames(2);
    frames[0].frame = 0;
    frames[0].persons = {person(1, 0, 0, 1.0, 0), person(2, 1.0, 0, 1.2, 0)};
    frames[1].frame = 1;
    frames[1].persons = {person(1, 0, 0, 1.0, 0), person(2, 1.2, 0, 1.2, 0)};
    const auto g = group_stats({1, 2}, 1, frames);
    CHECK(g.mean_speed == doctest::Approx(1.1));
    CHECK(g.mean_distance == doctest::Approx(1.1));
}

TEST_CASE("video groups: stable pairs pass the 50% co-grouping rule") {
    // Pair grouped in 6 of 10 co-present frames -> video group;
    // a second pair grouped in 4 of 10 -> none.
    std::vector<FrameState> frames;
    for (int f = 0; f < 10; ++f) {
        FrameState fs;
        fs.frame = f;
        const double near12 = f < 6 ? 1.0 : 3.0;   // grouped while close
        const double near34 = f < 4 ? 1.0 : 3.0;
        fs.persons = {person(1, 0, 0, 1.0, 0), person(2, near12, 0, 1.0, 0),
                      person(3, 20, 0, 1.0, 0), person(4, 20 + near34, 0, 1.0, 0)};
        frames.push_back(fs);
    }
    const auto per_frame = detect_groups_per_frame(frames, {});
    const auto video = detect_video_groups(frames, per_frame, 0.5);
    REQUIRE(video.size() == 1);
    CHECK(video[0].group.members == std::vector<int>{1, 2});
    CHECK(video[0].frames_grouped == 6);
    CHECK(video[0].frames_copresent == 10);
}

TEST_CASE("video groups: lockstep pair is stable over the whole video") {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::lockstep_pair;
    spec.spacing = 1.0;
    spec.frames = 100;
    const auto frames = build_frame_states(derive_all_kinematics(synth::generate(spec)));
    const auto video = detect_video_groups(frames, detect_groups_per_frame(frames, {}), 0.5);
    REQUIRE(video.size() == 1);
    CHECK(video[0].frames_grouped == 100);
    CHECK(video[0].frames_copresent == 100);
}
