#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "crowdtraits/errors.hpp"
#include "crowdtraits/kinematics.hpp"
#include "crowdtraits/ocean.hpp"
#include "crowdtraits/synth.hpp"

using namespace crowdtraits;

namespace {

FrameFeatures features_of(double s, double alpha, double iso, double soc, double col) {
    FrameFeatures f;
    f.speed = s;
    f.alpha_deg = alpha;
    f.isolation = iso;
    f.socialization = soc;
    f.collectivity = col;
    return f;
}

FeatureTable table_for(const SceneDataset& d) {
    const auto kin = derive_all_kinematics(d);
    return feature_vector(build_frame_states(kin), kin);
}

bool in_unit_interval(const PersonalityVector& p) {
    for (double v : p.as_array()) {
        if (v < 0.0 || v > 1.0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("item equations: lone straight walker") {
    // isolation 1, socialization 0, collectivity 0, alpha 0
    const auto q = answer_items(features_of(1.0, 0.0, 1.0, 0.0, 0.0), 0.0);
    for (int k = 16; k <= 21; ++k) CHECK(q[k - 1] == 0.0);      // Q16..Q21 = socialization
    CHECK(q[0] == doctest::Approx(1.0 + 1.0 / 1e-3));           // Q1 = s + 1/(alpha+eps)
    CHECK(q[1] == 0.0);                                         // Q2 = alpha
    for (int k = 3; k <= 8; ++k) CHECK(q[k - 1] == 1.0);        // Q3..Q8 = isolation
    CHECK(q[8] == 0.0);                                         // Q9 = collectivity
    CHECK(q[11] == doctest::Approx(1.0));                       // Q12 = s + alpha
}

TEST_CASE("item equations: Q15 is the guarded reciprocal of Q14") {
    for (double col : {0.0, 0.5, 2.0}) {
        const auto q = answer_items(features_of(0.7, 23.0, 0.4, 0.25, col), 1.5);
        CHECK(q[14] == doctest::Approx(1.0 / (q[13] + 1e-3)).epsilon(1e-15));
    }
}

TEST_CASE("item equations: lockstep partners score 1.5 on Q22-Q25") {
    // collectivity term 1 from the single partner, socialization 1/2
    const auto q = answer_items(features_of(0.05, 0.0, 0.2778, 0.5, 1.0), 0.0);
    for (int k = 22; k <= 25; ++k) CHECK(q[k - 1] == doctest::Approx(1.5));
}

TEST_CASE("item equations: Q11 adds the running heading-change deviation") {
    const auto q = answer_items(features_of(1.0, 10.0, 0.3, 0.1, 0.2), 7.5);
    CHECK(q[10] == doctest::Approx(0.3 + 7.5));
}

TEST_CASE("item normalization: min-max to [0, 4]") {
    std::vector<ItemAnswers> answers(3);
    for (int i = 0; i < 3; ++i) {
        answers[i].raw.fill(5.0);           // constant everywhere else
        answers[i].raw[4] = double(i);      // {0, 1, 2} on item 5
        answers[i].raw[9] = i == 0 ? 1 : 3; // {1, 3, 3} on item 10
    }
    normalize_items(answers);
    CHECK(answers[0].normalized[4] == 0.0);
    CHECK(answers[1].normalized[4] == 2.0);
    CHECK(answers[2].normalized[4] == 4.0);
    CHECK(answers[0].normalized[0] == 2.0);  // constant item -> midpoint
    CHECK(answers[0].normalized[9] == 0.0);  // two-point stretch
    CHECK(answers[2].normalized[9] == 4.0);
}

TEST_CASE("inversion: endpoints, fixed point, involution") {
    ItemArray a{};
    a.fill(4.0);
    auto inv = invert_items(a);
    CHECK(inv[1] == 0.0);   // item 2 is inverted
    CHECK(inv[0] == 4.0);   // item 1 is not

    a.fill(2.0);
    inv = invert_items(a);
    CHECK(inv[1] == 2.0);   // midpoint is a fixed point

    a.fill(0.0);
    CHECK(invert_items(a)[1] == 4.0);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int iter = 0; iter < 20; ++iter) {
        ItemArray r{};
        for (auto& v : r) v = u(rng);
        const auto twice = invert_items(invert_items(r));
        for (int k = 0; k < kItemCount; ++k) {
            CHECK(twice[k] == doctest::Approx(r[k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("the reverse-scored items are exactly the starred set") {
    const std::set<int> starred = {2, 4, 5, 6, 7, 8, 11, 15, 24, 25};
    for (int item = 1; item <= kItemCount; ++item) {
        CHECK(item_is_inverted(item) == (starred.count(item) > 0));
    }
}

TEST_CASE("aggregation: extreme and midpoint answers") {
    ItemArray a{};
    a.fill(4.0);
    auto p = aggregate_dimensions(a);
    CHECK(p.openness == 1.0);
    CHECK(p.conscientiousness == 1.0);
    CHECK(p.extraversion == 1.0);
    CHECK(p.agreeableness == 1.0);
    CHECK(p.neuroticism == 1.0);

    a.fill(0.0);
    p = aggregate_dimensions(a);
    for (double v : p.as_array()) CHECK(v == 0.0);

    a.fill(2.0);  // all 18 extraversion items at the midpoint
    CHECK(aggregate_dimensions(a).extraversion == doctest::Approx(0.5));
}

TEST_CASE("literal aggregation divides by the dimension percentage") {
    ItemArray a{};
    a.fill(1.0);
    const auto p = aggregate_dimensions_literal(a);
    CHECK(p.openness == doctest::Approx(1.0 / 0.04));
    CHECK(p.conscientiousness == doctest::Approx(1.0 / 0.04));
    CHECK(p.extraversion == doctest::Approx(18.0 / 0.72));
    CHECK(p.agreeableness == doctest::Approx(2.0 / 0.08));
    CHECK(p.neuroticism == doctest::Approx(3.0 / 0.12));
}

TEST_CASE("person ocean: constant scene gives per-frame equal to the mean") {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::lockstep_pair;
    spec.frames = 10;
    const auto result = person_ocean(table_for(synth::generate(spec)));
    for (const auto& person : result.persons) {
        for (const auto& v : person.per_frame) {
            for (int d = 0; d < 5; ++d) {
                CHECK(v.as_array()[d] == doctest::Approx(person.video.as_array()[d]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("person ocean: identical walkers get identical vectors") {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::lockstep_pair;
    spec.frames = 20;
    const auto result = person_ocean(table_for(synth::generate(spec)));
    REQUIRE(result.persons.size() == 2);
    const auto a = result.persons[0].video.as_array();
    const auto b = result.persons[1].video.as_array();
    for (int d = 0; d < 5; ++d) CHECK(a[d] == doctest::Approx(b[d]).epsilon(1e-12));
}

TEST_CASE("person ocean: relabeling ids changes no scores") {
    auto d = synth::random_scene(42, 8, 15);
    auto relabeled = d;
    for (auto& t : relabeled.trajectories) t.person_id += 100;
    const auto r1 = person_ocean(table_for(d));
    const auto r2 = person_ocean(table_for(relabeled));
    REQUIRE(r1.persons.size() == r2.persons.size());
    for (std::size_t i = 0; i < r1.persons.size(); ++i) {
        CHECK(r2.persons[i].person_id == r1.persons[i].person_id + 100);
        const auto a = r1.persons[i].video.as_array();
        const auto b = r2.persons[i].video.as_array();
        for (int k = 0; k < 5; ++k) CHECK(a[k] == b[k]);
    }
}

TEST_CASE("person ocean: all dimensions within [0, 1] on random scenes, both modes") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto table = table_for(synth::random_scene(seed, 10, 20));
        for (const OceanMode mode : {OceanMode::normalized, OceanMode::literal}) {
            const auto result = person_ocean(table, mode);
            for (const auto& person : result.persons) {
                CHECK(in_unit_interval(person.video));
                for (const auto& v : person.per_frame) CHECK(in_unit_interval(v));
            }
        }
    }
}

TEST_CASE("missing person lookup throws") {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::lone_walker;
    const auto result = person_ocean(table_for(synth::generate(spec)));
    CHECK_NOTHROW(find_person(result, 1));
    CHECK_THROWS_AS(find_person(result, 99), MissingPersonError);
}

TEST_CASE("group ocean is the member mean") {
    const PersonalityVector a{0.2, 0.4, 0.6, 0.8, 1.0};
    const PersonalityVector b{0.6, 0.4, 0.2, 0.0, 0.5};
    const std::vector<PersonalityVector> members = {a, b};
    const auto g = group_ocean(members);
    CHECK(g.openness == doctest::Approx(0.4));
    CHECK(g.agreeableness == doctest::Approx(0.4));

    const std::vector<PersonalityVector> solo = {a};
    CHECK(group_ocean(solo).openness == doctest::Approx(a.openness));  // idempotent mean
}

TEST_CASE("lockstep cluster members out-extravert lone wanderers") {
    synth::ScenarioSpec cluster;
    cluster.kind = synth::ScenarioKind::cluster;
    cluster.n = 4;
    cluster.spacing = 0.8;
    cluster.speed = 0.05;
    cluster.frames = 60;
    const auto scene = synth::merge({synth::generate(cluster), synth::wanderers(4, 60, 0.05, 9)});
    const auto result = person_ocean(table_for(scene));
    REQUIRE(result.persons.size() == 8);
    double min_cluster_e = 1.0, max_wanderer_e = 0.0;
    for (const auto& person : result.persons) {
        if (person.person_id <= 4) {
            min_cluster_e = std::min(min_cluster_e, person.video.extraversion);
        } else {
            max_wanderer_e = std::max(max_wanderer_e, person.video.extraversion);
        }
    }
    CHECK(min_cluster_e > max_wanderer_e);
}
