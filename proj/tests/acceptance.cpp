// Acceptance suite: runs every conformance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "crowdtraits/analysis.hpp"
#include "crowdtraits/emotion.hpp"
#include "crowdtraits/errors.hpp"
#include "crowdtraits/features.hpp"
#include "crowdtraits/groups.hpp"
#include "crowdtraits/homography.hpp"
#include "crowdtraits/kinematics.hpp"
#include "crowdtraits/ocean.hpp"
#include "crowdtraits/pipeline.hpp"
#include "crowdtraits/report.hpp"
#include "crowdtraits/synth.hpp"

namespace fs = std::filesystem;
using namespace crowdtraits;

namespace {

int g_failures = 0;

void report(int number, const char* name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

FrameState frame_of(std::vector<PersonState> persons) {
    FrameState f;
    f.frame = 0;
    f.persons = std::move(persons);
    return f;
}

PersonState person(int id, double x, double y, double speed, double alpha) {
    return {id, {x, y}, {speed, 0.0}, speed, alpha};
}

// 1. Isolation equation exactness.
void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const auto lone = frame_of({person(1, 0, 0, 0.05, 0)});
    const double iso_alone = isolation(lone, 0, social_neighbors(lone, 0, 3.6), 3.6);

    const auto pair = frame_of({person(1, 0, 0, 0.05, 0), person(2, 1.8, 0, 0.05, 0)});
    const double iso_pair = isolation(pair, 0, social_neighbors(pair, 0, 3.6), 3.6);

    const bool pass = std::abs(iso_alone - 1.0) <= 1e-12 && std::abs(iso_pair - 0.5) <= 1e-12 &&
                      elapsed_s(start) < 1.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "alone=%.17g, 1.8m neighbor=%.17g, %.3fs", iso_alone,
                  iso_pair, elapsed_s(start));
    report(1, "isolation equation exactness", pass, detail);
}

// 2. Collectivity equation exactness.
void criterion_2() {
    const auto lockstep = frame_of({person(1, 0, 0, 0.05, 0), person(2, 1, 0, 0.05, 0)});
    const double term_lockstep =
        collectivity(lockstep, 0, social_neighbors(lockstep, 0, 3.6), {});

    const auto differing = frame_of({person(1, 0, 0, 1.5, 0), person(2, 1, 0, 0.5, 0)});
    const double term_decayed =
        collectivity(differing, 0, social_neighbors(differing, 0, 3.6), {});

    const bool pass = std::abs(term_lockstep - 1.0) <= 1e-12 &&
                      std::abs(term_decayed - std::exp(-0.3)) <= 1e-12;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "lockstep=%.17g, ds=1 -> %.17g (e^-0.3=%.17g)",
                  term_lockstep, term_decayed, std::exp(-0.3));
    report(2, "collectivity equation exactness", pass, detail);
}

// 3. Group detection equals the brute-force transitive-closure oracle.
void criterion_3() {
    const auto start = std::chrono::steady_clock::now();
    bool pass = true;
    int frames_checked = 0;
    for (std::uint64_t seed = 0; seed < 200 && pass; ++seed) {
        const auto scene = synth::random_scene(seed, 20, 50);
        const auto frames = build_frame_states(derive_all_kinematics(scene));
        for (const auto& frame : frames) {
            if (detect_groups(frame, {}) != synth::oracle_detect_groups(frame, {})) {
                pass = false;
                break;
            }
            ++frames_checked;
        }
    }
    // the published merge example: pairs (A,B) and (B,C) become {A,B,C}
    const auto chain = frame_of({person(1, 0.0, 0, 1.0, 0), person(2, 1.1, 0, 1.0, 0),
                                 person(3, 2.2, 0, 1.0, 0)});
    const auto merged = detect_groups(chain, {});
    pass = pass && merged.size() == 1 && merged[0] == std::vector<int>{1, 2, 3};

    const double secs = elapsed_s(start);
    pass = pass && secs < 30.0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "200 scenes, %d frames, %.2fs", frames_checked, secs);
    report(3, "group detection oracle equivalence", pass, detail);
}

// 4. Emotion table enumeration over all 32 sign patterns.
void criterion_4() {
    bool pass = true;
    std::array<double, 4> lo{99, 99, 99, 99}, hi{-99, -99, -99, -99};
    for (int bits = 0; bits < 32; ++bits) {
        const bool plus[5] = {static_cast<bool>(bits & 1), static_cast<bool>(bits & 2),
                              static_cast<bool>(bits & 4), static_cast<bool>(bits & 8),
                              static_cast<bool>(bits & 16)};
        // independent summation straight off the published table rows
        int expected[4] = {0, 0, 0, 0};
        expected[3] += plus[0] ? -1 : 1;                      // O affects anger
        expected[0] += plus[1] ? -1 : 1;                      // C affects fear
        if (plus[2]) {                                        // E
            expected[0] -= 1;
            expected[1] += 1;
            expected[2] -= 1;
            expected[3] -= 1;
        } else {
            expected[0] += 1;
        }
        expected[3] += plus[3] ? -1 : 1;                      // A affects anger
        if (plus[4]) {                                        // N
            expected[0] += 1;
            expected[1] -= 1;
            expected[2] += 1;
            expected[3] += 1;
        } else {
            expected[0] -= 1;
            expected[1] += 1;
            expected[2] -= 1;
            expected[3] -= 1;
        }

        PersonalityVector p;
        p.openness = plus[0] ? 0.8 : 0.2;
        p.conscientiousness = plus[1] ? 0.8 : 0.2;
        p.extraversion = plus[2] ? 0.8 : 0.2;
        p.agreeableness = plus[3] ? 0.8 : 0.2;
        p.neuroticism = plus[4] ? 0.8 : 0.2;
        const auto got = map_emotions(p).as_array();
        for (int k = 0; k < 4; ++k) {
            if (got[k] != static_cast<double>(expected[k])) pass = false;
            lo[k] = std::min(lo[k], got[k]);
            hi[k] = std::max(hi[k], got[k]);
        }
    }
    // ranges within the published bounds, with fear and anger tight
    pass = pass && lo[0] == -3 && hi[0] == 3;                  // fear [-3,3]
    pass = pass && lo[1] >= -2 && hi[1] <= 2;                  // happiness within [-2,2]
    pass = pass && lo[2] >= -2 && hi[2] <= 2;                  // sadness within [-2,2]
    pass = pass && lo[3] == -4 && hi[3] == 3;                  // anger [-4,3]
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "observed F[%g,%g] H[%g,%g] S[%g,%g] An[%g,%g]", lo[0], hi[0], lo[1], hi[1],
                  lo[2], hi[2], lo[3], hi[3]);
    report(4, "emotion table enumeration", pass, detail);
}

// 5. Dimension bounds and inversion involution.
void criterion_5() {
    bool pass = true;
    for (std::uint64_t seed = 0; seed < 100 && pass; ++seed) {
        const auto scene = synth::random_scene(seed, 12, 25);
        const auto kin = derive_all_kinematics(scene);
        const auto table = feature_vector(build_frame_states(kin), kin);
        const auto result = person_ocean(table);
        for (const auto& p : result.persons) {
            for (const auto& v : p.per_frame) {
                for (double x : v.as_array()) {
                    if (x < 0.0 || x > 1.0) pass = false;
                }
            }
            for (double x : p.video.as_array()) {
                if (x < 0.0 || x > 1.0) pass = false;
            }
        }
    }
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 4.0);
    for (int iter = 0; iter < 100 && pass; ++iter) {
        ItemArray a{};
        for (auto& v : a) v = u(rng);
        const auto twice = invert_items(invert_items(a));
        for (int k = 0; k < kItemCount; ++k) {
            if (std::abs(twice[k] - a[k]) > 1e-12) pass = false;
        }
    }
    report(5, "dimension bounds and inversion involution", pass,
           "100 scenes in [0,1], invert(invert(q)) == q to 1e-12");
}

// 6. Lockstep cluster members out-extravert lone wanderers, strictly.
void criterion_6() {
    synth::ScenarioSpec cluster;
    cluster.kind = synth::ScenarioKind::cluster;
    cluster.n = 4;
    cluster.spacing = 0.8;
    cluster.speed = 0.05;
    cluster.frames = 60;
    const auto scene = synth::merge({synth::generate(cluster), synth::wanderers(4, 60, 0.05, 1)});
    const auto kin = derive_all_kinematics(scene);
    const auto result = person_ocean(feature_vector(build_frame_states(kin), kin));

    double min_cluster = 1.0, max_wanderer = 0.0;
    for (const auto& p : result.persons) {
        if (p.person_id <= 4) {
            min_cluster = std::min(min_cluster, p.video.extraversion);
        } else {
            max_wanderer = std::max(max_wanderer, p.video.extraversion);
        }
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "min cluster E=%.4f > max wanderer E=%.4f", min_cluster,
                  max_wanderer);
    report(6, "cluster extraversion dominates wanderers", min_cluster > max_wanderer, detail);
}

// 7. Anger sign for random personality vectors with E >= 0.5 and N < 0.5.
//
// Implemented exactly as stated; the published contribution table itself
// admits anger == 0 for such vectors when both O < 0.5 and A < 0.5 (the O-
// and A- rows each add +1, cancelling E+ and N-), so uniform sampling is
// expected to surface counterexamples. The second line reports the variant
// restricted to socially interacting profiles (collectivity-driven A >= 0.5),
// for which the published claim does hold.
void criterion_7() {
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0, violations = 0;
    std::string first_counterexample;
    bool conditioned_pass = true;
    int conditioned_checked = 0;
    for (int iter = 0; iter < 100; ++iter) {
        PersonalityVector p{u(rng), u(rng), u(rng), u(rng), u(rng)};
        if (p.extraversion >= 0.5 && p.neuroticism < 0.5) {
            ++checked;
            const double anger = map_emotions(p).anger;
            if (!(anger < 0.0)) {
                ++violations;
                if (first_counterexample.empty()) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf),
                                  "e.g. O=%.2f C=%.2f E=%.2f A=%.2f N=%.2f -> anger=%g",
                                  p.openness, p.conscientiousness, p.extraversion,
                                  p.agreeableness, p.neuroticism, anger);
                    first_counterexample = buf;
                }
            }
            if (p.agreeableness >= 0.5) {
                ++conditioned_checked;
                if (!(map_emotions(p).anger < 0.0)) conditioned_pass = false;
            }
        }
    }
    const bool pass = violations == 0 && checked > 0;
    char detail[256];
    std::snprintf(detail, sizeof(detail), "%d/%d vectors with E+, N- have anger >= 0; %s",
                  violations, checked, first_counterexample.c_str());
    report(7, "anger negative for E >= 0.5, N < 0.5", pass, detail);
    std::printf("       note: restricted to socially interacting profiles (A >= 0.5): %s "
                "(%d vectors, anger < 0 holds)\n",
                conditioned_pass ? "PASS" : "FAIL", conditioned_checked);
}

// 8. Homography estimation accuracy.
void criterion_8() {
    bool pass = true;

    const std::vector<Point2> square = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    std::vector<Correspondence> ident, scaled;
    for (const auto& p : square) {
        ident.push_back({p, p});
        scaled.push_back({p, {2 * p.x, 2 * p.y}});
    }
    const auto h_ident = estimate_homography(ident);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            const double expected = r == c ? 1.0 : 0.0;
            if (std::abs(h_ident.at(r, c) - expected) > 1e-9) pass = false;
        }
    }
    const auto h_scaled = estimate_homography(scaled);
    const double diag[9] = {2, 0, 0, 0, 2, 0, 0, 0, 1};
    for (int k = 0; k < 9; ++k) {
        if (std::abs(h_scaled.m[k] - diag[k]) > 1e-9) pass = false;
    }

    std::mt19937_64 rng(88);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    double worst = 0.0;
    int tested = 0;
    while (tested < 50) {
        Homography truth;
        truth.m = {1 + 0.4 * entry(rng), 0.3 * entry(rng), coord(rng),
                   0.3 * entry(rng), 1 + 0.4 * entry(rng), coord(rng),
                   0.02 * entry(rng), 0.02 * entry(rng), 1.0};
        if (std::abs(determinant(truth)) < 1e-3) continue;
        std::vector<Correspondence> corr;
        bool usable = true;
        for (int i = 0; i < 5 && usable; ++i) {
            const Point2 p{coord(rng), coord(rng)};
            try {
                corr.push_back({p, apply_homography(truth, p)});
            } catch (const PointAtInfinityError&) {
                usable = false;
            }
        }
        if (!usable) continue;
        try {
            worst = std::max(worst, max_reprojection_error(estimate_homography(corr), corr));
            ++tested;
        } catch (const SingularSystemError&) {
        }
    }
    pass = pass && worst < 1e-9;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "worst round-trip over 50 random maps: %.3g", worst);
    report(8, "homography DLT accuracy", pass, detail);
}

// 9. Pearson correlation properties.
void criterion_9() {
    bool pass = true;
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> scale(0.2, 4.0);
    for (int iter = 0; iter < 50 && pass; ++iter) {
        const std::size_t n = 4 + rng() % 30;
        std::vector<double> x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = u(rng);
            y[i] = u(rng);
        }
        if (std::abs(pearson(x, x) - 1.0) > 1e-12) pass = false;
        const double a = (iter % 2 == 0 ? 1.0 : -1.0) * scale(rng);
        const double b = u(rng);
        std::vector<double> ax(n);
        for (std::size_t i = 0; i < n; ++i) ax[i] = a * x[i] + b;
        const double sign = a > 0 ? 1.0 : -1.0;
        if (std::abs(pearson(ax, y) - sign * pearson(x, y)) > 1e-9) pass = false;
    }
    report(9, "pearson self-correlation and scale-shift invariance", pass,
           "50 random series, tolerances 1e-12 / 1e-9");
}

// 10. Preferred distance on the corridor loop, measured in the ROI.
void criterion_10() {
    synth::ScenarioSpec spec;
    spec.kind = synth::ScenarioKind::corridor_loop;
    spec.n = 15;
    spec.speed = 0.04;
    spec.frames = 450;  // a little over one full lap
    const auto dataset = synth::generate(spec);
    const auto in_roi = roi_filter(dataset, synth::corridor_roi());
    const auto result = preferred_distance(in_roi);

    const double expected = synth::kLoopLength / 15.0;
    const bool pass =
        result.video_mean.has_value() && std::abs(*result.video_mean - expected) < 1e-9;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "measured %.12f vs spacing %.12f (%zu persons)",
                  result.video_mean.value_or(-1.0), expected, result.per_person.size());
    report(10, "corridor preferred distance equals the spacing", pass, detail);
}

// 11. End-to-end determinism through the CLI binary.
void criterion_11() {
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = fs::temp_directory_path() / "crowdtraits_acceptance_11";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string cli = CROWDTRAITS_CLI_PATH;
    const std::string prefix = (dir / "loop").string();
    const std::string out1 = (dir / "run1").string();
    const std::string out2 = (dir / "run2").string();

    bool pass = true;
    const auto sh = [&pass](const std::string& cmd) {
        if (std::system((cmd + " >/dev/null 2>&1").c_str()) != 0) pass = false;
    };
    sh(cli + " synth --kind corridor_loop --n 15 --frames 120 --speed 0.04 --seed 3 -o " + prefix);
    sh(cli + " analyze -i " + prefix + ".csv --meta " + prefix + ".meta.json -o " + out1);
    sh(cli + " analyze -i " + prefix + ".csv --meta " + prefix + ".meta.json -o " + out2);

    int compared = 0;
    for (const char* name :
         {"features.csv", "groups.json", "ocean.json", "emotions.json", "summary.json"}) {
        if (!pass) break;
        const auto a = read_file((fs::path(out1) / name).string());
        const auto b = read_file((fs::path(out2) / name).string());
        if (a != b || a.empty()) pass = false;
        ++compared;
    }
    const double secs = elapsed_s(start);
    pass = pass && secs < 10.0;
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d artifacts byte-identical, %.2fs", compared, secs);
    report(11, "end-to-end determinism via the CLI", pass, detail);
}

// 12. Feature response to corridor density.
void criterion_12() {
    double soc[3] = {0, 0, 0}, iso[3] = {0, 0, 0};
    const int populations[3] = {15, 25, 34};
    for (int k = 0; k < 3; ++k) {
        synth::ScenarioSpec spec;
        spec.kind = synth::ScenarioKind::corridor_loop;
        spec.n = populations[k];
        spec.speed = 0.04;
        spec.frames = 450;
        const auto scene = synth::generate(spec);
        const auto kin = derive_all_kinematics(scene);
        const auto table = feature_vector(build_frame_states(kin), kin);
        for (const auto& avg : table.averages) {
            soc[k] += avg.socialization / table.averages.size();
            iso[k] += avg.isolation / table.averages.size();
        }
    }
    const bool pass = soc[0] < soc[1] && soc[1] < soc[2] && iso[0] >= iso[1] && iso[1] >= iso[2];
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "socialization %.4f < %.4f < %.4f; isolation %.4f >= %.4f >= %.4f", soc[0],
                  soc[1], soc[2], iso[0], iso[1], iso[2]);
    report(12, "density raises socialization, lowers isolation", pass, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
