#include "crowdtraits/emotion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "minmax.hpp"

namespace crowdtraits {

namespace {

// Contribution table, factor-major (O, C, E, A, N), sign (plus, minus),
// emotion (Fear, Happiness, Sadness, Anger).
constexpr int kTable[5][2][4] = {
    // O
    {{0, 0, 0, -1}, {0, 0, 0, 1}},
    // C
    {{-1, 0, 0, 0}, {1, 0, 0, 0}},
    // E
    {{-1, 1, -1, -1}, {1, 0, 0, 0}},
    // A
    {{0, 0, 0, -1}, {0, 0, 0, 1}},
    // N
    {{1, -1, 1, 1}, {-1, 1, -1, -1}},
};

}  // namespace

FactorSign factor_sign(double value) {
    return value >= 0.5 ? FactorSign::plus : FactorSign::minus;
}

int emotion_contribution(int factor, FactorSign sign, int emotion) {
    return kTable[factor][sign == FactorSign::plus ? 0 : 1][emotion];
}

EmotionVector map_emotions(const PersonalityVector& p, EmotionMode mode) {
    const auto factors = p.as_array();
    std::array<double, 4> sums{};
    for (int f = 0; f < 5; ++f) {
        const FactorSign sign = factor_sign(factors[f]);
        const double weight = mode == EmotionMode::weighted
                                  ? 2.0 * std::abs(factors[f] - 0.5)
                                  : 1.0;
        for (int e = 0; e < 4; ++e) {
            sums[e] += weight * emotion_contribution(f, sign, e);
        }
    }
    return {sums[0], sums[1], sums[2], sums[3]};
}

std::vector<EmotionVector> normalize_emotions(std::span<const EmotionVector> values,
                                              std::span<const EmotionVector> pool) {
    std::array<double, 4> lo, hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (const auto& v : pool) {
        const auto arr = v.as_array();
        for (int e = 0; e < 4; ++e) {
            lo[e] = std::min(lo[e], arr[e]);
            hi[e] = std::max(hi[e], arr[e]);
        }
    }
    std::vector<EmotionVector> out;
    out.reserve(values.size());
    for (const auto& v : values) {
        const auto arr = v.as_array();
        std::array<double, 4> n{};
        for (int e = 0; e < 4; ++e) {
            n[e] = detail::minmax_scale(arr[e], lo[e], hi[e], 1.0);
        }
        out.push_back({n[0], n[1], n[2], n[3]});
    }
    return out;
}

std::vector<EmotionVector> normalize_emotions(std::span<const EmotionVector> values) {
    return normalize_emotions(values, values);
}

EmotionVector group_emotion(std::span<const EmotionVector> members) {
    EmotionVector mean;
    for (const auto& v : members) {
        mean.fear += v.fear;
        mean.happiness += v.happiness;
        mean.sadness += v.sadness;
        mean.anger += v.anger;
    }
    const double n = members.empty() ? 1.0 : static_cast<double>(members.size());
    return {mean.fear / n, mean.happiness / n, mean.sadness / n, mean.anger / n};
}

}  // namespace crowdtraits
