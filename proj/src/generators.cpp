#include "vgs/generators.hpp"

#include <cmath>
#include <numbers>

namespace vgs {

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Uniform01: return "uniform";
        case SeriesKind::StdNormal: return "normal";
        case SeriesKind::ExponentialUnit: return "exponential";
        case SeriesKind::Conway: return "conway";
        case SeriesKind::RandomWalk: return "walk";
    }
    return "?";
}

std::optional<SeriesKind> series_kind_from_name(std::string_view name) {
    if (name == "uniform") return SeriesKind::Uniform01;
    if (name == "normal") return SeriesKind::StdNormal;
    if (name == "exponential") return SeriesKind::ExponentialUnit;
    if (name == "conway") return SeriesKind::Conway;
    if (name == "walk") return SeriesKind::RandomWalk;
    return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace

Rng64::Rng64(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& lane : state_) lane = splitmix64(x);
}

std::uint64_t Rng64::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng64::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 drawn from (0, 1] so the log is finite
    const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

double Rng64::exponential() { return -std::log1p(-uniform01()); }

namespace {

std::vector<double> conway_series(std::size_t length) {
    // s(1) = s(2) = 1, s(t) = s(s(t-1)) + s(t - s(t-1)); 1-indexed recurrence
    // stored at 0-based positions, fully memoized since it reaches back
    // arbitrarily far
    std::vector<std::uint64_t> s(length + 1);
    for (std::size_t t = 1; t <= length; ++t) {
        if (t <= 2) {
            s[t] = 1;
        } else {
            const std::uint64_t prev = s[t - 1];
            s[t] = s[prev] + s[t - prev];
        }
    }
    std::vector<double> out(length);
    for (std::size_t t = 1; t <= length; ++t) out[t - 1] = static_cast<double>(s[t]);
    return out;
}

}  // namespace

std::vector<double> generate(const GeneratorSpec& spec) {
    if (spec.length == 0) throw EmptyInputError("generator length must be at least 1");
    std::vector<double> out;
    out.reserve(spec.length);
    switch (spec.kind) {
        case SeriesKind::Uniform01: {
            Rng64 rng(spec.seed);
            for (std::size_t i = 0; i < spec.length; ++i) out.push_back(rng.uniform01());
            break;
        }
        case SeriesKind::StdNormal: {
            Rng64 rng(spec.seed);
            for (std::size_t i = 0; i < spec.length; ++i) out.push_back(rng.normal());
            break;
        }
        case SeriesKind::ExponentialUnit: {
            Rng64 rng(spec.seed);
            for (std::size_t i = 0; i < spec.length; ++i) out.push_back(rng.exponential());
            break;
        }
        case SeriesKind::Conway:
            return conway_series(spec.length);
        case SeriesKind::RandomWalk: {
            Rng64 rng(spec.seed);
            double s = 0.0;
            out.push_back(s);
            for (std::size_t i = 1; i < spec.length; ++i) {
                s += (rng.next() >> 63) ? 1.0 : -1.0;
                out.push_back(s);
            }
            break;
        }
    }
    return out;
}

}  // namespace vgs
