#pragma once

// Deterministic synthetic series: three PRNG-driven distributions plus the
// Conway recurrence and a unit-step random walk.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vgs/errors.hpp"

namespace vgs {

enum class SeriesKind { Uniform01, StdNormal, ExponentialUnit, Conway, RandomWalk };

const char* to_string(SeriesKind kind);
std::optional<SeriesKind> series_kind_from_name(std::string_view name);

struct GeneratorSpec {
    SeriesKind kind = SeriesKind::Uniform01;
    std::size_t length = 0;
    std::uint64_t seed = 0;  // ignored for Conway
};

// xoshiro256** seeded through splitmix64. Integer stream is bit-exact across
// platforms; the distribution mappings are documented in the README.
class Rng64 {
public:
    explicit Rng64(std::uint64_t seed);

    std::uint64_t next();

    // [0, 1), 53-bit mantissa scaling of the top bits.
    double uniform01();

    // Standard normal via Box-Muller; the second deviate of each pair is
    // cached and returned by the following call.
    double normal();

    // Unit-rate exponential via inverse CDF.
    double exponential();

private:
    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Deterministic for a given spec: same (kind, length, seed) always yields the
// same sequence. Length 0 is rejected.
std::vector<double> generate(const GeneratorSpec& spec);

}  // namespace vgs
