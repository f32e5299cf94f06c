#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "galq/family.hpp"
#include "galq/quantize.hpp"

namespace galq {

/// Run configuration, read from a JSON object. Every key except "n" is optional;
/// unknown keys are rejected.
struct RunConfig {
    long long n = 0;
    int m = 1;
    std::vector<long long> potential{0, 0, 1};  // V = q^2
    std::optional<std::vector<Rational>> initial_wavefunction;  // default: delta at q = 1
    long long steps = 0;
    std::optional<unsigned> precision;  // default 30 (or GALQ_PRECISION)
    EvolutionMode mode = EvolutionMode::full;
    std::uint64_t seed = 0;
    ExponentLift lift = ExponentLift::symmetric;

    PotentialSpec potential_spec() const { return PotentialSpec(n, potential); }
    WaveFunction initial(int conductor = 1) const;
};

inline constexpr unsigned kDefaultPrecision = 30;
inline constexpr unsigned kMinPrecision = 15;

// `source` names the text in error messages, which read "source:line:col: ...".
RunConfig parse_config(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

// Explicit value, else GALQ_PRECISION, else 30; throws ConfigError below 15.
unsigned resolve_precision(std::optional<unsigned> explicit_value);

}  // namespace galq
