#include "galq/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "galq/errors.hpp"

namespace galq {

namespace {

using nlohmann::json;

struct Location {
    std::size_t line = 1, column = 1;
};

Location locate_offset(const std::string& text, std::size_t offset) {
    Location loc;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++loc.line;
            loc.column = 1;
        } else {
            ++loc.column;
        }
    }
    return loc;
}

class Reporter {
public:
    Reporter(const std::string& text, const std::string& source) : text_(text), source_(source) {}

    [[noreturn]] void fail(const std::string& key, const std::string& message) const {
        const auto pos = text_.find("\"" + key + "\"");
        const Location loc = locate_offset(text_, pos == std::string::npos ? 0 : pos);
        throw ConfigError(source_ + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": '" + key +
                          "': " + message);
    }
    [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
        const Location loc = locate_offset(text_, offset);
        throw ConfigError(source_ + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                          message);
    }

private:
    const std::string& text_;
    const std::string& source_;
};

long long get_integer(const json& j, const std::string& key, const Reporter& r) {
    if (!j.is_number_integer()) r.fail(key, "expected an integer");
    return j.get<long long>();
}

}  // namespace

WaveFunction RunConfig::initial(int conductor) const {
    if (!initial_wavefunction) return WaveFunction::delta(n, 1, conductor);
    return WaveFunction::from_rationals(*initial_wavefunction, conductor);
}

RunConfig parse_config(const std::string& text, const std::string& source) {
    const Reporter report(text, source);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character
        report.fail_at(e.byte > 0 ? e.byte - 1 : 0, "invalid JSON: " + std::string(e.what()));
    }
    if (!doc.is_object()) report.fail_at(0, "configuration must be a JSON object");

    RunConfig cfg;
    bool have_n = false;
    for (const auto& [key, value] : doc.items()) {
        if (key == "n") {
            cfg.n = get_integer(value, key, report);
            if (cfg.n < 1 || cfg.n > (1LL << 31)) report.fail(key, "modulus n must lie in [1, 2^31]");
            have_n = true;
        } else if (key == "m") {
            const long long m = get_integer(value, key, report);
            if (m < 1 || m > 4096) report.fail(key, "extension order m must lie in [1, 4096]");
            cfg.m = static_cast<int>(m);
        } else if (key == "potential") {
            if (!value.is_array() || value.empty()) report.fail(key, "expected a non-empty list of integer coefficients a_0, a_1, ...");
            cfg.potential.clear();
            for (const auto& c : value) cfg.potential.push_back(get_integer(c, key, report));
        } else if (key == "initial_wavefunction") {
            if (!value.is_array() || value.empty()) report.fail(key, "expected a list of rationals, one per q");
            std::vector<Rational> psi;
            for (const auto& c : value) {
                try {
                    if (c.is_number_integer())
                        psi.push_back(Rational(big(c.get<long long>())));
                    else if (c.is_string())
                        psi.push_back(parse_rational(c.get<std::string>()));
                    else
                        report.fail(key, "entries must be integers or \"p/q\" strings");
                } catch (const ConfigError&) {
                    throw;
                } catch (const Error& e) {
                    report.fail(key, e.what());
                }
            }
            cfg.initial_wavefunction = std::move(psi);
        } else if (key == "steps") {
            cfg.steps = get_integer(value, key, report);
            if (cfg.steps < -100000 || cfg.steps > 100000) report.fail(key, "|steps| must not exceed 100000");
        } else if (key == "precision") {
            const long long p = get_integer(value, key, report);
            if (p < kMinPrecision || p > 10000) report.fail(key, "precision must lie in [15, 10000] digits");
            cfg.precision = static_cast<unsigned>(p);
        } else if (key == "mode") {
            if (!value.is_string()) report.fail(key, "expected \"full\" or \"potential_only\"");
            try {
                cfg.mode = parse_mode(value.get<std::string>());
            } catch (const Error& e) {
                report.fail(key, e.what());
            }
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) report.fail(key, "expected a non-negative integer");
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "lift") {
            if (!value.is_string()) report.fail(key, "expected \"symmetric\" or \"integer\"");
            try {
                cfg.lift = parse_lift(value.get<std::string>());
            } catch (const Error& e) {
                report.fail(key, e.what());
            }
        } else {
            report.fail(key, "unknown key (allowed: n, m, potential, initial_wavefunction, steps, precision, mode, "
                             "seed, lift)");
        }
    }
    if (!have_n) report.fail_at(0, "missing required key 'n'");
    if (cfg.n % cfg.m != 0)
        report.fail("m", "m = " + std::to_string(cfg.m) + " must divide n = " + std::to_string(cfg.n) +
                             " (the roots of X^m -/+ 1 need m | n for g^n = +/-1)");
    if (cfg.initial_wavefunction && static_cast<long long>(cfg.initial_wavefunction->size()) != cfg.n)
        report.fail("initial_wavefunction", "expected " + std::to_string(cfg.n) + " entries, got " +
                                                std::to_string(cfg.initial_wavefunction->size()));
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path.string());
}

unsigned resolve_precision(std::optional<unsigned> explicit_value) {
    unsigned p = kDefaultPrecision;
    if (explicit_value) {
        p = *explicit_value;
    } else if (const char* env = std::getenv("GALQ_PRECISION"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v <= 0) throw ConfigError("GALQ_PRECISION must be a positive integer, got '" + std::string(env) + "'");
        p = static_cast<unsigned>(v);
    }
    if (p < kMinPrecision) throw ConfigError("precision must be at least 15 digits, got " + std::to_string(p));
    return p;
}

}  // namespace galq
