#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "galq/config.hpp"
#include "galq/errors.hpp"
#include "galq/io.hpp"
#include "support.hpp"

using namespace galq;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config(text, "run.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

class EnvGuard {
public:
    explicit EnvGuard(const char* value) {
        if (const char* old = std::getenv("GALQ_PRECISION")) saved_ = old;
        if (value) setenv("GALQ_PRECISION", value, 1);
        else unsetenv("GALQ_PRECISION");
    }
    ~EnvGuard() {
        if (saved_) setenv("GALQ_PRECISION", saved_->c_str(), 1);
        else unsetenv("GALQ_PRECISION");
    }

private:
    std::optional<std::string> saved_;
};

}  // namespace

TEST_CASE("full configuration") {
    const auto cfg = parse_config(R"({
        "n": 6, "m": 3, "potential": [1, 0, 1],
        "initial_wavefunction": [1, "1/2", 0, 0, "-3/4", 2],
        "steps": 4, "precision": 40, "mode": "potential-only", "seed": 12, "lift": "integer"
    })");
    CHECK(cfg.n == 6);
    CHECK(cfg.m == 3);
    CHECK(cfg.potential == std::vector<long long>{1, 0, 1});
    CHECK(cfg.steps == 4);
    CHECK(cfg.precision == 40u);
    CHECK(cfg.mode == EvolutionMode::potential_only);
    CHECK(cfg.seed == 12u);
    CHECK(cfg.lift == ExponentLift::integer);
    const auto psi = cfg.initial(3);
    CHECK(psi.conductor() == 3);
    CHECK(psi.at(2) == CyclotomicElement(Rational(1, 2)));
    CHECK(psi.at(5) == CyclotomicElement(Rational(-3, 4)));
    CHECK(cfg.potential_spec().value(2) == 5);
}

TEST_CASE("defaults") {
    const auto cfg = parse_config(R"({"n": 5})");
    CHECK(cfg.m == 1);
    CHECK(cfg.potential == std::vector<long long>{0, 0, 1});
    CHECK(!cfg.precision);
    CHECK(cfg.mode == EvolutionMode::full);
    CHECK(cfg.lift == ExponentLift::symmetric);
    CHECK(cfg.initial() == WaveFunction::delta(5, 1));
}

TEST_CASE("configuration errors carry positions") {
    CHECK(starts_with(error_of("{\n  \"n\": 6,\n  \"m\": 4\n}"), "run.json:3:3: 'm': m = 4 must divide n = 6"));
    CHECK(starts_with(error_of("{\n  \"n\": 6,\n  \"colour\": 1\n}"), "run.json:3:3: 'colour': unknown key"));
    CHECK(starts_with(error_of("{\"n\": 3, \"precision\": 10}"), "run.json:1:10: 'precision': precision must lie"));
    CHECK(starts_with(error_of("{\"n\": 3,\n \"initial_wavefunction\": [1, 2]}"),
                      "run.json:2:2: 'initial_wavefunction': expected 3 entries, got 2"));
    CHECK(starts_with(error_of("{\"n\": 3, \"initial_wavefunction\": [1, \"1/0\", 2]}"),
                      "run.json:1:10: 'initial_wavefunction'"));
    CHECK(starts_with(error_of("{\"n\": \"six\"}"), "run.json:1:2: 'n': expected an integer"));
    CHECK(starts_with(error_of("{\"n\": 0}"), "run.json:1:2: 'n': modulus n must lie"));
    CHECK(starts_with(error_of("{\"m\": 1}"), "run.json:1:1: missing required key 'n'"));
    CHECK(starts_with(error_of("{\"n\": 3, \"mode\": \"fast\"}"), "run.json:1:10: 'mode': unknown evolution mode"));
    CHECK(starts_with(error_of("{\"n\": 3, \"lift\": \"floor\"}"), "run.json:1:10: 'lift': unknown exponent lift"));
    CHECK(starts_with(error_of("[1, 2]"), "run.json:1:1: configuration must be a JSON object"));
    CHECK(starts_with(error_of("{\n  \"n\": 6,\n  \"m\" 2\n}"), "run.json:3:7: invalid JSON"));
}

TEST_CASE("configuration files") {
    const auto dir = std::filesystem::temp_directory_path() / "galq_config_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "bad.json";
    std::ofstream(path) << "{\n\n \"n\": 4, \"m\": 3}\n";
    try {
        load_config(path);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(starts_with(e.what(), path.string() + ":3:10: 'm'"));
    }
    CHECK_THROWS_AS(load_config(dir / "missing.json"), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("precision resolution") {
    {
        EnvGuard env(nullptr);
        CHECK(resolve_precision(std::nullopt) == 30u);
        CHECK(resolve_precision(50u) == 50u);
        CHECK_THROWS_AS(resolve_precision(14u), ConfigError);
    }
    {
        EnvGuard env("45");
        CHECK(resolve_precision(std::nullopt) == 45u);
        CHECK(resolve_precision(20u) == 20u);
    }
    {
        EnvGuard env("12");
        CHECK_THROWS_AS(resolve_precision(std::nullopt), ConfigError);
    }
    {
        EnvGuard env("lots");
        CHECK_THROWS_AS(resolve_precision(std::nullopt), ConfigError);
    }
}

TEST_CASE("cyclotomic elements round-trip through JSON") {
    galq::testing::RandomRationals rng(8);
    for (int conductor : {1, 3, 4, 8, 12, 15}) {
        const auto a = rng.element(conductor);
        const auto j = to_json(a);
        CHECK(j["conductor"] == conductor);
        CHECK(j["coeffs"].size() == static_cast<std::size_t>(euler_phi(conductor)));
        CHECK(element_from_json(Json::parse(j.dump())) == a);
    }
    CHECK(to_json(CyclotomicElement(Rational(-3, 4))).dump() == R"({"conductor":1,"coeffs":["-3/4"]})");
    CHECK_THROWS_AS(element_from_json(Json::array()), Error);
}

TEST_CASE("output formats") {
    const PotentialSpec v(3, {0, 0, 1});
    const auto census = cycle_census(v);
    const auto csv = census_csv(census);
    CHECK(starts_with(csv, "rep_q_prev,rep_q_curr,period\n0,0,"));
    const auto j = census_json(census);
    CHECK(j["states_on_cycles"] == 9);
    CHECK(j["bijective"] == true);

    const auto h = hamiltonian(CyclotomicElement::zeta(3), v);
    CHECK(starts_with(hamiltonian_csv(h), "q,q_prime,value\n1,1,\"-1/2 - z\"\n1,2,\"0\"\n"));
    CHECK(hamiltonian_json(h)["entries"].size() == 3);

    const auto s = eigen_solve(CyclotomicElement::zeta(3), v);
    const auto sj = spectrum_json(s);
    CHECK(sj["lift_convention"] == "symmetric");
    CHECK(sj["precision"] == 30);
    CHECK(sj["charpoly"].size() == 4);
    CHECK(dump(sj) == dump(spectrum_json(eigen_solve(CyclotomicElement::zeta(3), v))));
    CHECK(dump(sj).back() == '\n');

    const auto lj = lagrangian_json(lagrangian_matrix(PotentialSpec(6, {0, 0, 1})));
    CHECK(lj["symmetric"][0] == Json::array({-1, 0, 3, 2, 3, 0}));

    const auto fam = make_family(make_rootset(2), WaveFunction::delta(2, 1));
    const auto fj = family_json(fam, EvolutionMode::full);
    CHECK(fj["sign"] == "plus");
    CHECK(fj["components"].size() == 2);
    CHECK(fj["mode"] == "full");

    CHECK(complex_json(Complex(Real("0.5"), Real(-2)), 10) == Json::array({"5.000000000e-01", "-2.000000000e+00"}));
}
