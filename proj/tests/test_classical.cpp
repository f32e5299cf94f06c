#include <doctest.h>

#include <map>
#include <set>

#include "galq/classical.hpp"
#include "galq/errors.hpp"

using namespace galq;

namespace {
const PotentialSpec square6(6, {0, 0, 1});
}

TEST_CASE("potential spec") {
    PotentialSpec v(5, {7, -1, 0, 0});
    CHECK(v.coeffs() == std::vector<long long>{2, 4, 0, 0});
    CHECK(v.degree() == 1);
    CHECK(PotentialSpec(5, {0}).degree() == -1);
    CHECK(v.value(3) == (2 + 12) % 5);
    CHECK(PotentialSpec(7, {1, 2, 3, 4}).derivative(2) == (2 + 12 + 48) % 7);
    CHECK_THROWS_AS(PotentialSpec(0, {}), Error);
}

TEST_CASE("lagrangian and action") {
    CHECK(lagrangian(1, 1, square6) == 5);
    CHECK(lagrangian(1, 4, square6) == 2);
    for (long long q = 0; q < 7; ++q) CHECK(lagrangian(q, q, PotentialSpec(7, {0})) == 0);

    CHECK(action({{3, 3, 3, 3}, PotentialSpec(6, {0})}) == 0);
    CHECK(action({{0, 1, 2}, square6}) == 3);
    CHECK(action({{4, 1}, square6}) == lagrangian(1, 4, square6));
    CHECK_THROWS_AS(action({{1}, square6}), Error);
}

TEST_CASE("equation-of-motion residual") {
    CHECK(eom_residual(2, 1, 0, PotentialSpec(6, {0})) == 0);
    CHECK(eom_residual(3, 1, 0, square6) == 4);
}

TEST_CASE("step examples") {
    CHECK(step_classical({1, 2}, PotentialSpec(5, {0})) == PhaseState{2, 3});
    CHECK(step_classical({0, 0}, PotentialSpec(3, {0, 0, 1})) == PhaseState{0, 0});
    CHECK_THROWS_AS(step_classical({0, 1}, PotentialSpec(6, {0, 1})), NoUniqueStep);
    CHECK_THROWS_AS(cycle_census(PotentialSpec(6, {0, 1})), NoUniqueStep);
}

TEST_CASE("even modulus with an even force field") {
    // V = q^2, V' = 2q: q'' = -q is well defined mod 6
    const PhaseState s = step_classical({0, 1}, square6);
    CHECK(s == PhaseState{1, 1});
    CHECK(eom_residual(s.q_curr, 1, 0, square6) == 0);
    // V = q^3 + q^2 over Z_4: V' = 3q^2 + 2q, odd for odd q
    CHECK_THROWS_AS(step_classical({0, 1}, PotentialSpec(4, {0, 0, 1, 1})), NoUniqueStep);
}

TEST_CASE("generated trajectories satisfy the EOM exhaustively for n <= 7") {
    for (long long n = 2; n <= 7; ++n) {
        std::vector<PotentialSpec> potentials = {PotentialSpec(n, {0}), PotentialSpec(n, {0, 0, 1}),
                                                 PotentialSpec(n, {1, 0, 2}), PotentialSpec(n, {0, 0, 0, 2})};
        if (n % 2) potentials.push_back(PotentialSpec(n, {0, 1, 1, 1}));
        for (const auto& v : potentials) {
            for (long long a = 0; a < n; ++a)
                for (long long b = 0; b < n; ++b) {
                    const auto t = iterate_classical({a, b}, v, 8);
                    for (std::size_t k = 1; k + 1 < t.states.size(); ++k)
                        CHECK(eom_residual(t.states[k + 1], t.states[k], t.states[k - 1], v) == 0);
                }
        }
    }
}

TEST_CASE("inverse step undoes the forward step") {
    for (long long n : {3, 5, 7, 9, 6, 8}) {
        const PotentialSpec v(n, {1, 0, 1, n % 2 ? 1 : 0});
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b) {
                const PhaseState s{a, b};
                CHECK(step_classical_inverse(step_classical(s, v), v) == s);
                CHECK(step_classical(step_classical_inverse(s, v), v) == s);
            }
    }
}

TEST_CASE("energy and the energy-difference identity") {
    CHECK(energy(4, 4, PotentialSpec(9, {0})) == 0);
    CHECK(energy(2, 0, square6) == 2);
    const auto ev = energy_value(2, 0, square6);
    CHECK(ev.integer == 8);
    CHECK(ev.residue == 2);
    for (long long n : {4, 5, 6, 7}) {
        const PotentialSpec v(n, {2, 1, 3, 1});
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b)
                for (long long c = 0; c < n; ++c)
                    CHECK(mod(energy(c, b, v) - energy(b, a, v), n) == energy_difference_expansion(c, b, a, v));
    }
}

TEST_CASE("hamilton quantities") {
    const auto h0 = hamilton_quantities(2, 2, PotentialSpec(7, {3}));
    CHECK(h0.p == 0);
    CHECK(h0.h == 3);
    const auto h1 = hamilton_quantities(3, 1, PotentialSpec(5, {0, 0, 1}));
    CHECK(h1.p == 4);
    CHECK(h1.h == 0);
    const auto h2 = hamilton_quantities(1, 5, square6);
    CHECK_FALSE(h2.h.has_value());
    CHECK(h2.h_integer == 16 + 25);
    for (long long a = 0; a < 6; ++a)
        for (long long b = 0; b < 6; ++b) CHECK(hamilton_quantities(a, b, square6).p_integer % 2 == 0);
}

TEST_CASE("cycle census against brute force") {
    for (long long n : {3, 5, 7}) {
        for (const auto& coeffs : std::vector<std::vector<long long>>{{0}, {0, 0, 1}, {0, 1, 1}}) {
            const PotentialSpec v(n, coeffs);
            const auto c = cycle_census(v);
            CHECK(c.bijective);
            CHECK(c.tails.empty());
            std::set<PhaseState> seen;
            std::size_t total = 0;
            for (const auto& o : c.orbits) {
                CHECK(o.members.size() == o.period);
                CHECK(o.period <= static_cast<std::size_t>(n * n));
                CHECK(o.members.front() == o.representative);
                PhaseState s = o.representative;
                for (std::size_t k = 0; k < o.period; ++k) {
                    CHECK(s == o.members[k]);
                    if (k > 0) CHECK_FALSE(s == o.representative);
                    s = step_classical(s, v);
                }
                CHECK(s == o.representative);
                for (const auto& m : o.members) {
                    CHECK(o.representative <= m);
                    CHECK(seen.insert(m).second);
                }
                total += o.period;
            }
            CHECK(total == static_cast<std::size_t>(n * n));
        }
    }
}

TEST_CASE("free motion on Z_5") {
    const auto c = cycle_census(PotentialSpec(5, {0}));
    std::size_t total = 0;
    for (const auto& o : c.orbits) {
        CHECK(5 % o.period == 0);
        total += o.period;
    }
    CHECK(total == 25);
    CHECK(cycle_census(PotentialSpec(3, {0})).orbits.size() == 3 + 2);
}

TEST_CASE("census of a non-invertible map reports tails") {
    // (a, b) -> (b, 0): everything falls onto (0, 0) within two steps
    const auto c = cycle_census_of(3, [](const PhaseState& s) { return PhaseState{s.q_curr, 0}; });
    CHECK_FALSE(c.bijective);
    REQUIRE(c.orbits.size() == 1);
    CHECK(c.orbits[0].representative == PhaseState{0, 0});
    CHECK(c.tails.size() == 8);
    for (const auto& t : c.tails) {
        CHECK(t.tail_length == (t.state.q_curr == 0 ? 1u : 2u));
        CHECK(t.cycle_index == 0);
    }
}

TEST_CASE("trajectory curve points") {
    const auto pts = trajectory_curve_points(0, PotentialSpec(5, {0, 0, 1}));
    std::set<std::pair<Residue, Residue>> brute;
    for (long long x = 0; x < 5; ++x)
        for (long long y = 0; y < 5; ++y)
            if (mod(y * y + 4 * x * x, 5) == 0) brute.insert({x, y});
    CHECK(std::set<std::pair<Residue, Residue>>(pts.begin(), pts.end()) == brute);
    CHECK(brute.count({0, 0}) == 1);

    const auto free = trajectory_curve_points(0, PotentialSpec(4, {0}));
    for (const auto& [x, y] : free) CHECK(y * y % 4 == 0);
    CHECK(free.size() == 8);
}

TEST_CASE("visited points lie on the curve of their energy") {
    // with p = 2(q(t) - q(t-1)), y = p satisfies y^2 = 4E - 4V(q) by definition of E
    const PotentialSpec v(7, {0, 1, 1});
    const auto t = iterate_classical({0, 3}, v, 20);
    for (std::size_t k = 1; k < t.states.size(); ++k) {
        const Residue q = t.states[k], y = mod(2 * (t.states[k] - t.states[k - 1]), 7);
        const auto pts = trajectory_curve_points(energy(q, t.states[k - 1], v), v);
        CHECK(std::find(pts.begin(), pts.end(), std::make_pair(q, y)) != pts.end());
    }
}
