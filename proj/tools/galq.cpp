#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "galq/config.hpp"
#include "galq/errors.hpp"
#include "galq/examples.hpp"
#include "galq/family.hpp"
#include "galq/io.hpp"
#include "galq/numtheory.hpp"
#include "galq/spectra.hpp"

namespace fs = std::filesystem;
using namespace galq;

namespace {

enum class Format { json, csv };

struct Options {
    std::string config;
    std::string out = "galq_out";
    std::optional<unsigned> precision;
    std::optional<std::string> mode;
    std::optional<std::string> lift;
    std::string format = "json";
};

struct Resolved {
    RunConfig cfg;
    unsigned precision;
    Format format;
};

Resolved resolve(const Options& opt) {
    Resolved r{load_config(opt.config), 0, opt.format == "csv" ? Format::csv : Format::json};
    r.precision = resolve_precision(opt.precision ? opt.precision : r.cfg.precision);
    if (opt.mode) r.cfg.mode = parse_mode(*opt.mode);
    if (opt.lift) r.cfg.lift = parse_lift(*opt.lift);
    return r;
}

void emit(const fs::path& path, const std::string& content) {
    write_file(path, content);
    std::cout << "wrote " << path.string() << "\n";
}

int cmd_classical(const Options& opt) {
    const Resolved r = resolve(opt);
    const PotentialSpec v = r.cfg.potential_spec();
    const fs::path out(opt.out);
    CycleDecomposition census;
    try {
        census = cycle_census(v);
    } catch (const NoUniqueStep& e) {
        std::cerr << "galq: classical step undefined for n = " << v.modulus() << ": " << e.what() << "\n"
                  << "  for even n the update 2 q'' = -V'(q) only fixes q(t+1) mod n/2 unless V' has even\n"
                  << "  integer coefficients; choose odd n or such a potential\n";
        return 2;
    }
    const long long n = v.modulus();

    Json trajectories = Json::array();
    Json orbit_diagnostics = Json::array();
    bool all_ok = true;
    std::size_t covered = 0;
    for (const auto& o : census.orbits) {
        covered += o.period;
        const Trajectory t = iterate_classical(o.representative, v, static_cast<int>(o.period));
        trajectories.push_back(Json{{"start", Json::array({o.representative.q_prev, o.representative.q_curr})},
                                    {"q", t.states}});
        Residue max_eom = 0;
        bool identity = true;
        std::set<Residue> energies;
        for (std::size_t k = 1; k + 1 < t.states.size(); ++k) {
            const Residue qm = t.states[k - 1], q = t.states[k], qp = t.states[k + 1];
            max_eom = std::max(max_eom, eom_residual(qp, q, qm, v));
            const Residue diff = mod(energy(qp, q, v) - energy(q, qm, v), n);
            identity = identity && diff == energy_difference_expansion(qp, q, qm, v);
            energies.insert(energy(q, qm, v));
        }
        const bool returns = t.states[o.period] == o.representative.q_prev && t.states[o.period + 1] == o.representative.q_curr;
        all_ok = all_ok && max_eom == 0 && identity && returns;
        orbit_diagnostics.push_back(Json{{"representative", Json::array({o.representative.q_prev, o.representative.q_curr})},
                                         {"period", o.period},
                                         {"returns_after_period", returns},
                                         {"max_eom_residual", max_eom},
                                         {"energy_identity_holds", identity},
                                         {"distinct_energies_mod_n", energies.size()}});
    }
    all_ok = all_ok && covered == static_cast<std::size_t>(n * n);

    if (r.format == Format::csv)
        emit(out / "census.csv", census_csv(census));
    else
        emit(out / "census.json", dump(census_json(census)));
    emit(out / "trajectories.json", dump(Json{{"n", n}, {"potential", v.coeffs()}, {"trajectories", trajectories}}));
    emit(out / "diagnostics.json", dump(Json{{"n", n},
                                             {"states", n * n},
                                             {"states_on_cycles", covered},
                                             {"orbits", census.orbits.size()},
                                             {"all_checks_pass", all_ok},
                                             {"per_orbit", orbit_diagnostics}}));
    std::cout << census.orbits.size() << " orbits covering " << covered << " of " << n * n << " states\n";
    return all_ok ? 0 : 1;
}

int cmd_spectrum(const Options& opt) {
    const Resolved r = resolve(opt);
    const PotentialSpec v = r.cfg.potential_spec();
    const RootSet roots = make_rootset(r.cfg.m);
    const fs::path out(opt.out);
    const auto spectra = rootset_spectra(roots, v, r.precision, r.cfg.lift);
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        const std::string stem = "root" + std::to_string(i + 1);
        const HamiltonianMatrix h = hamiltonian(roots.roots[i], v, r.cfg.lift);
        if (r.format == Format::csv) {
            std::ostringstream os;
            os << "eigenvalue_re,eigenvalue_im,multiplicity\n";
            for (const auto& e : spectra[i].eigen)
                os << format_real(e.value.re, static_cast<int>(r.precision)) << ','
                   << format_real(e.value.im, static_cast<int>(r.precision)) << ',' << e.multiplicity << '\n';
            emit(out / (stem + "_spectrum.csv"), os.str());
            emit(out / (stem + "_hamiltonian.csv"), hamiltonian_csv(h));
        } else {
            emit(out / (stem + "_spectrum.json"), dump(spectrum_json(spectra[i])));
            emit(out / (stem + "_hamiltonian.json"), dump(hamiltonian_json(h)));
        }
        std::cout << "g = " << roots.roots[i].str() << ": det(E - H) = " << to_string(spectra[i].charpoly, "E") << "\n";
    }
    Json totals = Json::array();
    for (const auto& e : total_energies(spectra, cluster_tolerance(r.precision)))
        totals.push_back(complex_json(e, static_cast<int>(r.precision)));
    emit(out / "total_energies.json", dump(Json{{"n", v.modulus()},
                                                {"m", r.cfg.m},
                                                {"precision", r.precision},
                                                {"lift_convention", to_string(r.cfg.lift)},
                                                {"total_energies", totals}}));
    emit(out / "lagrangian.json", dump(lagrangian_json(lagrangian_matrix(v))));
    return 0;
}

int cmd_evolve(const Options& opt) {
    const Resolved r = resolve(opt);
    const PotentialSpec v = r.cfg.potential_spec();
    const RootSet roots = make_rootset(r.cfg.m);
    const fs::path out(opt.out);
    const long long steps = r.cfg.steps;
    const long long direction = steps >= 0 ? 1 : -1;

    WaveFamily psi = make_family(roots, r.cfg.initial());
    const CyclotomicElement n0 = normalization_functional(psi);
    CyclotomicElement previous = n0;
    bool checks_pass = true;
    Json timeline = Json::array();
    for (long long k = 0;; ++k) {
        const auto invariants = symmetric_invariants(psi);
        Json sk = Json::array();
        bool rational = true;
        for (const auto& s : invariants) {
            Json values = Json::array();
            for (const auto& x : s.values) {
                values.push_back(to_json(x));
                rational = rational && is_rational(x).has_value();
            }
            sk.push_back(Json{{"k", s.k}, {"values", values}});
        }
        const CyclotomicElement norm = normalization_functional(psi);
        const CyclotomicElement drift = norm - previous;
        Json periodicity = Json::array();
        for (std::size_t i = 0; i < psi.components.size(); ++i) {
            const auto rep = check_m_periodicity(psi.components[i], r.cfg.m);
            periodicity.push_back(Json{{"component", i + 1}, {"sign", rep.sign}, {"holds", rep.holds},
                                       {"max_deviation", rep.max_deviation}});
        }
        // Rational S_k is asserted for rational initial data; conservation only in potential-only mode.
        bool conserved = true;
        if (r.cfg.mode == EvolutionMode::potential_only) conserved = norm == n0;
        checks_pass = checks_pass && rational && conserved;
        timeline.push_back(Json{{"time", psi.time},
                                {"symmetric_invariants", sk},
                                {"invariants_rational", rational},
                                {"normalization", to_json(norm)},
                                {"normalization_drift", to_json(drift)},
                                {"normalization_conserved", conserved},
                                {"periodicity", periodicity}});
        emit(out / ("family_t" + std::to_string(psi.time) + ".json"), dump(family_json(psi, r.cfg.mode)));
        if (k == std::abs(steps)) break;
        previous = norm;
        psi = evolve_family(psi, v, direction, r.cfg.mode, r.cfg.lift);
    }
    emit(out / "invariants.json", dump(Json{{"n", v.modulus()},
                                            {"m", r.cfg.m},
                                            {"mode", to_string(r.cfg.mode)},
                                            {"lift_convention", to_string(r.cfg.lift)},
                                            {"seed", r.cfg.seed},
                                            {"all_checks_pass", checks_pass},
                                            {"timeline", timeline}}));
    return checks_pass ? 0 : 1;
}

int cmd_reproduce(const Options& opt, bool to_stdout) {
    const unsigned precision = resolve_precision(opt.precision);
    const ExamplesReport rep = reproduce_examples(precision);
    const std::string md = rep.markdown();
    if (to_stdout)
        std::cout << md;
    else
        emit(fs::path(opt.out) / "examples.md", md);
    if (!rep.all_pass()) {
        std::cerr << "galq: worked-example mismatches:\n";
        for (const auto& c : rep.checks)
            if (!c.pass) std::cerr << "  Example " << c.example << ": " << c.quantity << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

void output_table(const std::optional<std::string>& path, const std::string& csv) {
    if (path)
        emit(*path, csv);
    else
        std::cout << csv;
}

int cmd_gauss(std::optional<long long> n, std::optional<long long> k, long long max_prime, unsigned precision,
              const std::optional<std::string>& path) {
    std::ostringstream os;
    os << "k,n,exact,re,im,closed_re,closed_im,abs_error\n";
    PrecisionScope scope(precision + 10);
    const Real tol = boost::multiprecision::pow(Real(10), -static_cast<int>(precision) + 4);
    bool ok = true;
    auto row = [&](long long kk, long long nn) {
        const GaussSum g = gauss_sum(kk, nn, precision);
        os << kk << ',' << nn << ",\"" << g.exact.str() << "\"," << format_real(g.value.re, precision) << ','
           << format_real(g.value.im, precision);
        const bool closed = nn == 2 ? kk % 2 != 0 : (is_prime(nn) && nn > 2 && gcd_ll(kk, nn) == 1);
        if (closed) {
            const Complex c = gauss_closed_form(kk, nn, precision);
            const Real err = abs(g.value - c);
            ok = ok && err <= tol;
            os << ',' << format_real(c.re, precision) << ',' << format_real(c.im, precision) << ','
               << format_real(err, 6);
        } else {
            os << ",,,";
        }
        os << '\n';
    };
    if (n) {
        if (k)
            row(*k, *n);
        else
            for (long long kk = 1; kk < *n; ++kk) row(kk, *n);
    } else {
        row(1, 2);
        for (long long p = 3; p < max_prime; p += 2)
            if (is_prime(p))
                for (long long kk = 1; kk < p; ++kk) row(kk, p);
    }
    output_table(path, os.str());
    return ok ? 0 : 1;
}

int cmd_legendre(long long p, const std::optional<std::string>& path) {
    std::ostringstream os;
    os << "k,p,symbol,is_square\n";
    std::set<long long> squares;
    for (long long x = 1; x < p; ++x) squares.insert(x * x % p);
    bool ok = true;
    for (long long k = 0; k < p; ++k) {
        const int s = legendre(k, p);
        const bool square = squares.count(k) > 0;
        ok = ok && (k == 0 ? s == 0 : (s == 1) == square);
        os << k << ',' << p << ',' << s << ',' << (square ? 1 : 0) << '\n';
    }
    output_table(path, os.str());
    return ok ? 0 : 1;
}

int cmd_totient(long long max_n, const std::optional<std::string>& path) {
    std::ostringstream os;
    os << "n,phi,unit_count\n";
    bool ok = true;
    for (long long n = 1; n <= max_n; ++n) {
        long long count = 0;
        for (long long a = 1; a <= n; ++a) count += gcd_ll(a, n) == 1;
        const long long phi = totient(n);
        ok = ok && phi == count;
        os << n << ',' << phi << ',' << count << '\n';
    }
    output_table(path, os.str());
    return ok ? 0 : 1;
}

int cmd_theta(long long n, const std::string& z, const std::string& tau1, const std::string& tau2, unsigned precision,
              const std::optional<std::string>& path) {
    const ThetaValue t = discrete_theta({n, parse_rational(z), parse_rational(tau1), parse_rational(tau2)}, precision);
    std::ostringstream os;
    os << "n,z,tau1,tau2,exact,re,im\n";
    os << n << ',' << z << ',' << tau1 << ',' << tau2 << ",\"" << (t.exact ? t.exact->str() : "") << "\","
       << format_real(t.value.re, precision) << ',' << format_real(t.value.im, precision) << '\n';
    output_table(path, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete quantum mechanics over cyclotomic fields"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub, bool needs_config) {
        auto* c = sub->add_option("--config", opt.config, "JSON run configuration")->check(CLI::ExistingFile);
        if (needs_config) c->required();
        sub->add_option("--out", opt.out, "output directory")->capture_default_str();
        sub->add_option("--precision", opt.precision, "decimal digits (>= 15); falls back to GALQ_PRECISION, then 30");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    auto* classical = app.add_subcommand("classical", "orbit census, trajectories and EOM/energy diagnostics");
    add_common(classical, true);
    auto* spectrum = app.add_subcommand("spectrum", "Hamiltonian spectra for every root and the total energies");
    add_common(spectrum, true);
    spectrum->add_option("--lift", opt.lift, "exponent lift: symmetric or integer");
    auto* evolve = app.add_subcommand("evolve", "evolve the root family and track its invariants");
    add_common(evolve, true);
    evolve->add_option("--mode", opt.mode, "full or potential-only");
    evolve->add_option("--lift", opt.lift, "exponent lift: symmetric or integer");
    auto* reproduce = app.add_subcommand("reproduce-examples", "check the four worked examples");
    bool to_stdout = false;
    reproduce->add_option("--out", opt.out, "output directory for examples.md")->capture_default_str();
    reproduce->add_option("--precision", opt.precision, "decimal digits (>= 15)");
    reproduce->add_flag("--stdout", to_stdout, "print the report instead of writing it");

    auto* nt = app.add_subcommand("numtheory", "number-theory tables (CSV)");
    nt->require_subcommand(1);
    std::optional<std::string> table_path;
    std::optional<long long> g_n, g_k;
    long long max_prime = 100, legendre_p = 7, totient_max = 20, theta_n = 5;
    std::string theta_z = "0", theta_tau1 = "0", theta_tau2 = "0";
    auto* gauss = nt->add_subcommand("gauss", "Gauss sums against their closed forms");
    gauss->add_option("--n", g_n, "single modulus");
    gauss->add_option("--k", g_k, "single k (with --n)");
    gauss->add_option("--max-prime", max_prime, "sweep odd primes below this bound")->capture_default_str();
    auto* leg = nt->add_subcommand("legendre", "Legendre symbols (k/p)");
    leg->add_option("--p", legendre_p, "odd prime")->capture_default_str();
    auto* tot = nt->add_subcommand("totient", "Euler totient against a unit count");
    tot->add_option("--max", totient_max, "largest n")->capture_default_str();
    auto* theta = nt->add_subcommand("theta", "discrete theta sum");
    theta->add_option("--n", theta_n, "modulus")->capture_default_str();
    theta->add_option("--z", theta_z, "rational z")->capture_default_str();
    theta->add_option("--tau1", theta_tau1, "rational tau1")->capture_default_str();
    theta->add_option("--tau2", theta_tau2, "rational tau2 (quartic term)")->capture_default_str();
    for (auto* sub : {gauss, leg, tot, theta}) {
        sub->add_option("--out", table_path, "CSV file (default: stdout)");
        sub->add_option("--precision", opt.precision, "decimal digits (>= 15)");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classical) return cmd_classical(opt);
        if (*spectrum) return cmd_spectrum(opt);
        if (*evolve) return cmd_evolve(opt);
        if (*reproduce) return cmd_reproduce(opt, to_stdout);
        const unsigned precision = resolve_precision(opt.precision);
        if (*gauss) return cmd_gauss(g_n, g_k, max_prime, precision, table_path);
        if (*leg) return cmd_legendre(legendre_p, table_path);
        if (*tot) return cmd_totient(totient_max, table_path);
        if (*theta) return cmd_theta(theta_n, theta_z, theta_tau1, theta_tau2, precision, table_path);
    } catch (const Error& e) {
        std::cerr << "galq: error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "galq: error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
