#include "galq/io.hpp"

#include <fstream>
#include <sstream>

#include "galq/errors.hpp"

namespace galq {

Json to_json(const CyclotomicElement& a) {
    Json coeffs = Json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"conductor", a.conductor()}, {"coeffs", coeffs}};
}

CyclotomicElement element_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
        throw Error("cyclotomic element must be {\"conductor\": N, \"coeffs\": [...]}");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_rational(c.get<std::string>()));
    return CyclotomicElement(j.at("conductor").get<int>(), std::move(coeffs));
}

Json complex_json(const Complex& z, int digits) { return Json::array({format_real(z.re, digits), format_real(z.im, digits)}); }

Json complex_vector_json(const ComplexVector& v, int digits) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(complex_json(z, digits));
    return out;
}

Json wavefunction_json(const WaveFunction& psi) {
    Json amps = Json::array();
    for (const auto& a : psi.amplitudes()) amps.push_back(to_json(a));
    return Json{{"n", psi.size()}, {"conductor", psi.conductor()}, {"amplitudes", amps}};
}

Json family_json(const WaveFamily& psi, EvolutionMode mode) {
    Json comps = Json::array();
    for (std::size_t i = 0; i < psi.components.size(); ++i)
        comps.push_back(Json{{"root", to_json(psi.rootset.roots[i])}, {"psi", wavefunction_json(psi.components[i])}});
    return Json{{"m", psi.rootset.m},
                {"n", psi.size()},
                {"sign", psi.rootset.sign == RootSign::plus ? "plus" : "minus"},
                {"time", psi.time},
                {"mode", to_string(mode)},
                {"components", comps}};
}

Json spectrum_json(const Spectrum& s) {
    const int digits = static_cast<int>(s.precision);
    Json charpoly = Json::array();
    for (const auto& c : s.charpoly.coeffs) charpoly.push_back(to_json(c));
    Json eigen = Json::array();
    for (const auto& e : s.eigen) {
        Json vectors = Json::array();
        for (const auto& v : e.vectors) vectors.push_back(complex_vector_json(v, digits));
        eigen.push_back(Json{{"value", complex_json(e.value, digits)},
                             {"mult", e.multiplicity},
                             {"exact", e.exact},
                             {"vectors", vectors}});
    }
    return Json{{"g", to_json(s.base)},
                {"charpoly", charpoly},
                {"eigen", eigen},
                {"precision", s.precision},
                {"lift_convention", to_string(s.lift)}};
}

Json hamiltonian_json(const HamiltonianMatrix& h) {
    Json rows = Json::array();
    for (const auto& row : h.entries) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(r);
    }
    return Json{{"n", h.n}, {"g", to_json(h.base)}, {"lift_convention", to_string(h.lift)}, {"entries", rows}};
}

std::string hamiltonian_csv(const HamiltonianMatrix& h) {
    std::ostringstream os;
    os << "q,q_prime,value\n";
    for (long long q = 1; q <= h.n; ++q)
        for (long long qp = 1; qp <= h.n; ++qp) os << q << ',' << qp << ",\"" << h.entries[q - 1][qp - 1].str() << "\"\n";
    return os.str();
}

Json lagrangian_json(const LagrangianMatrix& l) {
    return Json{{"n", l.n}, {"residues", l.entries}, {"symmetric", l.symmetric()}};
}

Json trajectory_json(const Trajectory& t) {
    return Json{{"n", t.potential.modulus()}, {"potential", t.potential.coeffs()}, {"q", t.states}};
}

std::string census_csv(const CycleDecomposition& c) {
    std::ostringstream os;
    os << "rep_q_prev,rep_q_curr,period\n";
    for (const auto& o : c.orbits) os << o.representative.q_prev << ',' << o.representative.q_curr << ',' << o.period << '\n';
    return os.str();
}

Json census_json(const CycleDecomposition& c) {
    Json orbits = Json::array();
    std::size_t covered = 0;
    for (const auto& o : c.orbits) {
        Json members = Json::array();
        for (const auto& s : o.members) members.push_back(Json::array({s.q_prev, s.q_curr}));
        orbits.push_back(Json{{"representative", Json::array({o.representative.q_prev, o.representative.q_curr})},
                              {"period", o.period},
                              {"members", members}});
        covered += o.period;
    }
    Json tails = Json::array();
    for (const auto& t : c.tails)
        tails.push_back(Json{{"state", Json::array({t.state.q_prev, t.state.q_curr})},
                             {"tail_length", t.tail_length},
                             {"cycle", t.cycle_index}});
    return Json{{"n", c.n},
                {"bijective", c.bijective},
                {"states_on_cycles", covered},
                {"orbits", orbits},
                {"tails", tails}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
}

}  // namespace galq
