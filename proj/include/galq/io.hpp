#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "galq/classical.hpp"
#include "galq/family.hpp"
#include "galq/numtheory.hpp"
#include "galq/spectra.hpp"

namespace galq {

using Json = nlohmann::ordered_json;

Json to_json(const CyclotomicElement& a);
CyclotomicElement element_from_json(const Json& j);

// [re, im] as decimal strings with `digits` significant digits.
Json complex_json(const Complex& z, int digits);
Json complex_vector_json(const ComplexVector& v, int digits);

Json wavefunction_json(const WaveFunction& psi);
Json family_json(const WaveFamily& psi, EvolutionMode mode);
Json spectrum_json(const Spectrum& s);
Json hamiltonian_json(const HamiltonianMatrix& h);
std::string hamiltonian_csv(const HamiltonianMatrix& h);
Json lagrangian_json(const LagrangianMatrix& l);

Json trajectory_json(const Trajectory& t);
// rep_q_prev,rep_q_curr,period per orbit.
std::string census_csv(const CycleDecomposition& c);
Json census_json(const CycleDecomposition& c);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace galq
