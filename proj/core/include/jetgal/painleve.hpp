#ifndef JETGAL_PAINLEVE_HPP
#define JETGAL_PAINLEVE_HPP

#include <string>

#include "jetgal/first_integrals.hpp"
#include "jetgal/rational_map.hpp"

namespace jetgal::painleve {

enum class Id { I, II, III, IV, V, VI };

const char* name(Id id);
Id id_from_string(const std::string& s); // "I".."VI"

std::size_t param_arity(Id id); // 0, 1, 4, 2, 4, 4

// chart (x, u, v; alpha, ..) of the equation
const Chart& equation_chart(Id id);
// right-hand side F with u'' = F(x, u, u')
const RationalFunction& rhs(Id id);
// d/dx + v d/du + F d/dv
const VectorField& field(Id id);
// the field with all parameters specialized; ArityMismatch unless the map
// covers the parameters exactly
VectorField field(Id id, const std::map<Symbol, Scalar>& specialization);

// chart (x, u, v; a, b, c, d) of the Hamiltonian forms
const Chart& hamiltonian_chart();
// H with u' = dH/dv, v' = -dH/du conjugate to the equation (III..VI)
const RationalFunction& hamiltonian(Id id);

// L_X (dx^du^dv) == 0, for the catalog field (I, II) or the Hamiltonian
// field (III..VI)
bool verify_volume(Id id);

struct ParamMap {
  std::map<Symbol, RationalFunction> images; // equation params <- (a,b,c,d)
  bool unique = false;
};

struct HamiltonianCheck {
  bool pass = false;
  RationalFunction residue; // H_vx + H_v H_vu - H_u H_vv - F(x, u, H_v)
};

// checks the conjugation identity under the given parameter correspondence
HamiltonianCheck verify_hamiltonian(Id id, const std::map<Symbol, RationalFunction>& pm);

// the same identity for a caller-supplied Hamiltonian candidate on the
// (x, u, v; a, b, c, d) chart
HamiltonianCheck verify_hamiltonian_candidate(Id id, const RationalFunction& h,
                                              const std::map<Symbol, RationalFunction>& pm);

// solves the conjugation identity for the equation parameters; NoSolution
// would indicate a catalog transcription error
ParamMap derive_param_map(Id id);

// One degeneration step: the source equation's field, pulled back along the
// epsilon-family of changes of variables and rescaled, limits onto the
// target's field at epsilon = 0.
struct Confluence {
  Id source = Id::I, target = Id::I;
  Chart chart; // (t, f, g; residual params.., epsilon)
  std::vector<RationalFunction> fiber_map; // images of x, u, v
  std::map<Symbol, RationalFunction> param_map; // images of the source params
  RationalFunction scale;
};

const std::vector<Confluence>& confluences(); // III->II, IV->II, V->IV, VI->V
const Confluence& confluence(Id source, Id target);

// scale * (pullback of the source field along the fiber map, source
// parameters substituted first)
VectorField confluence_field(const Confluence& c);

struct ConfluenceCheck {
  bool pass = false;
  std::string detail; // first mismatching coefficient, when failing
};

// every coefficient regular at epsilon = 0 (else PoleAtZero), and the value
// at epsilon = 0 equals the target field exactly
ConfluenceCheck verify_confluence(const Confluence& c);

// registers rho with rho^6 = 2 (for the radical confluence scales)
void ensure_radical_extension();

// canonical catalog serialization; data/painleve_catalog.txt is this text
std::string catalog_text();

} // namespace jetgal::painleve

#endif
