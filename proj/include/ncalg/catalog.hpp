#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ncalg/freealg.hpp"
#include "ncalg/json_io.hpp"
#include "ncalg/poisson.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

// anchor -> one-line description of the transcribed formula.
const std::map<std::string, std::string>& anchor_map();

struct CentralCandidate {
  std::string name;
  NcPoly element;
  std::string anchor;
  bool as_printed = true;  // false for a corrected reading
  std::string note;
};

struct AlgebraPreset {
  std::string id;
  std::string title;
  RelationSet rels;
  std::optional<CyclicPotential> potential;
  std::vector<CentralCandidate> central;
  // Semiclassical data: classical_limit in `classical_q` after generators are
  // multiplied by classical_gen_factor and parameters bound by classical_params.
  std::string classical;  // PoissonStructure preset id, empty if none
  std::string classical_q = "q";
  std::vector<Scalar> classical_gen_factor;
  Bindings classical_params;
  int classical_sign = 1;
  std::vector<std::string> anchors;
  std::vector<std::string> assumptions;
  std::vector<Scalar> nonvanishing;  // generic-parameter conditions
  std::vector<std::string> warnings;
  MonomialOrder order;
  std::string notes;

  const CentralCandidate& candidate(const std::string& name) const;  // UnknownPreset
  // Relations prepared for classical_limit (generator factors and params).
  RelationSet semiclassical_relations() const;
};

struct PoissonPreset {
  std::string id;
  PoissonStructure structure;
  std::optional<BracketTable> printed_table;  // brackets as printed, if any
  std::vector<std::string> anchors;
  std::string notes;
};

struct DegenerationPreset {
  std::string id;
  std::string source;  // PoissonPreset ids
  std::string target;
  CommRescaling rescaling;
  std::vector<std::string> anchors;
  std::string notes;
};

// Ids of the form "uz:PVI" or "uz:PVI:geometric" carry their variant after
// the colon.  Bindings override symbolic parameters; bindings that violate a
// genericity condition only add warnings.
AlgebraPreset algebra_preset(const std::string& id, const Bindings& params = {});
PoissonPreset poisson_preset(const std::string& id, const Bindings& params = {});
DegenerationPreset degeneration_preset(const std::string& id);
Bindings binding_set(const std::string& id);

using AnyPreset = std::variant<AlgebraPreset, PoissonPreset>;
// Algebra ids first, then Poisson ids; UnknownPreset otherwise.
AnyPreset preset(const std::string& id, const Bindings& params = {});

std::vector<std::string> algebra_preset_ids();
std::vector<std::string> poisson_preset_ids();
std::vector<std::string> degeneration_preset_ids();
std::vector<std::string> binding_set_ids();

// The four omega formulas verbatim.
std::array<Scalar, 4> omega_from_g(const Scalar& g1, const Scalar& g2, const Scalar& g3,
                                   const Scalar& ginf, const std::array<mpq_class, 3>& eps);

// Linear map X -> images, e.g. the rotation and rescaling carrying the
// Odesskii relations to the quantum sl2 form.
struct GeneratorMap {
  std::string id;
  std::vector<NcPoly> images;
  std::vector<std::string> anchors;
  std::string notes;
};
GeneratorMap odesskii_transport(bool as_printed = false);

// Diagonal rescaling Y_i -> kappa_i Y_i with q substituted, solved so that
// every source relation becomes proportional to the target relation with the
// same index.  Equations are multiplicative, solved linearly on exponents
// with the gauge kappa_fixed = 1.
struct RescalingSolve {
  bool found = false;
  std::vector<Scalar> kappa;
  std::vector<Scalar> units;  // target_j = unit_j * rescaled source_j
  std::vector<std::string> log;
};
RescalingSolve solve_rescaling(const RelationSet& source, const RelationSet& target,
                               const Bindings& substitution, int fixed = 1);

Json algebra_preset_json(const AlgebraPreset& p);
Json poisson_preset_json(const PoissonPreset& p);
Json degeneration_preset_json(const DegenerationPreset& d);
Json presets_manifest();

}  // namespace ncalg
