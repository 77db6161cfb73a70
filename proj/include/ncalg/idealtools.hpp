#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ncalg/rewrite.hpp"

namespace ncalg {

// Column cap for linear algebra: NC_MAX_COLUMNS or 3000.
std::size_t max_columns();

struct CertificateTerm {
  Scalar coeff;
  Word left;
  std::size_t relation;
  Word right;
};

struct Membership {
  bool found = false;
  std::vector<CertificateTerm> certificate;  // filled when requested
};

// Sum of coeff * left * rels[relation] * right.
NcPoly expand_certificate(const RelationSet& rels, const std::vector<CertificateTerm>& cert);

// Echelon basis of span{u*r*v : |u|+|v|+deg r <= bound+margin}.  Exact
// arithmetic over Q when every coefficient is rational, over the fraction
// field otherwise.  Pivots are deglex-largest words (X_n > ... > X_1), so the
// rows whose pivot has length <= k span the window's intersection with F_k.
class IdealSpan {
 public:
  IdealSpan(const RelationSet& rels, int bound, int margin, bool certificates = false);
  ~IdealSpan();
  IdealSpan(IdealSpan&&) noexcept;

  int bound() const { return bound_; }
  int margin() const { return margin_; }
  bool symbolic() const;
  std::size_t columns() const;
  std::size_t rows_generated() const;
  std::size_t rank() const;
  // Number of pivots of length exactly k.
  std::size_t rank_at(int k) const;
  std::vector<NcPoly> basis() const;

  // Membership of f (deg f <= bound+margin); "not found" is not a disproof.
  Membership contains(const NcPoly& f) const;

  struct Impl;

 private:
  const RelationSet* rels_;
  int bound_, margin_;
  std::unique_ptr<Impl> impl_;
};

std::vector<NcPoly> ideal_basis(const RelationSet& rels, int bound, int margin);
Membership contains(const RelationSet& rels, const NcPoly& f, int bound, int margin,
                    bool certificate = false);

// d_k = n^k - rank of the degree-k component of the ideal, k = 0..N.
std::vector<std::size_t> graded_dims(const RelationSet& rels, int N);
// Layer dimensions of the filtered quotient, k = 0..N.
std::vector<std::size_t> filtered_dims(const RelationSet& rels, int N, int margin = 2);

// Variables with the lcm of their exponent denominators in the given
// coefficients, so that random values can be drawn as exact powers.
std::map<std::string, int> root_degrees(const std::vector<NcPoly>& polys);
// Seeded random rational values; v -> s^deg for variables needing roots.
Bindings random_bindings(const std::map<std::string, int>& vars, std::mt19937_64& rng,
                         const std::vector<std::string>& keep = {});

struct TrialResult {
  std::uint64_t seed = 0;
  Bindings bindings;
  std::vector<bool> commutes;  // per generator
  std::string error;           // set when the trial could not run
};

struct CentralReport {
  bool central = false;
  bool symbolic = false;
  int bound = 0, margin = 0;
  std::vector<TrialResult> trials;
  std::vector<std::string> kept_symbolic;
  std::string verdict;
};

// trials == 0: one symbolic run.  Otherwise T independent random
// specializations of every parameter except those listed in `keep`.
CentralReport central_by_ideal(const RelationSet& rels, const NcPoly& z, int bound, int margin = 2,
                               int trials = 0, std::uint64_t seed = 0,
                               const std::vector<std::string>& keep = {});

struct PotentialResult {
  CyclicPotential phi;
  std::vector<Scalar> lambda;    // d_j phi = lambda_j * rels[relation[j]]
  std::vector<int> relation;
};

// Solve d_j Phi = lambda_j rel_{sigma(j)} over cyclic words of degree <=
// max deg + 1, trying every assignment sigma of relations to generators.
std::optional<PotentialResult> find_potential(const RelationSet& rels);

// Null space of a matrix over the fraction field (rows = equations).
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m, std::size_t ncols);

Json central_json(const CentralReport& r);
Json bindings_json(const Bindings& b);

}  // namespace ncalg
