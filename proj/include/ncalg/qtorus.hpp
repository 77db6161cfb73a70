#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ncalg/json_io.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

// Basis order (s1, s2, s3, p1, p2, p3).
inline constexpr int kTorusRank = 6;
const std::array<std::string, kTorusRank>& torus_basis_names();

enum class LatticeKind { Generic, PIII };

// Skew pairing matrix with rational entries.
struct ShearLattice {
  LatticeKind kind = LatticeKind::Generic;
  std::array<std::array<mpq_class, kTorusRank>, kTorusRank> omega{};

  static ShearLattice make(LatticeKind k);
  std::string name() const { return kind == LatticeKind::Generic ? "generic" : "piii"; }
};

// Exponent vector with entries in (1/2)Z, stored doubled.
using Exponent = std::array<int, kTorusRank>;

mpq_class pairing(const ShearLattice& L, const Exponent& u, const Exponent& v);

class TorusElement {
 public:
  TorusElement() = default;
  explicit TorusElement(LatticeKind k) : kind_(k) {}
  TorusElement(LatticeKind k, const Scalar& c);
  static TorusElement exp(LatticeKind k, const Exponent& u, const Scalar& c = Scalar(1));

  LatticeKind kind() const { return kind_; }
  const std::map<Exponent, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_term(const Exponent& u, const Scalar& c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator-() const;
  TorusElement scaled(const Scalar& c) const;
  template <class F>
  TorusElement map_coeffs(F f) const {
    TorusElement r(kind_);
    for (auto& [u, c] : t_) r.add_term(u, f(c));
    return r;
  }

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.kind_ == b.kind_ && a.t_ == b.t_;
  }
  std::string str() const;

 private:
  LatticeKind kind_ = LatticeKind::Generic;
  std::map<Exponent, Scalar> t_;
};

// e^u * e^v = q^(-omega(u,v)/2) e^(u+v); classical = true drops the twist.
TorusElement torus_mul(const TorusElement& a, const TorusElement& b, bool classical = false);
TorusElement torus_commutator(const TorusElement& a, const TorusElement& b);
bool is_central_torus(const TorusElement& a);

// e^u -> eps^<shift,u> e^u.
TorusElement torus_rescale(const TorusElement& a, const std::array<mpq_class, kTorusRank>& shift,
                           const std::string& eps = "eps");
// eps -> 0+ limit of every coefficient (DivergentLimit on negative powers).
TorusElement torus_limit(const TorusElement& a, const std::string& eps = "eps");

// Commutative exponential polynomial such as
//   "e(s2+s3+p2/2) + g2*e(-s3-p3/2) + 2"
// where g1, g2, g3, ginf refer to previously built elements.
TorusElement parse_exp_poly(LatticeKind k, const std::string& text,
                            const std::map<std::string, TorusElement>& names);

enum class PainleveType { PVI, PV, PVdeg, PIV, PIII_D6, PIII_D7, PIII_D8, PII_JM, PII_FN, PI };

const std::vector<PainleveType>& all_painleve_types();
std::string painleve_name(PainleveType d);
PainleveType painleve_from_name(const std::string& s);  // throws UnknownType
std::array<int, 3> painleve_epsilon(PainleveType d);

struct ShearRealization {
  PainleveType type;
  LatticeKind lattice;
  std::array<TorusElement, 3> X;
  TorusElement g1, g2, g3, ginf;
  std::array<int, 3> eps;
  std::array<TorusElement, 4> Omega;  // omega_1..omega_4 from the g's
  bool reversed_orientation = false;
  std::vector<std::string> notes;     // deviations from the printed data
};

// Deviations from the printed table, each switchable.  Defaults give the
// consistent reading; all false reproduces the printed data verbatim.
struct ShearOptions {
  bool corrected_rows = true;     // fix entries that contradict the cubic
  bool negate_omega4 = true;      // omega_4 sign matching the inverted x signs
  bool reversed_orientation = true;  // relations hold with q -> 1/q in the torus
  static ShearOptions as_printed() { return {false, false, false}; }
};

ShearRealization painleve_data(PainleveType d, const ShearOptions& opt = {});

struct ShearCheck {
  std::string name;
  bool pass = false;
  std::string residual;  // empty when pass
};

struct ShearReport {
  PainleveType type;
  bool quantum = true;
  bool pass = false;
  std::vector<ShearCheck> checks;
  std::vector<std::string> notes;
};

// Quantum: J1, J2, J3 vanish and the Omega's are central.  Classical: the
// cubic vanishes identically on the commutative torus.
ShearReport verify_painleve(PainleveType d, bool quantum, const ShearOptions& opt = {});
ShearReport verify_realization(const ShearRealization& r, bool quantum);
// J_k for a realization (quantum relations of the UZ family).
std::array<TorusElement, 3> torus_relations(const ShearRealization& r);
// Omega_1..Omega_4 from G's by the omega/g formulas, products in the torus.
std::array<TorusElement, 4> torus_omegas(const TorusElement& g1, const TorusElement& g2,
                                         const TorusElement& g3, const TorusElement& ginf,
                                         const std::array<int, 3>& eps, bool negate_omega4);

Json torus_to_json(const TorusElement& a);
TorusElement torus_from_json(const Json& j);
Json shear_report_json(const ShearReport& r);

}  // namespace ncalg
