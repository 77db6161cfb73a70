#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncalg/json_io.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using CommExp = std::vector<int>;

// Polynomial in commuting variables with Scalar coefficients.
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  CommPoly(std::vector<std::string> vars, const Scalar& c);
  static CommPoly var(std::vector<std::string> vars, int i);
  static CommPoly monomial(std::vector<std::string> vars, const CommExp& e, const Scalar& c = 1);
  // Identifiers in `vars` are variables, any other identifier is a scalar
  // parameter; powers of variables must be nonnegative integers.
  static CommPoly parse(const std::vector<std::string>& vars, std::string_view text);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<CommExp, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;
  Scalar coeff(const CommExp& e) const;
  void add_term(const CommExp& e, const Scalar& c);

  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator-() const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly& operator+=(const CommPoly& o) { return *this = *this + o; }
  CommPoly& operator-=(const CommPoly& o) { return *this = *this - o; }
  CommPoly scaled(const Scalar& c) const;
  CommPoly pow(unsigned k) const;
  CommPoly derivative(int i) const;
  // Substitute each variable by a polynomial in a common new variable set.
  CommPoly compose(const std::vector<CommPoly>& images) const;
  template <class F>
  CommPoly map_coeffs(F f) const {
    CommPoly r(vars_);
    for (auto& [e, c] : t_) r.add_term(e, f(c));
    return r;
  }
  CommPoly renamed(std::vector<std::string> vars) const;

  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.vars_ == b.vars_ && a.t_ == b.t_;
  }
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<CommExp, Scalar> t_;
};

CommPoly specialize(const CommPoly& f, const Bindings& b);

// Jacobian Poisson structure on C^3 defined by a potential.
struct PoissonStructure {
  std::string name;
  CommPoly phi;
};

// {x_i, x_j} for i < j; the other entries follow by antisymmetry.
class BracketTable {
 public:
  BracketTable() = default;
  explicit BracketTable(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  CommPoly get(int i, int j) const;
  void set(int i, int j, const CommPoly& v);
  BracketTable scaled(const Scalar& c) const;
  // {f, g} = sum_ij d_i f d_j g {x_i, x_j}.
  CommPoly bracket(const CommPoly& f, const CommPoly& g) const;

  friend bool operator==(const BracketTable& a, const BracketTable& b) {
    return a.vars_ == b.vars_ && a.e_ == b.e_;
  }
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  std::map<std::pair<int, int>, CommPoly> e_;
};

// det d(f, g, phi)/d(x1, x2, x3); WrongArity unless three variables.
CommPoly nambu(const PoissonStructure& p, const CommPoly& f, const CommPoly& g);
BracketTable nambu_table(const PoissonStructure& p);

// Table from entries "{x1,x2}", "{x2,x3}", "{x3,x1}" in that order.
BracketTable bracket_table(const std::vector<std::string>& vars, const std::string& b12,
                           const std::string& b23, const std::string& b31);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct PoissonReport {
  std::string name;
  bool pass = false;
  std::vector<CheckItem> checks;
};

// Jacobi on the coordinate triple, Casimir property of phi, unimodularity.
PoissonReport poisson_checks(const PoissonStructure& p);
// Jacobi and unimodularity of an arbitrary table; Casimir when phi is given.
PoissonReport bracket_checks(const BracketTable& t, const CommPoly* casimir = nullptr);

// Words read as commutative monomials, letter i -> vars[i].
CommPoly commutative_image(const NcPoly& f, const std::vector<std::string>& vars);

// Entry (i, j) = lim_{q->1} reduce([X_i, X_j]) / (q - 1), words read as
// commutative monomials.  PoleAtPoint if some coefficient diverges.
BracketTable classical_limit(const RewriteSystem& rs, const std::vector<std::string>& vars,
                             const std::string& q = "q");

// s with a == s * b for s = +1 or -1.
std::optional<int> sign_relation(const BracketTable& a, const BracketTable& b);

// x_i -> factor_i * y_i, parameters substituted, potential multiplied by
// potential_factor.  Brackets pick up bracket_factor, which defaults to
// potential_factor * prod(factor_i) so Jacobian structures stay Jacobian.
struct CommRescaling {
  std::vector<Scalar> factor;
  Bindings params;
  Scalar potential_factor = 1;
  std::optional<Scalar> bracket_factor;
  std::vector<std::string> new_vars;  // defaults to the old names
  std::string eps = "eps";
  Bindings finally;  // applied after the limit (radicals such as r2 -> 2)
};

struct LimitReport {
  std::vector<std::string> steps;
};

// eps -> 0+ of the rescaled object; DivergentLimit names the monomial.
CommPoly scale_limit(const CommPoly& phi, const CommRescaling& r, LimitReport* rep = nullptr);
PoissonStructure scale_limit(const PoissonStructure& p, const CommRescaling& r,
                             LimitReport* rep = nullptr);
BracketTable scale_limit(const BracketTable& t, const CommRescaling& r, LimitReport* rep = nullptr);

// T_n(w) by T_{n+1} = 2w T_n - T_{n-1}; coefficients of w^k, k = 0..n.
std::vector<mpz_class> chebyshev_t(int n);

Json commpoly_to_json(const CommPoly& f);
CommPoly commpoly_from_json(const Json& j);
Json bracket_table_json(const BracketTable& t);
Json poisson_report_json(const PoissonReport& r);

}  // namespace ncalg
