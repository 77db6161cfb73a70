#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ncalg {

// Exponents are stored as integers in units of 1/kExpDen, so q^(1/2), q^(1/4)
// and the odd radical constant all live in one exact representation.
inline constexpr int kExpDen = 12;

using VarId = std::uint16_t;

VarId var_id(std::string_view name);
const std::string& var_name(VarId id);

// Exponent conversions between rational values and internal units.
std::int32_t exp_units(const mpq_class& e);
mpq_class exp_value(std::int32_t units);
std::string exp_string(std::int32_t units);

class Monomial {
 public:
  using Entry = std::pair<VarId, std::int32_t>;

  Monomial() = default;
  static Monomial var(VarId v, std::int32_t units = kExpDen);

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }
  std::int32_t exp(VarId v) const;
  std::int64_t total() const;
  bool nonnegative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial without(VarId v) const;
  Monomial with_exp(VarId v, std::int32_t units) const;
  Monomial pow(std::int64_t k) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Graded lexicographic order, lower variable ids more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  static Monomial min(const Monomial& a, const Monomial& b);

  std::string str() const;

 private:
  explicit Monomial(std::vector<Entry> e) : e_(std::move(e)) {}
  std::vector<Entry> e_;
};

struct Term {
  Monomial m;
  mpq_class c;
};

// Sparse multivariate Laurent polynomial over Q, terms sorted by decreasing
// monomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpq_class& c);
  explicit Poly(long c) : Poly(mpq_class(c)) {}
  static Poly monomial(const Monomial& m, const mpq_class& c = 1);
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }
  bool is_monomial() const { return t_.size() == 1; }
  mpq_class constant_value() const;
  const Term& lead() const { return t_.front(); }
  std::size_t size() const { return t_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpq_class& c) const;
  Poly shifted(const Monomial& m) const;
  Poly unshifted(const Monomial& m) const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly&, const Poly&);

  bool has_var(VarId v) const;
  std::vector<VarId> vars() const;
  std::int32_t max_exp(VarId v) const;
  std::int32_t min_exp(VarId v) const;
  // Monomial of componentwise minimal exponents across the support.
  Monomial monomial_content() const;
  // Coefficient of v^units as a polynomial free of v.
  Poly coeff(VarId v, std::int32_t units) const;
  // Coefficients keyed by exponent of v (descending).
  std::vector<std::pair<std::int32_t, Poly>> coeffs(VarId v) const;
  Poly monic() const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

// Exact division; nullopt when b does not divide a. Both must be polynomials
// (nonnegative exponents).
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
// Monic gcd of two polynomials with nonnegative exponents.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace ncalg
