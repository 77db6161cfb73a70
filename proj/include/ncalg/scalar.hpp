#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "ncalg/poly.hpp"

namespace ncalg {

// Element of the fraction field Q(q^(1/12), parameters).  The numerator is a
// Laurent polynomial, the denominator a polynomial free of monomial factors
// with leading coefficient 1; numerator and denominator are coprime.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  static Scalar var(std::string_view name);
  static Scalar var_pow(std::string_view name, const mpq_class& e);
  static Scalar from_poly(const Poly& p) { return fraction(p, Poly(1)); }
  static Scalar fraction(const Poly& num, const Poly& den);
  static Scalar parse(std::string_view text);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // c * monomial, no denominator.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  mpq_class rational() const { return num_.constant_value(); }
  bool has_var(VarId v) const { return num_.has_var(v) || den_.has_var(v); }
  std::vector<VarId> vars() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  Scalar pow(long k) const;
  // Rational power; only defined when the result stays in the field
  // (monomials with rational roots of the coefficient).
  Scalar pow(const mpq_class& e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  Poly num_;
  Poly den_{1};
};

using Bindings = std::map<std::string, Scalar>;

// Substitute variables by Scalars; throws DenominatorVanishes.
Scalar specialize(const Scalar& s, const Bindings& b);

// Limit at a rational point (PoleAtPoint) or at 0+ (DivergentLimit).
Scalar limit(const Scalar& s, std::string_view var, const mpq_class& point);
Scalar limit_zero_plus(const Scalar& s, std::string_view var);
// Lowest exponent of var in the Laurent expansion at var = 0.
mpq_class valuation(const Scalar& s, std::string_view var);

// Exact rational k-th root, if one exists.
std::optional<mpq_class> rational_root(const mpq_class& x, unsigned long k);

// Seeded random rational with numerator and denominator in [-97,97]\{0}.
mpq_class random_rational(std::mt19937_64& rng, bool positive = false);

}  // namespace ncalg
