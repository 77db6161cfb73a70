#include "ncalg/scalar.hpp"

#include <algorithm>

#include "ncalg/error.hpp"
#include "ncalg/parse.hpp"

namespace ncalg {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto r = divide_exact(a, b);
  if (!r) throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
  return *r;
}

// gcd of a Laurent polynomial with a monomial-free polynomial.
Poly gcd_with(const Poly& laurent, const Poly& poly) {
  Poly p = laurent.unshifted(laurent.monomial_content());
  return poly_gcd(p, poly);
}

struct ScalarOps {
  Scalar number(const mpq_class& c) { return Scalar(c); }
  Scalar ident(const std::string& s) { return Scalar::var(s); }
  Scalar add(const Scalar& a, const Scalar& b) { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) { return a * b; }
  Scalar div(const Scalar& a, const Scalar& b) { return a / b; }
  Scalar neg(const Scalar& a) { return -a; }
  Scalar pow(const Scalar& a, const mpq_class& e) { return a.pow(e); }
};

}  // namespace

Scalar Scalar::var(std::string_view name) { return var_pow(name, 1); }

Scalar Scalar::var_pow(std::string_view name, const mpq_class& e) {
  Scalar s;
  s.num_ = Poly::monomial(Monomial::var(var_id(name), exp_units(e)));
  return s;
}

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "zero denominator");
  Scalar s;
  if (num.is_zero()) return s;
  Monomial md = den.monomial_content();
  mpq_class c = den.lead().c;
  Poly d = den.unshifted(md);
  Poly n = num.unshifted(md);
  if (c != 1) {
    mpq_class inv = 1 / c;
    d = d.scaled(inv);
    n = n.scaled(inv);
  }
  if (!d.is_one()) {
    Poly g = gcd_with(n, d);
    if (!g.is_one()) {
      n = exact(n.unshifted(n.monomial_content()), g).shifted(n.monomial_content());
      d = exact(d, g).monic();
    }
  }
  s.num_ = std::move(n);
  s.den_ = std::move(d);
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  ScalarOps ops;
  return ExprParser<Scalar, ScalarOps>(text, ops).run();
}

std::vector<VarId> Scalar::vars() const {
  auto a = num_.vars(), b = den_.vars();
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_one() && o.den_.is_one()) {
    Scalar s;
    s.num_ = num_ + o.num_;
    return s;
  }
  if (den_ == o.den_) return fraction(num_ + o.num_, den_);
  Poly g = poly_gcd(den_, o.den_);
  if (g.is_one()) return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly a = exact(den_, g), b = exact(o.den_, g);
  return fraction(num_ * b + o.num_ * a, den_ * b);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return {};
  Scalar s;
  if (den_.is_one() && o.den_.is_one()) {
    s.num_ = num_ * o.num_;
    return s;
  }
  // Monomials are units: no cancellation can occur.
  if (is_monomial() || o.is_monomial()) {
    s.num_ = num_ * o.num_;
    s.den_ = den_.is_one() ? o.den_ : den_;
    return s;
  }
  Poly n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
  if (!d2.is_one()) {
    Poly g = gcd_with(n1, d2);
    if (!g.is_one()) {
      Monomial m = n1.monomial_content();
      n1 = exact(n1.unshifted(m), g).shifted(m);
      d2 = exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    Poly g = gcd_with(n2, d1);
    if (!g.is_one()) {
      Monomial m = n2.monomial_content();
      n2 = exact(n2.unshifted(m), g).shifted(m);
      d1 = exact(d1, g);
    }
  }
  Poly d = d1 * d2;
  mpq_class c = d.lead().c;
  s.num_ = (n1 * n2).scaled(1 / c);
  s.den_ = d.scaled(1 / c);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DenominatorVanishes, "inverse of zero");
  return fraction(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw Error(ErrorKind::DenominatorVanishes, "division by zero");
  if (o.is_monomial()) {
    const Term& t = o.num_.lead();
    Scalar s;
    s.num_ = num_.unshifted(t.m).scaled(1 / t.c);
    s.den_ = den_;
    return s;
  }
  return *this * o.inverse();
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar s;
  s.num_ = num_.pow(static_cast<unsigned>(k));
  s.den_ = den_.pow(static_cast<unsigned>(k));
  return s;
}

Scalar Scalar::pow(const mpq_class& e) const {
  if (e.get_den() == 1) return pow(e.get_num().get_si());
  if (is_zero()) return {};
  if (!is_monomial())
    throw Error(ErrorKind::NotRepresentable, "fractional power of non-monomial " + str());
  const Term& t = num_.lead();
  unsigned long r = e.get_den().get_ui();
  long p = e.get_num().get_si();
  auto root = rational_root(t.c, r);
  if (!root) throw Error(ErrorKind::NotRepresentable, "no rational root of " + t.c.get_str());
  std::vector<Monomial::Entry> ents;
  Monomial m;
  for (auto& [v, u] : t.m.entries()) {
    long prod = static_cast<long>(u) * p;
    if (prod % static_cast<long>(r) != 0)
      throw Error(ErrorKind::NotRepresentable, "exponent outside the 1/12 grid");
    m = m * Monomial::var(v, static_cast<std::int32_t>(prod / static_cast<long>(r)));
  }
  mpq_class c = 1;
  mpq_class base = *root;
  if (p < 0) base = 1 / base;
  for (long i = 0; i < std::abs(p); ++i) c *= base;
  Scalar s;
  s.num_ = Poly::monomial(m, c);
  return s;
}

std::string Scalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.size() > 1 || !den_.is_monomial() || !den_.lead().m.is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

std::optional<mpq_class> rational_root(const mpq_class& x, unsigned long k) {
  if (k == 1) return x;
  bool neg = x < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  mpz_class n = abs(x.get_num()), d = x.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), k) == 0) return std::nullopt;
  mpq_class r(rn, rd);
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

namespace {

struct Evaluator {
  const std::map<VarId, Scalar>& vals;
  std::map<std::pair<VarId, std::int32_t>, Scalar> cache;

  const Scalar& power(VarId v, std::int32_t u) {
    auto key = std::make_pair(v, u);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, vals.at(v).pow(exp_value(u))).first->second;
  }

  Scalar eval(const Poly& p) {
    std::vector<Term> poly_part;
    Scalar rest;
    for (auto& t : p.terms()) {
      Scalar f(t.c);
      Monomial keep;
      for (auto& [v, u] : t.m.entries()) {
        if (vals.count(v))
          f *= power(v, u);
        else
          keep = keep * Monomial::var(v, u);
      }
      if (f.is_polynomial()) {
        for (auto& ft : f.num().terms()) poly_part.push_back({ft.m * keep, ft.c});
      } else {
        Scalar k;
        k = Scalar::from_poly(Poly::monomial(keep));
        rest += f * k;
      }
    }
    return Scalar::from_poly(Poly::from_terms(std::move(poly_part))) + rest;
  }
};

}  // namespace

Scalar specialize(const Scalar& s, const Bindings& b) {
  if (b.empty()) return s;
  std::map<VarId, Scalar> vals;
  for (auto& [name, v] : b) {
    VarId id = var_id(name);
    if (s.has_var(id)) vals.emplace(id, v);
  }
  if (vals.empty()) return s;
  Evaluator ev{vals, {}};
  Scalar den = ev.eval(s.den());
  if (den.is_zero())
    throw Error(ErrorKind::DenominatorVanishes, "denominator " + s.den().str() + " vanishes");
  return ev.eval(s.num()) / den;
}

namespace {

Poly derivative(const Poly& p, VarId v) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    std::int32_t u = t.m.exp(v);
    if (u == 0) continue;
    out.push_back({t.m.with_exp(v, u - kExpDen), t.c * exp_value(u)});
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

Scalar limit(const Scalar& s, std::string_view var, const mpq_class& point) {
  Bindings b{{std::string(var), Scalar(point)}};
  Scalar den = specialize(Scalar::from_poly(s.den()), b);
  if (den.is_zero()) {
    VarId v = var_id(var);
    std::string order = "?";
    try {
      Poly d = s.den();
      for (int k = 1; k < 64; ++k) {
        d = derivative(d, v);
        if (!specialize(Scalar::from_poly(d), b).is_zero()) {
          order = std::to_string(k);
          break;
        }
      }
    } catch (const Error&) {
    }
    throw Error(ErrorKind::PoleAtPoint, "pole of order " + order + " at " + std::string(var) +
                                            "=" + point.get_str() + " in " + s.str());
  }
  return specialize(Scalar::from_poly(s.num()), b) / den;
}

mpq_class valuation(const Scalar& s, std::string_view var) {
  VarId v = var_id(var);
  return exp_value(s.num().min_exp(v) - s.den().min_exp(v));
}

Scalar limit_zero_plus(const Scalar& s, std::string_view var) {
  VarId v = var_id(var);
  if (s.is_zero()) return s;
  std::int32_t vn = s.num().min_exp(v);
  if (vn < 0)
    throw Error(ErrorKind::DivergentLimit,
                std::string(var) + "^(" + exp_string(vn) + ") in " + s.str());
  return Scalar::fraction(s.num().coeff(v, 0), s.den().coeff(v, 0));
}

mpq_class random_rational(std::mt19937_64& rng, bool positive) {
  std::uniform_int_distribution<int> dist(-97, 96);
  auto draw = [&] {
    int x = dist(rng);
    return x >= 0 ? x + 1 : x;
  };
  int n = draw(), d = draw();
  if (positive) {
    n = std::abs(n);
    d = std::abs(d);
  }
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace ncalg
