#include <algorithm>
#include <map>
#include <numeric>

#include "ncalg/poly.hpp"

namespace ncalg {

namespace {

Poly gcd_rec(const Poly& a, const Poly& b);

Poly exact(const Poly& a, const Poly& b) {
  auto r = divide_exact(a, b);
  return r ? *r : Poly();
}

// Substitute v^g -> v for every variable with a common exponent step g > 1.
struct Deflation {
  std::map<VarId, std::int32_t> step;

  static Deflation of(const Poly& a, const Poly& b) {
    Deflation d;
    for (const Poly* p : {&a, &b})
      for (auto& t : p->terms())
        for (auto& [v, e] : t.m.entries()) {
          auto& g = d.step[v];
          g = std::gcd(g, e);
        }
    for (auto it = d.step.begin(); it != d.step.end();) {
      if (it->second <= 1)
        it = d.step.erase(it);
      else
        ++it;
    }
    return d;
  }
  Poly apply(const Poly& p, bool inflate) const {
    std::vector<Term> out;
    out.reserve(p.size());
    for (auto& t : p.terms()) {
      Monomial m = t.m;
      for (auto& [v, g] : step) {
        auto e = m.exp(v);
        if (e != 0) m = m.with_exp(v, inflate ? e * g : e / g);
      }
      out.push_back({m, t.c});
    }
    return Poly::from_terms(std::move(out));
  }
};

Poly content(const Poly& p, VarId v) {
  auto cs = p.coeffs(v);
  Poly g = cs.front().second.monic();
  for (std::size_t i = 1; i < cs.size() && !g.is_one(); ++i) g = gcd_rec(g, cs[i].second);
  return g;
}

Poly primitive(const Poly& p, VarId v) {
  Poly c = content(p, v);
  if (c.is_one()) return p.monic();
  return exact(p, c).monic();
}

// Pseudo-remainder of a by b with respect to v (a nonzero multiple by a
// power of lc_v(b) is harmless because only primitive parts are kept).
Poly prem(const Poly& a, const Poly& b, VarId v) {
  std::int32_t db = b.max_exp(v);
  Poly lcb = b.coeff(v, db);
  Poly r = a;
  while (!r.is_zero()) {
    std::int32_t dr = r.max_exp(v);
    if (dr < db) break;
    Poly lcr = r.coeff(v, dr);
    r = r * lcb - (lcr * b).shifted(Monomial::var(v, dr - db));
  }
  return r;
}

Poly univariate_gcd(Poly a, Poly b) {
  // Euclid over Q with monic remainders.
  a = a.monic();
  b = b.monic();
  VarId v = a.terms().front().m.entries().front().first;
  if (a.max_exp(v) < b.max_exp(v)) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = a;
    std::int32_t db = b.max_exp(v);
    while (!r.is_zero() && r.max_exp(v) >= db) {
      const Term& lt = r.lead();
      r -= b.shifted(Monomial::var(v, lt.m.exp(v) - db)).scaled(lt.c);
    }
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Image of p under w -> val(w) for every w != v.
Poly evaluate_except(const Poly& p, VarId v, const std::map<VarId, mpq_class>& val) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    mpq_class c = t.c;
    for (auto& [w, e] : t.m.entries()) {
      if (w == v) continue;
      mpq_class x = val.at(w), r = 1;
      for (std::int32_t i = 0; i < e; ++i) r *= x;
      c *= r;
    }
    out.push_back({Monomial::var(v, t.m.exp(v)), c});
  }
  return Poly::from_terms(std::move(out));
}

// True when gcd(a, b) provably has degree 0 in v.  A common factor g of
// positive degree survives evaluation of the other variables at any point
// where lc_v(a) does not vanish, so a constant image gcd is a certificate.
bool coprime_in(const Poly& a, const Poly& b, VarId v, const std::vector<VarId>& vars) {
  static const int kPoints[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::int32_t da = a.max_exp(v);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::map<VarId, mpq_class> val;
    std::size_t i = static_cast<std::size_t>(attempt) * 5;
    for (VarId w : vars) val[w] = kPoints[i++ % 12] * (attempt % 2 ? -1 : 1);
    Poly ea = evaluate_except(a, v, val);
    if (ea.max_exp(v) != da) continue;
    Poly eb = evaluate_except(b, v, val);
    if (eb.is_zero()) return false;
    if (eb.max_exp(v) == 0) return true;
    return univariate_gcd(ea, eb).max_exp(v) == 0;
  }
  return false;
}

Poly gcd_nomono(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.monic() == b.monic()) return a.monic();

  Deflation d = Deflation::of(a, b);
  if (!d.step.empty()) return d.apply(gcd_nomono(d.apply(a, false), d.apply(b, false)), true);

  auto va = a.vars(), vb = b.vars();
  for (VarId v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_rec(content(a, v), b);
  for (VarId v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_rec(a, content(b, v));

  if (va.size() == 1) return univariate_gcd(a, b);

  for (VarId v : va)
    if (coprime_in(a, b, v, va)) return gcd_rec(content(a, v), content(b, v));

  // Main variable: the one of smallest degree keeps the remainder sequence short.
  VarId v = va.front();
  std::int32_t best = std::max(a.max_exp(v), b.max_exp(v));
  for (VarId w : va) {
    std::int32_t dw = std::max(a.max_exp(w), b.max_exp(w));
    if (dw < best) {
      best = dw;
      v = w;
    }
  }

  Poly ca = content(a, v), cb = content(b, v);
  Poly c = gcd_rec(ca, cb);
  Poly pa = ca.is_one() ? a.monic() : exact(a, ca).monic();
  Poly pb = cb.is_one() ? b.monic() : exact(b, cb).monic();
  if (pa.max_exp(v) < pb.max_exp(v)) std::swap(pa, pb);

  // Cheap exit when one primitive part divides the other.
  if (auto q = divide_exact(pa, pb)) return (c * pb).monic();

  while (true) {
    Poly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    if (r.max_exp(v) == 0) {
      pb = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive(r, v);
  }
  return (c * primitive(pb, v)).monic();
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Monomial ma = a.monomial_content(), mb = b.monomial_content();
  Monomial common = Monomial::min(ma, mb);
  // Both inputs are polynomials, so the minimum is nonnegative.
  Poly ra = ma.is_one() ? a : a.unshifted(ma);
  Poly rb = mb.is_one() ? b : b.unshifted(mb);
  Poly g = gcd_nomono(ra, rb);
  return g.shifted(common).monic();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace ncalg
