#include "ncalg/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ncalg/error.hpp"

namespace ncalg {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;

  Registry() {
    // Known parameter names are registered up front in sorted order so that
    // variable ids, and therefore the term order, follow the names.
    std::vector<std::string> seed = {
        "Lambda", "Om1", "Om2", "Om3", "a", "a1", "a2", "alpha", "b", "b1", "b2", "beta",
        "c", "c1", "c2", "d", "d1", "d2", "d3", "delta1", "delta2", "delta3", "e1", "e2",
        "e3", "eps", "eps1", "eps2", "eps3", "eta", "eta1", "eta2", "eta3", "g1", "g2", "g3",
        "gamma", "ginf", "k1", "k2", "k3", "lambda", "m", "m1", "m2", "om1", "om2", "om3",
        "om4", "q", "qh", "r2", "r3", "rho", "sigma", "sigma1", "sigma2", "sigma3", "t", "tau",
        "tau1", "tau2", "w"};
    std::sort(seed.begin(), seed.end());
    for (auto& s : seed) add(s);
  }
  VarId add(const std::string& s) {
    auto id = static_cast<VarId>(names.size());
    names.push_back(s);
    ids.emplace(s, id);
    return id;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::DivergentLimit: return "DivergentLimit";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NotOrientable: return "NotOrientable";
    case ErrorKind::NotConfluent: return "NotConfluent";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::UnknownPreset: return "UnknownPreset";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

VarId var_id(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  std::string s(name);
  auto it = r.ids.find(s);
  if (it != r.ids.end()) return it->second;
  return r.add(s);
}

const std::string& var_name(VarId id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(id);
}

std::int32_t exp_units(const mpq_class& e) {
  mpq_class u = e * kExpDen;
  if (u.get_den() != 1 || !u.get_num().fits_sint_p()) {
    throw Error(ErrorKind::NotRepresentable,
                "exponent " + e.get_str() + " needs a denominator beyond " +
                    std::to_string(kExpDen));
  }
  return static_cast<std::int32_t>(u.get_num().get_si());
}

mpq_class exp_value(std::int32_t units) {
  mpq_class r(units, kExpDen);
  r.canonicalize();
  return r;
}

std::string exp_string(std::int32_t units) { return exp_value(units).get_str(); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, std::int32_t units) {
  if (units == 0) return {};
  return Monomial({{v, units}});
}

std::int32_t Monomial::exp(VarId v) const {
  for (auto& [id, e] : e_) {
    if (id == v) return e;
    if (id > v) break;
  }
  return 0;
}

std::int64_t Monomial::total() const {
  std::int64_t s = 0;
  for (auto& p : e_) s += p.second;
  return s;
}

bool Monomial::nonnegative() const {
  return std::all_of(e_.begin(), e_.end(), [](const Entry& p) { return p.second > 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<Entry> r;
  r.reserve(e_.size() + o.e_.size());
  auto i = e_.begin(), j = o.e_.begin();
  while (i != e_.end() || j != o.e_.end()) {
    if (j == o.e_.end() || (i != e_.end() && i->first < j->first)) {
      r.push_back(*i++);
    } else if (i == e_.end() || j->first < i->first) {
      r.push_back(*j++);
    } else {
      std::int32_t s = i->second + j->second;
      if (s != 0) r.emplace_back(i->first, s);
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(r));
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.pow(-1); }

bool Monomial::divides(const Monomial& o) const {
  for (auto& [v, e] : e_) {
    if (o.exp(v) < e) return false;
  }
  return true;
}

Monomial Monomial::without(VarId v) const {
  std::vector<Entry> r;
  for (auto& p : e_)
    if (p.first != v) r.push_back(p);
  return Monomial(std::move(r));
}

Monomial Monomial::with_exp(VarId v, std::int32_t units) const {
  std::vector<Entry> r;
  bool placed = false;
  for (auto& p : e_) {
    if (!placed && p.first >= v) {
      if (units != 0) r.emplace_back(v, units);
      placed = true;
      if (p.first == v) continue;
    }
    r.push_back(p);
  }
  if (!placed && units != 0) r.emplace_back(v, units);
  return Monomial(std::move(r));
}

Monomial Monomial::pow(std::int64_t k) const {
  if (k == 0) return {};
  std::vector<Entry> r = e_;
  for (auto& p : r) p.second = static_cast<std::int32_t>(p.second * k);
  return Monomial(std::move(r));
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  std::vector<Entry> r;
  auto i = a.e_.begin(), j = b.e_.begin();
  while (i != a.e_.end() || j != b.e_.end()) {
    if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first)) {
      if (i->second < 0) r.push_back(*i);
      ++i;
    } else if (i == a.e_.end() || j->first < i->first) {
      if (j->second < 0) r.push_back(*j);
      ++j;
    } else {
      r.emplace_back(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return Monomial(std::move(r));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto ta = a.total(), tb = b.total();
  if (ta != tb) return ta <=> tb;
  auto i = a.e_.begin(), j = b.e_.begin();
  while (i != a.e_.end() || j != b.e_.end()) {
    if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first)) {
      return i->second > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i == a.e_.end() || j->first < i->first) {
      return j->second > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i->second != j->second) return i->second <=> j->second;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::str() const {
  std::string s;
  for (auto& [v, e] : e_) {
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e != kExpDen) {
      if (e % kExpDen == 0 && e > 0)
        s += "^" + std::to_string(e / kExpDen);
      else
        s += "^(" + exp_string(e) + ")";
    }
  }
  return s;
}

// ---------------------------------------------------------------- Poly

namespace {

bool term_greater(const Term& a, const Term& b) { return a.m > b.m; }

// Sort descending and merge equal monomials.
std::vector<Term> canonical(std::vector<Term> v) {
  std::sort(v.begin(), v.end(), term_greater);
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c == 0) out.pop_back();
    } else if (t.c != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Poly::Poly(const mpq_class& c) {
  if (c != 0) {
    t_.push_back({Monomial(), c});
    t_.back().c.canonicalize();
  }
}

Poly Poly::monomial(const Monomial& m, const mpq_class& c) {
  Poly p;
  if (c != 0) {
    p.t_.push_back({m, c});
    p.t_.back().c.canonicalize();
  }
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.t_ = canonical(std::move(terms));
  return p;
}

mpq_class Poly::constant_value() const {
  if (t_.empty()) return 0;
  return t_.back().m.is_one() ? t_.back().c : mpq_class(0);
}

Poly Poly::operator+(const Poly& o) const {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return o;
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  auto i = t_.begin(), j = o.t_.begin();
  while (i != t_.end() || j != o.t_.end()) {
    if (j == o.t_.end()) {
      r.t_.push_back(*i++);
      continue;
    }
    if (i == t_.end()) {
      r.t_.push_back(*j++);
      continue;
    }
    auto cmp = i->m <=> j->m;
    if (cmp > 0) {
      r.t_.push_back(*i++);
    } else if (cmp < 0) {
      r.t_.push_back(*j++);
    } else {
      mpq_class s = i->c + j->c;
      if (s != 0) r.t_.push_back({i->m, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (t_.empty() || o.t_.empty()) return {};
  if (o.t_.size() == 1) {
    Poly r;
    r.t_.reserve(t_.size());
    for (auto& t : t_) r.t_.push_back({t.m * o.t_[0].m, t.c * o.t_[0].c});
    return r;
  }
  if (t_.size() == 1) return o * *this;
  std::vector<Term> v;
  v.reserve(t_.size() * o.t_.size());
  for (auto& a : t_)
    for (auto& b : o.t_) v.push_back({a.m * b.m, a.c * b.c});
  return from_terms(std::move(v));
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Poly Poly::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.m = t.m * m;
  return r;
}

Poly Poly::unshifted(const Monomial& m) const { return shifted(m.pow(-1)); }

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i) {
    if (a.t_[i].c != b.t_[i].c || !(a.t_[i].m == b.t_[i].m)) return false;
  }
  return true;
}

bool Poly::has_var(VarId v) const {
  return std::any_of(t_.begin(), t_.end(), [v](const Term& t) { return t.m.exp(v) != 0; });
}

std::vector<VarId> Poly::vars() const {
  std::vector<VarId> r;
  for (auto& t : t_)
    for (auto& p : t.m.entries()) r.push_back(p.first);
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

std::int32_t Poly::max_exp(VarId v) const {
  std::int32_t m = 0;
  bool first = true;
  for (auto& t : t_) {
    auto e = t.m.exp(v);
    if (first || e > m) m = e;
    first = false;
  }
  return m;
}

std::int32_t Poly::min_exp(VarId v) const {
  std::int32_t m = 0;
  bool first = true;
  for (auto& t : t_) {
    auto e = t.m.exp(v);
    if (first || e < m) m = e;
    first = false;
  }
  return m;
}

Monomial Poly::monomial_content() const {
  if (t_.empty()) return {};
  Monomial m = t_[0].m;
  for (std::size_t i = 1; i < t_.size(); ++i) m = Monomial::min(m, t_[i].m);
  return m;
}

Poly Poly::coeff(VarId v, std::int32_t units) const {
  std::vector<Term> r;
  for (auto& t : t_)
    if (t.m.exp(v) == units) r.push_back({t.m.without(v), t.c});
  Poly p;
  p.t_ = std::move(r);  // removing one variable keeps the order
  return p;
}

std::vector<std::pair<std::int32_t, Poly>> Poly::coeffs(VarId v) const {
  std::vector<std::pair<std::int32_t, std::vector<Term>>> buckets;
  for (auto& t : t_) {
    auto e = t.m.exp(v);
    auto it = std::find_if(buckets.begin(), buckets.end(), [e](auto& b) { return b.first == e; });
    if (it == buckets.end()) {
      buckets.push_back({e, {}});
      it = buckets.end() - 1;
    }
    it->second.push_back({t.m.without(v), t.c});
  }
  std::sort(buckets.begin(), buckets.end(), [](auto& a, auto& b) { return a.first > b.first; });
  std::vector<std::pair<std::int32_t, Poly>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Poly p;
    p.t_ = std::move(b.second);
    out.emplace_back(b.first, std::move(p));
  }
  return out;
}

Poly Poly::monic() const {
  if (t_.empty() || t_[0].c == 1) return *this;
  mpq_class inv = 1 / t_[0].c;
  return scaled(inv);
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Ascending order reads more naturally.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    mpq_class c = it->c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (it->m.is_one()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << it->m.str();
    }
  }
  return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly();
  const Term& lb = b.lead();
  if (b.is_monomial()) {
    for (auto& t : a.terms())
      if (!lb.m.divides(t.m)) return std::nullopt;
    return a.unshifted(lb.m).scaled(1 / lb.c);
  }
  std::vector<Term> quot;
  Poly r = a;
  mpq_class inv = 1 / lb.c;
  while (!r.is_zero()) {
    const Term& lr = r.lead();
    if (!lb.m.divides(lr.m)) return std::nullopt;
    Term t{lr.m / lb.m, lr.c * inv};
    r -= b * Poly::monomial(t.m, t.c);
    quot.push_back(std::move(t));
  }
  return Poly::from_terms(std::move(quot));
}

}  // namespace ncalg
