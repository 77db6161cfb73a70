#include "ncalg/poisson.hpp"

#include <algorithm>
#include <array>

#include "ncalg/error.hpp"
#include "ncalg/parse.hpp"

namespace ncalg {

namespace {

std::string mono_str(const std::vector<std::string>& vars, const CommExp& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string term_str(const Scalar& c, const std::string& m, bool first) {
  std::string cs = c.str();
  bool simple = c.is_polynomial() && c.num().size() == 1;
  std::string out;
  if (simple && cs[0] == '-') {
    out = first ? "-" : " - ";
    cs = cs.substr(1);
  } else {
    out = first ? "" : " + ";
    if (!simple) cs = "(" + cs + ")";
  }
  if (m == "1") return out + cs;
  if (cs == "1") return out + m;
  return out + cs + "*" + m;
}

int total(const CommExp& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

void check_vars(const CommPoly& a, const CommPoly& b) {
  if (a.vars() != b.vars())
    throw Error(ErrorKind::AlphabetMismatch, "commutative polynomials over different variables");
}

struct CommOps {
  const std::vector<std::string>& vars;
  CommPoly number(const mpq_class& c) { return CommPoly(vars, Scalar(c)); }
  CommPoly ident(const std::string& s) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == s) return CommPoly::var(vars, static_cast<int>(i));
    return CommPoly(vars, Scalar::var(s));
  }
  CommPoly add(const CommPoly& a, const CommPoly& b) { return a + b; }
  CommPoly sub(const CommPoly& a, const CommPoly& b) { return a - b; }
  CommPoly mul(const CommPoly& a, const CommPoly& b) { return a * b; }
  static std::optional<Scalar> as_scalar(const CommPoly& a) {
    if (a.is_zero()) return Scalar(0);
    if (a.terms().size() == 1 && total(a.terms().begin()->first) == 0)
      return a.terms().begin()->second;
    return std::nullopt;
  }
  CommPoly div(const CommPoly& a, const CommPoly& b) {
    auto s = as_scalar(b);
    if (!s || s->is_zero()) throw Error(ErrorKind::ParseError, "division by a non-scalar");
    return a.scaled(s->inverse());
  }
  CommPoly neg(const CommPoly& a) { return -a; }
  CommPoly pow(const CommPoly& a, const mpq_class& e) {
    if (auto s = as_scalar(a)) return CommPoly(vars, s->pow(e));
    if (e.get_den() != 1 || e < 0)
      throw Error(ErrorKind::ParseError, "non-integer power of a polynomial in the variables");
    return a.pow(static_cast<unsigned>(e.get_num().get_ui()));
  }
};

}  // namespace

CommPoly::CommPoly(std::vector<std::string> vars, const Scalar& c) : vars_(std::move(vars)) {
  add_term(CommExp(vars_.size(), 0), c);
}

CommPoly CommPoly::var(std::vector<std::string> vars, int i) {
  CommExp e(vars.size(), 0);
  e.at(i) = 1;
  return monomial(std::move(vars), e);
}

CommPoly CommPoly::monomial(std::vector<std::string> vars, const CommExp& e, const Scalar& c) {
  CommPoly p(std::move(vars));
  p.add_term(e, c);
  return p;
}

CommPoly CommPoly::parse(const std::vector<std::string>& vars, std::string_view text) {
  CommOps ops{vars};
  return ExprParser<CommPoly, CommOps>(text, ops).run();
}

int CommPoly::degree() const {
  int d = -1;
  for (auto& [e, c] : t_) d = std::max(d, total(e));
  return d;
}

Scalar CommPoly::coeff(const CommExp& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Scalar(0) : it->second;
}

void CommPoly::add_term(const CommExp& e, const Scalar& c) {
  if (e.size() != vars_.size())
    throw Error(ErrorKind::InvalidArgument, "exponent length does not match the variables");
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  check_vars(*this, o);
  CommPoly r = *this;
  for (auto& [e, c] : o.t_) r.add_term(e, c);
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  check_vars(*this, o);
  CommPoly r = *this;
  for (auto& [e, c] : o.t_) r.add_term(e, -c);
  return r;
}

CommPoly CommPoly::operator-() const { return scaled(Scalar(-1)); }

CommPoly CommPoly::operator*(const CommPoly& o) const {
  check_vars(*this, o);
  CommPoly r(vars_);
  for (auto& [a, ca] : t_)
    for (auto& [b, cb] : o.t_) {
      CommExp e(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

CommPoly CommPoly::scaled(const Scalar& c) const {
  CommPoly r(vars_);
  if (c.is_zero()) return r;
  for (auto& [e, x] : t_) r.add_term(e, x * c);
  return r;
}

CommPoly CommPoly::pow(unsigned k) const {
  CommPoly r(vars_, Scalar(1)), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

CommPoly CommPoly::derivative(int i) const {
  CommPoly r(vars_);
  for (auto& [e, c] : t_) {
    if (e.at(i) == 0) continue;
    CommExp d = e;
    --d[i];
    r.add_term(d, c * Scalar(static_cast<long>(e[i])));
  }
  return r;
}

CommPoly CommPoly::compose(const std::vector<CommPoly>& images) const {
  if (images.size() != vars_.size())
    throw Error(ErrorKind::WrongArity, "compose needs one image per variable");
  std::vector<std::string> nv = images.at(0).vars();
  CommPoly r(nv);
  // Cache powers per variable.
  std::vector<std::vector<CommPoly>> pw(images.size());
  for (auto& [e, c] : t_) {
    CommPoly m(nv, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& cache = pw[i];
      if (cache.empty()) cache.push_back(CommPoly(nv, Scalar(1)));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      if (e[i]) m = m * cache[e[i]];
    }
    r += m;
  }
  return r;
}

CommPoly CommPoly::renamed(std::vector<std::string> vars) const {
  if (vars.size() != vars_.size())
    throw Error(ErrorKind::WrongArity, "rename needs one name per variable");
  CommPoly r(std::move(vars));
  r.t_ = t_;
  return r;
}

std::string CommPoly::str() const {
  if (t_.empty()) return "0";
  std::vector<const std::pair<const CommExp, Scalar>*> v;
  for (auto& e : t_) v.push_back(&e);
  std::sort(v.begin(), v.end(), [](auto* a, auto* b) {
    int da = total(a->first), db = total(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string s;
  bool first = true;
  for (auto* e : v) {
    s += term_str(e->second, mono_str(vars_, e->first), first);
    first = false;
  }
  return s;
}

CommPoly specialize(const CommPoly& f, const Bindings& b) {
  return f.map_coeffs([&](const Scalar& c) { return specialize(c, b); });
}

BracketTable::BracketTable(std::vector<std::string> vars) : vars_(std::move(vars)) {}

CommPoly BracketTable::get(int i, int j) const {
  if (i == j) return CommPoly(vars_);
  if (i > j) return -get(j, i);
  auto it = e_.find({i, j});
  return it == e_.end() ? CommPoly(vars_) : it->second;
}

void BracketTable::set(int i, int j, const CommPoly& v) {
  if (i == j) throw Error(ErrorKind::InvalidArgument, "diagonal bracket entry");
  if (v.vars() != vars_) throw Error(ErrorKind::AlphabetMismatch, "bracket entry variables");
  if (i > j) return set(j, i, -v);
  if (v.is_zero())
    e_.erase({i, j});
  else
    e_[{i, j}] = v;
}

BracketTable BracketTable::scaled(const Scalar& c) const {
  BracketTable r(vars_);
  for (auto& [k, v] : e_) r.set(k.first, k.second, v.scaled(c));
  return r;
}

CommPoly BracketTable::bracket(const CommPoly& f, const CommPoly& g) const {
  int n = static_cast<int>(vars_.size());
  CommPoly r(vars_);
  std::vector<CommPoly> df, dg;
  for (int i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || df[i].is_zero() || dg[j].is_zero()) continue;
      CommPoly e = get(i, j);
      if (!e.is_zero()) r += df[i] * dg[j] * e;
    }
  return r;
}

std::string BracketTable::str() const {
  std::string s;
  int n = static_cast<int>(vars_.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!s.empty()) s += "; ";
      s += "{" + vars_[i] + "," + vars_[j] + "} = " + get(i, j).str();
    }
  return s;
}

CommPoly nambu(const PoissonStructure& p, const CommPoly& f, const CommPoly& g) {
  const CommPoly& phi = p.phi;
  if (phi.nvars() != 3)
    throw Error(ErrorKind::WrongArity,
                "Nambu bracket needs 3 variables, got " + std::to_string(phi.nvars()));
  check_vars(phi, f);
  check_vars(phi, g);
  std::array<CommPoly, 3> a, b, c;
  for (int i = 0; i < 3; ++i) {
    a[i] = f.derivative(i);
    b[i] = g.derivative(i);
    c[i] = phi.derivative(i);
  }
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

BracketTable nambu_table(const PoissonStructure& p) {
  BracketTable t(p.phi.vars());
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      t.set(i, j, nambu(p, CommPoly::var(p.phi.vars(), i), CommPoly::var(p.phi.vars(), j)));
  return t;
}

BracketTable bracket_table(const std::vector<std::string>& vars, const std::string& b12,
                           const std::string& b23, const std::string& b31) {
  if (vars.size() != 3) throw Error(ErrorKind::WrongArity, "bracket_table needs 3 variables");
  BracketTable t(vars);
  t.set(0, 1, CommPoly::parse(vars, b12));
  t.set(1, 2, CommPoly::parse(vars, b23));
  t.set(2, 0, CommPoly::parse(vars, b31));
  return t;
}

namespace {

CheckItem zero_check(const std::string& name, const CommPoly& v) {
  return {name, v.is_zero(), v.is_zero() ? "" : v.str()};
}

void finish(PoissonReport& r) {
  r.pass = std::all_of(r.checks.begin(), r.checks.end(), [](const CheckItem& c) { return c.pass; });
}

void jacobi_and_unimodular(const BracketTable& t, PoissonReport& r) {
  const auto& v = t.vars();
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        CommPoly xi = CommPoly::var(v, i), xj = CommPoly::var(v, j), xk = CommPoly::var(v, k);
        CommPoly jac = t.bracket(xi, t.get(j, k)) + t.bracket(xj, t.get(k, i)) +
                       t.bracket(xk, t.get(i, j));
        r.checks.push_back(zero_check("jacobi(" + v[i] + "," + v[j] + "," + v[k] + ")", jac));
      }
  for (int j = 0; j < n; ++j) {
    CommPoly div(v);
    for (int i = 0; i < n; ++i) div += t.get(i, j).derivative(i);
    r.checks.push_back(zero_check("unimodular(" + v[j] + ")", div));
  }
}

}  // namespace

PoissonReport poisson_checks(const PoissonStructure& p) {
  PoissonReport r;
  r.name = p.name;
  BracketTable t = nambu_table(p);
  jacobi_and_unimodular(t, r);
  for (int i = 0; i < 3; ++i)
    r.checks.push_back(zero_check("casimir(" + p.phi.vars()[i] + ")",
                                  nambu(p, p.phi, CommPoly::var(p.phi.vars(), i))));
  finish(r);
  return r;
}

PoissonReport bracket_checks(const BracketTable& t, const CommPoly* casimir) {
  PoissonReport r;
  jacobi_and_unimodular(t, r);
  if (casimir)
    for (std::size_t i = 0; i < t.nvars(); ++i)
      r.checks.push_back(zero_check("casimir(" + t.vars()[i] + ")",
                                    t.bracket(*casimir, CommPoly::var(t.vars(), int(i)))));
  finish(r);
  return r;
}

CommPoly commutative_image(const NcPoly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.gens().size())
    throw Error(ErrorKind::WrongArity, "one commutative variable per generator");
  CommPoly e(vars);
  for (auto& [w, s] : f.terms()) {
    CommExp m(vars.size(), 0);
    for (char l : w) ++m[static_cast<unsigned char>(l)];
    e.add_term(m, s);
  }
  return e;
}

BracketTable classical_limit(const RewriteSystem& rs, const std::vector<std::string>& vars,
                             const std::string& q) {
  int n = static_cast<int>(rs.gens().size());
  if (static_cast<int>(vars.size()) != n)
    throw Error(ErrorKind::WrongArity, "one commutative variable per generator");
  Scalar qm1 = Scalar::var(q) - Scalar(1);
  BracketTable t(vars);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      NcPoly xi = NcPoly::gen(rs.gens(), i), xj = NcPoly::gen(rs.gens(), j);
      CommPoly e = commutative_image(reduce(rs, commutator(xi, xj)), vars);
      CommPoly lim(vars);
      for (auto& [m, s] : e.terms()) {
        try {
          lim.add_term(m, limit(s / qm1, q, 1));
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::PoleAtPoint) throw;
          throw Error(ErrorKind::PoleAtPoint, "{" + vars[i] + "," + vars[j] + "} coefficient of " +
                                                  mono_str(vars, m) + ": " + err.what());
        }
      }
      t.set(i, j, lim);
    }
  return t;
}

std::optional<int> sign_relation(const BracketTable& a, const BracketTable& b) {
  if (a == b) return 1;
  if (a == b.scaled(Scalar(-1))) return -1;
  return std::nullopt;
}

namespace {

std::vector<std::string> target_vars(const std::vector<std::string>& old, const CommRescaling& r) {
  if (r.factor.size() != old.size())
    throw Error(ErrorKind::WrongArity, "rescaling needs one factor per variable");
  if (r.new_vars.empty()) return old;
  if (r.new_vars.size() != old.size())
    throw Error(ErrorKind::WrongArity, "rescaling needs one new name per variable");
  return r.new_vars;
}

std::vector<Scalar> factors(const CommRescaling& r) {
  std::vector<Scalar> f;
  for (auto& c : r.factor) f.push_back(specialize(c, r.params));
  return f;
}

CommPoly substitute(const CommPoly& f, const CommRescaling& r, const std::vector<std::string>& nv) {
  std::vector<Scalar> c = factors(r);
  std::vector<CommPoly> images;
  for (std::size_t i = 0; i < c.size(); ++i) images.push_back(CommPoly::var(nv, int(i)).scaled(c[i]));
  return specialize(f, r.params).compose(images);
}

CommPoly limit_part(const CommPoly& f, const CommRescaling& r, const std::string& what) {
  CommPoly out(f.vars());
  for (auto& [e, c] : f.terms()) {
    Scalar l;
    try {
      l = limit_zero_plus(c, r.eps);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::DivergentLimit) throw;
      throw Error(ErrorKind::DivergentLimit,
                  what + ": monomial " + mono_str(f.vars(), e) + " has coefficient " + c.str());
    }
    out.add_term(e, specialize(l, r.finally));
  }
  return out;
}

}  // namespace

CommPoly scale_limit(const CommPoly& phi, const CommRescaling& r, LimitReport* rep) {
  std::vector<std::string> nv = target_vars(phi.vars(), r);
  CommPoly s = substitute(phi, r, nv).scaled(specialize(r.potential_factor, r.params));
  if (rep) rep->steps.push_back("rescaled potential: " + s.str());
  CommPoly l = limit_part(s, r, "potential");
  if (rep) rep->steps.push_back("limit " + r.eps + " -> 0: " + l.str());
  return l;
}

PoissonStructure scale_limit(const PoissonStructure& p, const CommRescaling& r, LimitReport* rep) {
  return {p.name + " (limit)", scale_limit(p.phi, r, rep)};
}

BracketTable scale_limit(const BracketTable& t, const CommRescaling& r, LimitReport* rep) {
  std::vector<std::string> nv = target_vars(t.vars(), r);
  std::vector<Scalar> c = factors(r);
  Scalar bf;
  if (r.bracket_factor) {
    bf = specialize(*r.bracket_factor, r.params);
  } else {
    bf = specialize(r.potential_factor, r.params);
    for (auto& x : c) bf *= x;
  }
  BracketTable out(nv);
  int n = static_cast<int>(nv.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CommPoly e = substitute(t.get(i, j), r, nv).scaled(bf / (c[i] * c[j]));
      std::string what = "{" + nv[i] + "," + nv[j] + "}";
      if (rep) rep->steps.push_back("rescaled " + what + " = " + e.str());
      out.set(i, j, limit_part(e, r, what));
    }
  if (rep) rep->steps.push_back("limit " + r.eps + " -> 0: " + out.str());
  return out;
}

std::vector<mpz_class> chebyshev_t(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "Chebyshev degree must be >= 0");
  std::vector<mpz_class> a{1}, b{0, 1};
  if (n == 0) return a;
  for (int k = 1; k < n; ++k) {
    std::vector<mpz_class> c(b.size() + 1, 0);
    for (std::size_t i = 0; i < b.size(); ++i) c[i + 1] += 2 * b[i];
    for (std::size_t i = 0; i < a.size(); ++i) c[i] -= a[i];
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

Json commpoly_to_json(const CommPoly& f) {
  Json j;
  j["vars"] = f.vars();
  Json terms = Json::array();
  for (auto& [e, c] : f.terms()) terms.push_back(Json::array({scalar_to_json(c), e}));
  j["terms"] = terms;
  return j;
}

CommPoly commpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw Error(ErrorKind::ParseError, "bad CommPoly");
  CommPoly f(j["vars"].get<std::vector<std::string>>());
  for (auto& t : j["terms"]) {
    CommExp e = t.at(1).get<CommExp>();
    if (e.size() != f.nvars() || std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw Error(ErrorKind::ParseError, "bad exponent in " + t.dump());
    f.add_term(e, scalar_from_json(t.at(0)));
  }
  return f;
}

Json bracket_table_json(const BracketTable& t) {
  Json j;
  j["vars"] = t.vars();
  Json e = Json::array();
  int n = static_cast<int>(t.nvars());
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      e.push_back({{"i", i + 1}, {"j", k + 1}, {"text", t.get(i, k).str()},
                   {"value", commpoly_to_json(t.get(i, k))}});
  j["entries"] = e;
  return j;
}

Json poisson_report_json(const PoissonReport& r) {
  Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  Json c = Json::array();
  for (auto& x : r.checks) c.push_back({{"check", x.name}, {"pass", x.pass}, {"residual", x.detail}});
  j["checks"] = c;
  return j;
}

}  // namespace ncalg
