#include "ncalg/freealg.hpp"

#include <algorithm>
#include <sstream>

#include "ncalg/error.hpp"
#include "ncalg/parse.hpp"

namespace ncalg {

Alphabet default_alphabet(char prefix, int n) {
  Alphabet a;
  for (int i = 1; i <= n; ++i) a.push_back(std::string(1, prefix) + std::to_string(i));
  return a;
}

void check_alphabet(const Alphabet& a, const Alphabet& b) {
  if (a != b) throw Error(ErrorKind::AlphabetMismatch, "generators differ");
}

NcPoly::NcPoly(Alphabet gens, const Scalar& c) : gens_(std::move(gens)) {
  if (!c.is_zero()) t_.emplace(Word(), c);
}

NcPoly NcPoly::word(Alphabet gens, const Word& w, const Scalar& c) {
  NcPoly p(std::move(gens));
  p.add_term(w, c);
  return p;
}

int NcPoly::degree() const {
  int d = -1;
  for (auto& [w, c] : t_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

bool NcPoly::is_homogeneous() const {
  int d = -1;
  for (auto& [w, c] : t_) {
    if (d >= 0 && static_cast<int>(w.size()) != d) return false;
    d = static_cast<int>(w.size());
  }
  return true;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Scalar() : it->second;
}

bool NcPoly::is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty()); }

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_alphabet(gens_, o.gens_);
  for (auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_alphabet(gens_, o.gens_);
  for (auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  return r += o;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  return r -= o;
}

NcPoly NcPoly::operator-() const {
  NcPoly r(gens_);
  for (auto& [w, c] : t_) r.t_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  check_alphabet(gens_, o.gens_);
  NcPoly r(gens_);
  for (auto& [a, x] : t_)
    for (auto& [b, y] : o.t_) r.add_term(a + b, x * y);
  return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly r(gens_);
  if (c.is_zero()) return r;
  for (auto& [w, x] : t_) r.t_.emplace(w, x * c);
  return r;
}

NcPoly NcPoly::part(int len) const {
  NcPoly r(gens_);
  for (auto& [w, c] : t_)
    if (static_cast<int>(w.size()) == len) r.t_.emplace(w, c);
  return r;
}

std::string NcPoly::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += gens_.at(static_cast<unsigned char>(w[i]));
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

namespace {

// Printing order: longer words first, then lexicographically larger.
std::vector<const std::pair<const Word, Scalar>*> display_order(const NcPoly::TermMap& t) {
  std::vector<const std::pair<const Word, Scalar>*> v;
  for (auto& e : t) v.push_back(&e);
  std::sort(v.begin(), v.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() > b->first.size();
    return a->first > b->first;
  });
  return v;
}

std::string term_str(const Scalar& c, const std::string& w, bool first) {
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
  if (w == "1") return out + cs;
  if (cs == "1") return out + w;
  return out + cs + "*" + w;
}

}  // namespace

std::string NcPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto* e : display_order(t_)) {
    s += term_str(e->second, word_str(e->first), first);
    first = false;
  }
  return s;
}

namespace {

struct NcOps {
  const Alphabet& gens;
  NcPoly number(const mpq_class& c) { return NcPoly(gens, Scalar(c)); }
  NcPoly ident(const std::string& s) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == s) return NcPoly::gen(gens, static_cast<int>(i));
    return NcPoly(gens, Scalar::var(s));
  }
  NcPoly add(const NcPoly& a, const NcPoly& b) { return a + b; }
  NcPoly sub(const NcPoly& a, const NcPoly& b) { return a - b; }
  NcPoly mul(const NcPoly& a, const NcPoly& b) { return a * b; }
  NcPoly div(const NcPoly& a, const NcPoly& b) {
    if (!b.is_scalar() || b.is_zero())
      throw Error(ErrorKind::ParseError, "division by a non-scalar");
    return a.scaled(b.coeff(Word()).inverse());
  }
  NcPoly neg(const NcPoly& a) { return -a; }
  NcPoly pow(const NcPoly& a, const mpq_class& e) {
    if (a.is_scalar()) return NcPoly(gens, a.coeff(Word()).pow(e));
    if (e.get_den() != 1 || e < 0)
      throw Error(ErrorKind::ParseError, "non-integer power of a generator expression");
    NcPoly r(gens, Scalar(1));
    for (long i = 0; i < e.get_num().get_si(); ++i) r = r * a;
    return r;
  }
};

}  // namespace

NcPoly NcPoly::parse(const Alphabet& gens, std::string_view text) {
  NcOps ops{gens};
  return ExprParser<NcPoly, NcOps>(text, ops).run();
}

NcPoly nc_mul(const NcPoly& f, const NcPoly& g) { return f * g; }

NcPoly commutator(const NcPoly& f, const NcPoly& g) { return f * g - g * f; }

Word min_rotation(const Word& w) {
  Word best = w;
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word r = w.substr(i) + w.substr(0, i);
    if (r < best) best = std::move(r);
  }
  return best;
}

void CyclicPotential::add_class(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  Word r = min_rotation(w);
  auto [it, fresh] = t_.emplace(r, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

CyclicPotential CyclicPotential::scaled(const Scalar& c) const {
  CyclicPotential r(gens_);
  for (auto& [w, x] : t_) r.add_class(w, x * c);
  return r;
}

CyclicPotential CyclicPotential::operator+(const CyclicPotential& o) const {
  check_alphabet(gens_, o.gens_);
  CyclicPotential r = *this;
  for (auto& [w, c] : o.t_) r.add_class(w, c);
  return r;
}

CyclicPotential CyclicPotential::operator-(const CyclicPotential& o) const {
  return *this + o.scaled(Scalar(-1));
}

NcPoly CyclicPotential::as_poly() const {
  NcPoly p(gens_);
  for (auto& [w, c] : t_) p.add_term(w, c);
  return p;
}

CyclicPotential cyclic_reduce(const NcPoly& f) {
  CyclicPotential r(f.gens());
  for (auto& [w, c] : f.terms()) r.add_class(w, c);
  return r;
}

NcPoly cyclic_derivative(const CyclicPotential& phi, int j) {
  NcPoly r(phi.gens());
  for (auto& [w, c] : phi.terms())
    for (std::size_t k = 0; k < w.size(); ++k)
      if (static_cast<unsigned char>(w[k]) == j) r.add_term(w.substr(k + 1) + w.substr(0, k), c);
  return r;
}

Rescaling Rescaling::identity(std::size_t ngens) {
  return Rescaling{std::vector<Scalar>(ngens, Scalar(1)), {}};
}

Rescaling Rescaling::eps_powers(const std::string& eps, const std::vector<mpq_class>& e) {
  Rescaling r;
  for (auto& x : e) r.gen_factor.push_back(Scalar::var_pow(eps, x));
  return r;
}

NcPoly substitute_scale(const NcPoly& f, const Rescaling& r) {
  if (r.gen_factor.size() != f.gens().size())
    throw Error(ErrorKind::InvalidArgument, "rescaling arity differs from the alphabet");
  NcPoly out(f.gens());
  for (auto& [w, c] : f.terms()) {
    Scalar k = specialize(c, r.params);
    for (char l : w) k *= r.gen_factor[static_cast<unsigned char>(l)];
    out.add_term(w, k);
  }
  return out;
}

NcPoly substitute_gens(const NcPoly& f, const std::vector<NcPoly>& images) {
  if (images.size() != f.gens().size())
    throw Error(ErrorKind::InvalidArgument, "one image per generator");
  Alphabet target = images.empty() ? f.gens() : images[0].gens();
  for (auto& im : images) check_alphabet(target, im.gens());
  NcPoly out(target);
  for (auto& [w, c] : f.terms()) {
    NcPoly t(target, c);
    for (char l : w) t = t * images[static_cast<unsigned char>(l)];
    out += t;
  }
  return out;
}

std::optional<Scalar> proportional(const NcPoly& f, const NcPoly& g) {
  if (f.gens() != g.gens() || f.size() != g.size() || f.is_zero()) return std::nullopt;
  auto it = f.terms().begin();
  auto gt = g.terms().find(it->first);
  if (gt == g.terms().end()) return std::nullopt;
  Scalar u = gt->second / it->second;
  if (f.scaled(u) != g) return std::nullopt;
  return u;
}

}  // namespace ncalg
