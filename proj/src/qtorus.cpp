#include "ncalg/qtorus.hpp"

#include <cctype>

#include "ncalg/error.hpp"

namespace ncalg {

const std::array<std::string, kTorusRank>& torus_basis_names() {
  static const std::array<std::string, kTorusRank> n{"s1", "s2", "s3", "p1", "p2", "p3"};
  return n;
}

ShearLattice ShearLattice::make(LatticeKind k) {
  ShearLattice L;
  L.kind = k;
  auto set = [&](int i, int j, int v) {
    L.omega[i][j] = v;
    L.omega[j][i] = -v;
  };
  if (k == LatticeKind::Generic) {
    set(0, 1, 1);
    set(1, 2, 1);
    set(2, 0, 1);
  } else {
    set(0, 1, 1);
    set(4, 0, 1);
    set(2, 1, 1);
    set(4, 2, 1);
    set(1, 4, 2);
  }
  return L;
}

static const ShearLattice& lattice(LatticeKind k) {
  static const ShearLattice g = ShearLattice::make(LatticeKind::Generic);
  static const ShearLattice p = ShearLattice::make(LatticeKind::PIII);
  return k == LatticeKind::Generic ? g : p;
}

mpq_class pairing(const ShearLattice& L, const Exponent& u, const Exponent& v) {
  mpq_class s = 0;
  for (int i = 0; i < kTorusRank; ++i)
    for (int j = 0; j < kTorusRank; ++j)
      if (u[i] && v[j]) s += L.omega[i][j] * u[i] * v[j];
  return s / 4;
}

TorusElement::TorusElement(LatticeKind k, const Scalar& c) : kind_(k) { add_term(Exponent{}, c); }

TorusElement TorusElement::exp(LatticeKind k, const Exponent& u, const Scalar& c) {
  TorusElement r(k);
  r.add_term(u, c);
  return r;
}

void TorusElement::add_term(const Exponent& u, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(u, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

static void check_kind(const TorusElement& a, const TorusElement& b) {
  if (a.kind() != b.kind())
    throw Error(ErrorKind::LatticeMismatch, "torus elements live on different lattices");
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  check_kind(*this, o);
  TorusElement r = *this;
  for (auto& [u, c] : o.t_) r.add_term(u, c);
  return r;
}

TorusElement TorusElement::operator-(const TorusElement& o) const { return *this + (-o); }

TorusElement TorusElement::operator-() const {
  return map_coeffs([](const Scalar& c) { return -c; });
}

TorusElement TorusElement::scaled(const Scalar& s) const {
  return map_coeffs([&](const Scalar& c) { return c * s; });
}

static std::string exponent_str(const Exponent& u) {
  std::string s;
  const auto& names = torus_basis_names();
  for (int i = 0; i < kTorusRank; ++i) {
    if (!u[i]) continue;
    mpq_class v(u[i], 2);
    v.canonicalize();
    mpq_class av = abs(v);
    std::string mag = av == 1 ? "" : av.get_str() + "*";
    if (v < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    s += mag + names[i];
  }
  return s;
}

std::string TorusElement::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    std::string c = it->second.str();
    std::string e = exponent_str(it->first);
    if (!s.empty()) s += " + ";
    if (e.empty())
      s += c;
    else if (it->second.is_one())
      s += "e(" + e + ")";
    else
      s += "(" + c + ")*e(" + e + ")";
  }
  return s;
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b, bool classical) {
  check_kind(a, b);
  const ShearLattice& L = lattice(a.kind());
  TorusElement r(a.kind());
  for (auto& [u, cu] : a.terms())
    for (auto& [v, cv] : b.terms()) {
      Exponent w;
      for (int i = 0; i < kTorusRank; ++i) w[i] = u[i] + v[i];
      Scalar c = cu * cv;
      if (!classical) {
        mpq_class om = pairing(L, u, v);
        if (om != 0) c *= Scalar::var_pow("q", -om / 2);
      }
      r.add_term(w, c);
    }
  return r;
}

TorusElement torus_commutator(const TorusElement& a, const TorusElement& b) {
  return torus_mul(a, b) - torus_mul(b, a);
}

bool is_central_torus(const TorusElement& a) {
  for (int k = 0; k < kTorusRank; ++k) {
    Exponent e{};
    e[k] = 2;
    if (!torus_commutator(a, TorusElement::exp(a.kind(), e)).is_zero()) return false;
  }
  return true;
}

TorusElement torus_rescale(const TorusElement& a, const std::array<mpq_class, kTorusRank>& shift,
                           const std::string& eps) {
  TorusElement r(a.kind());
  for (auto& [u, c] : a.terms()) {
    mpq_class e = 0;
    for (int i = 0; i < kTorusRank; ++i) e += shift[i] * u[i];
    e /= 2;
    r.add_term(u, e == 0 ? c : c * Scalar::var_pow(eps, e));
  }
  return r;
}

TorusElement torus_limit(const TorusElement& a, const std::string& eps) {
  return a.map_coeffs([&](const Scalar& c) { return limit_zero_plus(c, eps); });
}

namespace {

class ExpParser {
 public:
  ExpParser(LatticeKind k, const std::string& s, const std::map<std::string, TorusElement>& names)
      : k_(k), s_(s), names_(names) {}

  TorusElement run() {
    TorusElement v = expr();
    skip();
    if (p_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  LatticeKind k_;
  const std::string& s_;
  const std::map<std::string, TorusElement>& names_;
  std::size_t p_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(p_) + " in '" + s_ + "'");
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected integer");
    return std::stol(s_.substr(b, p_ - b));
  }
  std::string ident() {
    skip();
    std::size_t b = p_;
    while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (b == p_) fail("expected name");
    return s_.substr(b, p_ - b);
  }
  bool at_digit() {
    skip();
    return p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]));
  }

  TorusElement expr() {
    TorusElement v(k_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    for (;;) {
      TorusElement t = term();
      v = neg ? v - t : v + t;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return v;
  }
  TorusElement term() {
    TorusElement v = factor();
    while (eat('*')) v = torus_mul(v, factor(), true);
    return v;
  }
  TorusElement factor() {
    if (eat('(')) {
      TorusElement v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (at_digit()) return TorusElement(k_, Scalar(integer()));
    std::string id = ident();
    if (id == "e") {
      if (!eat('(')) fail("expected '('");
      Exponent u = linear();
      if (!eat(')')) fail("expected ')'");
      return TorusElement::exp(k_, u);
    }
    auto it = names_.find(id);
    if (it == names_.end()) fail("unknown name '" + id + "'");
    return it->second;
  }
  // [sign] [int ['*']] basis ['/' int], repeated; stored doubled.
  Exponent linear() {
    Exponent u{};
    bool first = true;
    for (;;) {
      int sign = 1;
      if (eat('-')) sign = -1;
      else if (!eat('+') && !first) break;
      first = false;
      long num = 1;
      if (at_digit()) {
        num = integer();
        eat('*');
      }
      std::string b = ident();
      const auto& names = torus_basis_names();
      int idx = -1;
      for (int i = 0; i < kTorusRank; ++i)
        if (names[i] == b) idx = i;
      if (idx < 0) fail("unknown torus coordinate '" + b + "'");
      long den = 1;
      if (eat('/')) den = integer();
      if (den != 1 && den != 2) fail("exponent denominators must be 1 or 2");
      u[idx] += static_cast<int>(sign * num * (2 / den));
      skip();
      if (p_ < s_.size() && s_[p_] == ')') break;
    }
    return u;
  }
};

struct Row {
  PainleveType type;
  LatticeKind lattice;
  const char *g1, *g2, *g3, *ginf, *x1, *x2, *x3;
};

// Shear coordinates of the Painleve monodromy manifolds, as printed.
const std::vector<Row>& rows() {
  static const char* gP1 = "e(p1/2)+e(-p1/2)";
  static const char* gP2 = "e(p2/2)+e(-p2/2)";
  static const char* x3P6 =
      "e(s1+s2+p1/2+p2/2)+e(-s1-s2-p1/2-p2/2)+e(s1-s2+p1/2-p2/2)+g1*e(-s2-p2/2)+g2*e(s1+p1/2)";
  static const char* x3D = "e(-s2/2-p2/2)+e(s2/2-p2/2)+e(s2/2+p2/2)";
  static const std::vector<Row> r{
      {PainleveType::PVI, LatticeKind::Generic, gP1, gP2, "e(p3/2)+e(-p3/2)",
       "e(s1+s2+s3+p1/2+p2/2+p3/2)+e(-s1-s2-s3-p1/2-p3/2-p3/2)",
       "e(s2+s3+p2/2+p3/2)+e(-s2-s3-p2/2-p3/2)+e(s2-s3+p2/2-p3/2)+g2*e(-s3-p3/2)+g3*e(s2+p2/2)",
       "e(s3+s1+p3/2+p1/2)+e(-s3-s1-p3/2-p1/2)+e(s3-s1+p3/2-p1/2)+g3*e(-s1-p1/2)+g1*e(s3+p3/2)",
       x3P6},
      {PainleveType::PV, LatticeKind::Generic, gP1, gP2, "e(-s1-s2-s3-p1/2-p2/2)", "1",
       "e(-s1-p1/2)+g3*e(s2+p2/2)",
       "e(-s2-p2/2)+e(-s2-2*s1-p2/2-p1)+g3*e(-s1-p1/2)+g1*e(-s1-s2-p1/2-p2/2)", x3P6},
      {PainleveType::PVdeg, LatticeKind::Generic, gP1, gP2, "0", "1", "e(-s1-p1/2)",
       "e(-s2-p2/2)+e(-2*s1-s2-p1-p2/2)+g1*e(-s1-s2-p2/2-p1/2)", x3P6},
      {PainleveType::PIV, LatticeKind::Generic, gP1, "e(p2/2)", "0", "e(-s1-s2-s3-p1/2)",
       "e(-2*s1-s2-2*s3-p1)+e(-2*s1-s2-s3-p1)",
       "e(-2*s1-s2-p1)+e(-s2)+e(-2*s1-s2-s3-p1)+g1*e(-s1-s2-p1/2)", "e(-s3)+g2*e(s1+p1/2)"},
      {PainleveType::PIII_D6, LatticeKind::PIII, "1", "e(s1+s2/2+p2/2)", "1", "e(s2/2+s3+p2/2)",
       "e(-s2/2+p2/2)+e(s1-s2/2+p2/2)+e(-s2/2+s3+p2/2)+e(s1-s2/2+s3+p2/2)+e(s1+s2/2+s3+p2/2)",
       "e(s1)+e(s1-s2)-e(-s2)+e(s3)+2*e(s1+s3)+e(-s2+s3)+e(s1-s2+s3)+e(s1+s2+s3)", x3D},
      {PainleveType::PIII_D7, LatticeKind::PIII, "1", "e(s1+s2/2+p2/2)", "0", "e(s2+p2/2)",
       "e(-s2/2+p2/2)+e(s1-s2/2+p2/2)+e(s1+s2/2+p2/2)", "1+2*e(s1)+e(s1-s2)+e(-s2)+e(s1+s2)", x3D},
      {PainleveType::PIII_D8, LatticeKind::PIII, "1", "e(s2/2+p2/2)", "0", "e(s2/2+p2/2)",
       "e(-s2/2+p2/2)+e(s2/2+p2/2)", "2+e(-s2)+e(s2)", x3D},
      {PainleveType::PII_JM, LatticeKind::Generic, "1", "e(p2/2)", "1", "1", "e(-s1)+e(-s1-s3)",
       "e(s3)+e(s1+s3)", "e(-s2-s3)+e(-s3)"},
      {PainleveType::PII_FN, LatticeKind::Generic, "e(-s1-s2-s3)", "1", "0", "1", "e(s2+s3)",
       "e(2*s3+s1+s2)+e(2*s3+s2)+e(-s1-s2)+e(-s2)", "e(-s3)+e(-s2-s3)"},
      {PainleveType::PI, LatticeKind::Generic, "1", "1", "0", "1", "e(-s1)", "e(-s1-s2)+e(-s2)",
       "e(s1+s2)+e(s1)"},
  };
  return r;
}

}  // namespace

TorusElement parse_exp_poly(LatticeKind k, const std::string& text,
                            const std::map<std::string, TorusElement>& names) {
  return ExpParser(k, text, names).run();
}

const std::vector<PainleveType>& all_painleve_types() {
  static const std::vector<PainleveType> v{
      PainleveType::PVI,     PainleveType::PV,      PainleveType::PVdeg,  PainleveType::PIV,
      PainleveType::PIII_D6, PainleveType::PIII_D7, PainleveType::PIII_D8, PainleveType::PII_JM,
      PainleveType::PII_FN,  PainleveType::PI};
  return v;
}

std::string painleve_name(PainleveType d) {
  static const char* n[] = {"PVI",     "PV",      "PVdeg",  "PIV",    "PIII_D6",
                            "PIII_D7", "PIII_D8", "PII_JM", "PII_FN", "PI"};
  return n[static_cast<int>(d)];
}

PainleveType painleve_from_name(const std::string& s) {
  for (PainleveType d : all_painleve_types())
    if (painleve_name(d) == s) return d;
  throw Error(ErrorKind::UnknownType, "unknown Painleve type '" + s + "'");
}

std::array<int, 3> painleve_epsilon(PainleveType d) {
  switch (d) {
    case PainleveType::PVI:
      return {1, 1, 1};
    case PainleveType::PV:
    case PainleveType::PVdeg:
    case PainleveType::PIII_D6:
    case PainleveType::PIII_D7:
    case PainleveType::PIII_D8:
      return {1, 1, 0};
    case PainleveType::PIV:
    case PainleveType::PII_FN:
      return {1, 0, 0};
    default:
      return {0, 0, 0};
  }
}

namespace {

struct Correction {
  PainleveType type;
  const char* field;
  const char* text;
  const char* note;
};

// Entries of the printed table that contradict both the cubic and the
// quantum relations; each replacement is the unique term making them hold.
const std::vector<Correction>& corrections() {
  static const std::vector<Correction> c{
      {PainleveType::PVI, "ginf", "e(s1+s2+s3+p1/2+p2/2+p3/2)+e(-s1-s2-s3-p1/2-p2/2-p3/2)",
       "ginf: second exponent read as -s1-s2-s3-p1/2-p2/2-p3/2 (printed with p3/2 twice)"},
      {PainleveType::PIV, "g3", "e(-s1-s2-s3-p1/2)",
       "g3: e^(-s1-s2-s3-p1/2) instead of 0 (the cubic has an omega_3 x_3 term)"},
      {PainleveType::PII_JM, "g2", "e(-s1-s2-s3)",
       "g2: e^(-s1-s2-s3) instead of e^(p2/2) (p2 does not occur in the x's)"},
      {PainleveType::PII_FN, "g1", "e(s1+s2+s3)+e(-s1-s2-s3)",
       "g1: e^(s1+s2+s3)+e^(-s1-s2-s3) instead of e^(-s1-s2-s3)"},
  };
  return c;
}

}  // namespace

std::array<TorusElement, 4> torus_omegas(const TorusElement& g1, const TorusElement& g2,
                                         const TorusElement& g3, const TorusElement& gi,
                                         const std::array<int, 3>& e, bool negate_omega4) {
  auto mul = [](const TorusElement& a, const TorusElement& b) { return torus_mul(a, b); };
  std::array<TorusElement, 4> O;
  O[0] = -mul(g1, gi) - mul(g2, g3).scaled(e[0]);
  O[1] = -mul(g2, gi) - mul(g1, g3).scaled(e[1]);
  O[2] = -mul(g3, gi) - mul(g1, g2).scaled(e[2]);
  O[3] = mul(g1, g1).scaled(e[1] * e[2]) + mul(g2, g2).scaled(e[0] * e[2]) +
         mul(g3, g3).scaled(e[0] * e[1]) + mul(gi, gi) + mul(mul(g1, g2), mul(g3, gi)) -
         TorusElement(g1.kind(), Scalar(4L * e[0] * e[1] * e[2]));
  if (negate_omega4) O[3] = -O[3];
  return O;
}

ShearRealization painleve_data(PainleveType d, const ShearOptions& opt) {
  const Row* row = nullptr;
  for (auto& r : rows())
    if (r.type == d) row = &r;
  ShearRealization s;
  s.type = d;
  s.lattice = row->lattice;
  s.eps = painleve_epsilon(d);
  s.reversed_orientation = opt.reversed_orientation;
  LatticeKind k = row->lattice;
  std::map<std::string, const char*> text{
      {"g1", row->g1}, {"g2", row->g2}, {"g3", row->g3}, {"ginf", row->ginf}};
  if (opt.corrected_rows)
    for (auto& c : corrections())
      if (c.type == d) {
        text[c.field] = c.text;
        s.notes.push_back(c.note);
      }
  std::map<std::string, TorusElement> names;
  for (const char* g : {"g1", "g2", "g3", "ginf"}) names[g] = parse_exp_poly(k, text[g], names);
  s.g1 = names["g1"];
  s.g2 = names["g2"];
  s.g3 = names["g3"];
  s.ginf = names["ginf"];
  s.X[0] = parse_exp_poly(k, row->x1, names);
  s.X[1] = parse_exp_poly(k, row->x2, names);
  s.X[2] = parse_exp_poly(k, row->x3, names);
  s.Omega = torus_omegas(s.g1, s.g2, s.g3, s.ginf, s.eps, opt.negate_omega4);
  if (opt.negate_omega4) s.notes.push_back("omega_4 taken with the opposite sign of the omega/g formula");
  if (opt.reversed_orientation)
    s.notes.push_back("relations evaluated with q -> 1/q relative to e^(S1+S2) = q^(1/2) e^(S1) e^(S2)");
  return s;
}

std::array<TorusElement, 3> torus_relations(const ShearRealization& r) {
  const Scalar q = Scalar::var("q");
  const Scalar qh = Scalar::var_pow("q", mpq_class(1, 2));
  const Scalar qmh = qh.inverse();
  const Scalar a = q.inverse() - q;
  const Scalar b = qmh - qh;
  const Bindings flip{{"q", q.inverse()}};
  auto prod = [&](const TorusElement& x, const TorusElement& y) {
    TorusElement p = torus_mul(x, y);
    if (!r.reversed_orientation) return p;
    return p.map_coeffs([&](const Scalar& c) { return specialize(c, flip); });
  };
  std::array<TorusElement, 3> J;
  // (X_i X_j, eps_k X_k, Omega_k) for (i,j,k) = (1,2,3), (2,3,1), (3,1,2).
  for (int m = 0; m < 3; ++m) {
    int i = m, j = (m + 1) % 3, k = (m + 2) % 3;
    J[m] = prod(r.X[i], r.X[j]).scaled(qmh) - prod(r.X[j], r.X[i]).scaled(qh) -
           r.X[k].scaled(a * Scalar(static_cast<long>(r.eps[k]))) + r.Omega[k].scaled(b);
  }
  return J;
}

ShearReport verify_realization(const ShearRealization& r, bool quantum) {
  ShearReport rep;
  rep.type = r.type;
  rep.quantum = quantum;
  rep.notes = r.notes;
  auto add = [&](const std::string& name, const TorusElement& residual) {
    rep.checks.push_back({name, residual.is_zero(), residual.is_zero() ? "" : residual.str()});
  };
  if (quantum) {
    auto J = torus_relations(r);
    for (int m = 0; m < 3; ++m) add("J" + std::to_string(m + 1), J[m]);
    for (int m = 0; m < 4; ++m) {
      bool c = is_central_torus(r.Omega[m]);
      rep.checks.push_back({"omega" + std::to_string(m + 1) + " central", c,
                            c ? "" : r.Omega[m].str()});
    }
  } else {
    auto cl = [](const TorusElement& a) {
      return a.map_coeffs([](const Scalar& c) { return limit(c, "q", 1); });
    };
    std::array<TorusElement, 3> x{cl(r.X[0]), cl(r.X[1]), cl(r.X[2])};
    auto mul = [](const TorusElement& a, const TorusElement& b) { return torus_mul(a, b, true); };
    TorusElement phi = mul(mul(x[0], x[1]), x[2]);
    for (int i = 0; i < 3; ++i) {
      phi = phi - mul(x[i], x[i]).scaled(Scalar(static_cast<long>(r.eps[i])));
      phi = phi + mul(cl(r.Omega[i]), x[i]);
    }
    phi = phi + cl(r.Omega[3]);
    add("phi", phi);
  }
  rep.pass = true;
  for (auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

ShearReport verify_painleve(PainleveType d, bool quantum, const ShearOptions& opt) {
  return verify_realization(painleve_data(d, opt), quantum);
}

Json torus_to_json(const TorusElement& a) {
  Json j;
  j["lattice"] = lattice(a.kind()).name();
  Json t = Json::array();
  for (auto& [u, c] : a.terms()) {
    Json e = Json::array();
    for (int i = 0; i < kTorusRank; ++i) e.push_back(rational_to_json(mpq_class(u[i], 2)));
    t.push_back(Json::array({scalar_to_json(c), e}));
  }
  j["terms"] = t;
  return j;
}

TorusElement torus_from_json(const Json& j) {
  std::string l = j.at("lattice").get<std::string>();
  LatticeKind k;
  if (l == "generic") k = LatticeKind::Generic;
  else if (l == "piii") k = LatticeKind::PIII;
  else throw Error(ErrorKind::ParseError, "unknown lattice '" + l + "'");
  TorusElement r(k);
  for (auto& t : j.at("terms")) {
    const Json& e = t.at(1);
    if (e.size() != kTorusRank) throw Error(ErrorKind::ParseError, "exponent vector of wrong length");
    Exponent u{};
    for (int i = 0; i < kTorusRank; ++i) {
      mpq_class v = rational_from_json(e[i]) * 2;
      if (v.get_den() != 1) throw Error(ErrorKind::NotRepresentable, "exponent outside (1/2)Z");
      u[i] = static_cast<int>(v.get_num().get_si());
    }
    r.add_term(u, scalar_from_json(t.at(0)));
  }
  return r;
}

Json shear_report_json(const ShearReport& r) {
  Json j;
  j["type"] = painleve_name(r.type);
  j["mode"] = r.quantum ? "quantum" : "classical";
  j["pass"] = r.pass;
  Json c = Json::array();
  for (auto& k : r.checks) {
    Json e;
    e["check"] = k.name;
    e["pass"] = k.pass;
    if (!k.pass) e["residual"] = k.residual;
    c.push_back(e);
  }
  j["checks"] = c;
  j["notes"] = r.notes;
  return j;
}

}  // namespace ncalg
