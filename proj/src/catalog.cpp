#include "ncalg/catalog.hpp"

#include <functional>
#include <set>

#include "ncalg/error.hpp"
#include "ncalg/qtorus.hpp"

namespace ncalg {

namespace {

const Alphabet& X() {
  static const Alphabet a = default_alphabet('X');
  return a;
}
const Alphabet& Y() {
  static const Alphabet a = default_alphabet('Y');
  return a;
}
const std::vector<std::string> kx{"x1", "x2", "x3"};
const std::vector<std::string> ky{"y1", "y2", "y3"};

Scalar S(const std::string& s) { return Scalar::parse(s); }

// ---------------------------------------------------------------- anchors

const std::map<std::string, std::string> kAnchors = {
    {"uz-relations", "q-commutator relations J1, J2, J3 with eps_i and Omega_i"},
    {"uz-casimir", "cubic Casimir Omega_4 of the UZ algebra"},
    {"uz-potential", "potential Phi_UZ = Phi_SP + Psi_UZ"},
    {"epsilon-map", "eps_i per Painleve type"},
    {"omega-map", "omega_1..omega_4 as functions of g_1, g_2, g_3, g_inf"},
    {"painleve-cubics", "Painleve monodromy cubics, one per type"},
    {"monodromy-cubic", "x1x2x3 - sum eps_i x_i^2 + sum omega_i x_i + omega_4"},
    {"skew-relations", "skew polynomial relations q^(-1/2) X_i X_j - q^(1/2) X_j X_i"},
    {"skew-potential", "Phi_SP = X1X2X3 - q X2X1X3"},
    {"jac-identity", "three-term commutator identity and its L-substituted form"},
    {"eg-relations", "Etingof-Ginzburg relations with t X_k^2, a, b, c terms"},
    {"eg-potential", "Phi_EG + Psi_EG for the E6 case"},
    {"eg-casimir", "Etingof-Ginzburg central element Omega_EG"},
    {"eg-casimir-t0", "Omega_EG^{t=0}, the t -> 0 limit of (Omega_EG - a1 a2 (q^2 + t^3))/t"},
    {"eg-specialisation", "a, b, c, t in terms of q, eps_i, Omega_i giving the UZ relations"},
    {"eg-higher-potentials", "quantum E7 and E8 homogeneous potentials plus P, Q, R"},
    {"geg-relations", "generalised Etingof-Ginzburg relations with alpha, beta, gamma"},
    {"geg-casimir", "central element Omega_GEG for gamma = 0"},
    {"gsp-relations", "generalised Sklyanin-Painleve relations with a, b, c"},
    {"gensk-relations", "generalised Sklyanin relations (homogeneous)"},
    {"gensk-classification", "PHS cases of the generalised Sklyanin algebra"},
    {"sklyanin-relations", "Sklyanin algebra Q3(a, b, c)"},
    {"sklyanin-degenerate", "degenerate Sklyanin ideals u^2=v^2=w^2=0 and uv=vw=wu=0"},
    {"odesskii-relations", "Odesskii relations X1X2 - q X2X1 = X3 and cyclic"},
    {"odesskii-casimir", "Omega^q = (q^2-1) X1X2X3 + X1^2 + q^2 X2^2 + X3^2"},
    {"odesskii-potential", "Phi_O = Phi_SP - (X1^2 + X2^2 + X3^2)/2"},
    {"odesskii-transport", "rotation in the (X1, X2) plane followed by the (q - 1/q) rescaling"},
    {"quantum-sl2-relations", "q X1X2 - X2X1 = (q - 1/q) X3 and cyclic"},
    {"quantum-sl2-casimir", "-q X1X2X3 + q^2 X1^2 + X2^2 + X3^2"},
    {"markov-cubic", "q -> 1 limit of the quantum sl2 Casimir: the Markov cubic"},
    {"pbw-examples", "example relation systems P1 and PII on the PBW definitions"},
    {"vertex1-quantum", "quantum relations of the 1-vertex variety"},
    {"vertex1-casimir", "Omega_{2,1,3} = Y2Y3Y1 - qh^(1/2) Y1^2 - qh Y3^3"},
    {"vertex2-quantum", "quantum relations of the 2-vertex variety"},
    {"vertex2-casimir", "Omega_{1,1,2} = Y1Y2Y3 - qh^(1/2) Y3^2"},
    {"vacuum-relations", "F-term relations of Phi_marg + Phi_rel"},
    {"vacuum-potentials", "marginal and relevant superpotentials"},
    {"vacuum-degenerate", "infinite mass limit relations Y3Y1 = q Y1Y3, ..."},
    {"vacuum-degenerate-casimir", "Omega^{m1}_0 = Y3Y2Y1 + q/(q^2-1) Y1^2 + q^2/(q^3-1) Y3^3"},
    {"vacuum-degenerate-eps", "relations after Y_i -> eps_i Y_i and their central element"},
    {"vacuum-degenerate-2", "eps_3 -> 0 limit relations and Omega^inf"},
    {"vertex-comparison", "q = 1/qh and monomial rescaling matching the two vertex quantisations"},
    {"single-mass", "potential X1X2X3 - q X2X1X3 - m X1^2/2 and its relations"},
    {"single-mass-linear", "single mass potential with linear terms and its Casimir"},
    {"painleve2-potential", "potential X1X2X3 - q X2X1X3 + (q-1)(X1 + Omega_2 X2 + X3)"},
    {"chebyshev-family", "x1x2x3 - sum e_i^n x_i + 2 (e1e2e3)^(n/2) T_n(-w / (2 sqrt(e1e2e3)))"},
    {"conformal-sl2", "conformal sl2 enveloping algebra relations"},
    {"conformal-sl2-casimir", "Omega_LBW"},
    {"conformal-sl2-divisor", "cubic divisor -gamma q X2^3 + (q^3 - 1) X1X2X3"},
    {"nambu-bracket", "{f, g} = df ^ dg ^ dphi / dx1 ^ dx2 ^ dx3"},
    {"hesse-cubic", "Hesse cubic (x1^3 + x2^3 + x3^3)/3 + tau x1x2x3 and its brackets"},
    {"hesse-rational-limit", "tau -> infinity: y2^3/3 + y1y2y3 and its brackets"},
    {"weighted-cubics", "phi_{1,1,2} and phi_{2,1,3} in weighted projective planes"},
    {"weighted-degenerations", "rational limits phi_{1,1,2}_0, phi_{2,1,3}_0 and their brackets"},
    {"vertex-potentials", "phi_1 = y1y2y3 - y1^2 - y3^2, phi_2 = y1y2y3 - y3^2"},
    {"perturbed-sklyanin", "phi_cl,marg and phi_cl,tot"},
    {"mass-rescalings", "x1 = y1/sqrt(m1), x2 = y2/sqrt(m1), x3 = m1 y3 and the second rescaling"},
    {"eor-families", "D4, E6, E7, E8 families of cubic-type surfaces"},
    {"eg-families", "E6, E7, E8 elliptic families with weighted homogeneous part"},
    {"semiclassical-limit", "lim [X_i, X_j]/(q - 1) gives the Poisson bracket"},
};

void check_anchor(const std::string& a) {
  if (!kAnchors.count(a)) throw Error(ErrorKind::InvalidArgument, "unknown anchor " + a);
}

// ------------------------------------------------------------ helpers

NcPoly nc(const Alphabet& a, const std::string& s) { return NcPoly::parse(a, s); }

CyclicPotential cyc(const Alphabet& a, const std::string& s) { return cyclic_reduce(nc(a, s)); }

CyclicPotential specialize_cyc(const CyclicPotential& p, const Bindings& b) {
  CyclicPotential r(p.gens());
  for (auto& [w, c] : p.terms()) r.add_class(w, specialize(c, b));
  return r;
}

NcPoly specialize_nc(const NcPoly& f, const Bindings& b) {
  return f.map_coeffs([&](const Scalar& c) { return specialize(c, b); });
}

struct Nonvanishing {
  std::string text;
  Scalar value;
};

AlgebraPreset make(const std::string& id, const std::string& title, const Alphabet& gens,
                   std::initializer_list<const char*> rels) {
  AlgebraPreset p;
  p.id = id;
  p.title = title;
  p.rels.gens = gens;
  for (auto* r : rels) p.rels.rels.push_back(nc(gens, r));
  p.order = MonomialOrder::descending(static_cast<int>(gens.size()));
  return p;
}

void nonzero(AlgebraPreset& p, const std::string& expr) {
  p.assumptions.push_back(expr + " != 0");
  p.nonvanishing.push_back(S(expr));
}

void add_candidate(AlgebraPreset& p, const std::string& name, const std::string& text,
                   const std::string& anchor, bool printed = true, const std::string& note = "") {
  check_anchor(anchor);
  p.central.push_back({name, nc(p.rels.gens, text), anchor, printed, note});
}

// Merge defaults and user bindings and specialize everything.
void finalize(AlgebraPreset& p, const Bindings& defaults, const Bindings& user) {
  for (auto& a : p.anchors) check_anchor(a);
  Bindings b = defaults;
  for (auto& [k, v] : user) b[k] = v;
  if (b.empty()) return;
  p.rels = p.rels.specialized(b);
  p.rels.params = b;
  if (p.potential) p.potential = specialize_cyc(*p.potential, b);
  for (auto& c : p.central) c.element = specialize_nc(c.element, b);
  for (std::size_t i = 0; i < p.nonvanishing.size(); ++i) {
    Scalar v;
    try {
      v = specialize(p.nonvanishing[i], b);
    } catch (const Error&) {
      v = Scalar(0);
    }
    p.nonvanishing[i] = v;
    if (v.is_zero()) p.warnings.push_back("genericity condition violated: " + p.assumptions[i]);
  }
}

std::pair<std::string, std::string> split_variant(const std::string& id) {
  auto pos = id.find(':');
  if (pos == std::string::npos) return {id, ""};
  return {id.substr(0, pos), id.substr(pos + 1)};
}

// ------------------------------------------------------------ algebras

const char* kJ1 = "q^(-1/2)*X1*X2 - q^(1/2)*X2*X1 - (q^(-1)-q)*e3*X3 + (q^(-1/2)-q^(1/2))*Om3";
const char* kJ2 = "q^(-1/2)*X2*X3 - q^(1/2)*X3*X2 - (q^(-1)-q)*e1*X1 + (q^(-1/2)-q^(1/2))*Om1";
const char* kJ3 = "q^(-1/2)*X3*X1 - q^(1/2)*X1*X3 - (q^(-1)-q)*e2*X2 + (q^(-1/2)-q^(1/2))*Om2";
const char* kOmega4 =
    "q^(1/2)*X3*X2*X1 - q*e1*X1^2 - e2/q*X2^2 - q*e3*X3^2 + q^(1/2)*Om1*X1"
    " + q^(-1/2)*Om2*X2 + q^(1/2)*Om3*X3";
const char* kPhiUZ =
    "X1*X2*X3 - q*X2*X1*X3 + (q^2-1)/(2*q^(1/2))*(e1*X1^2 + e2*X2^2 + e3*X3^2)"
    " + (1-q)*(Om1*X1 + Om2*X2 + Om3*X3)";

AlgebraPreset uz(const std::string& variant, const Bindings& user) {
  auto [type, mode] = split_variant(variant.empty() ? "PVI" : variant);
  if (!mode.empty() && mode != "geometric" && mode != "symbolic")
    throw Error(ErrorKind::UnknownPreset, "uz mode " + mode);
  PainleveType d = painleve_from_name(type);
  std::string name = painleve_name(d);
  bool geometric = mode == "geometric";
  AlgebraPreset p = make("uz:" + name + (geometric ? ":geometric" : ""),
                         "UZ algebra of type " + name, X(), {kJ1, kJ2, kJ3});
  p.potential = cyc(X(), kPhiUZ);
  add_candidate(p, "omega4", kOmega4, "uz-casimir");
  p.classical = "mon-mf:" + name + (geometric ? ":geometric" : "");
  p.anchors = {"uz-relations", "uz-casimir", "uz-potential", "epsilon-map"};
  nonzero(p, "q - 1");
  nonzero(p, "q + 1");
  auto e = painleve_epsilon(d);
  Bindings defaults{{"e1", Scalar(long(e[0]))}, {"e2", Scalar(long(e[1]))}, {"e3", Scalar(long(e[2]))}};
  if (geometric) {
    p.anchors.push_back("omega-map");
    auto w = omega_from_g(S("g1"), S("g2"), S("g3"), S("ginf"), {e[0], e[1], e[2]});
    defaults["Om1"] = w[0];
    defaults["Om2"] = w[1];
    defaults["Om3"] = w[2];
  }
  p.notes = geometric ? "Omega_1..3 built from g1, g2, g3, ginf" : "Omega_1..3 free parameters";
  finalize(p, defaults, user);
  return p;
}

AlgebraPreset skew(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("skew", "skew polynomial ring", X(),
                         {"q^(-1/2)*X1*X2 - q^(1/2)*X2*X1", "q^(-1/2)*X2*X3 - q^(1/2)*X3*X2",
                          "q^(-1/2)*X3*X1 - q^(1/2)*X1*X3"});
  p.potential = cyc(X(), "X1*X2*X3 - q*X2*X1*X3");
  p.classical = "skew_classical";
  p.anchors = {"skew-relations", "skew-potential"};
  finalize(p, {}, user);
  return p;
}

const char* kTC1 = "X1*X2 - q*X2*X1 - t*X3^2 + c1*X3 + c2";
const char* kTC2 = "X2*X3 - q*X3*X2 - t*X1^2 + a1*X1 + a2";
const char* kTC3 = "X3*X1 - q*X1*X3 - t*X2^2 + b1*X2 + b2";
const char* kPhiEG =
    "X1*X2*X3 - q*X2*X1*X3 - t/3*(X1^3 + X2^3 + X3^3) + (a1*X1^2 + b1*X2^2 + c1*X3^2)/2"
    " + a2*X1 + b2*X2 + c2*X3";
const char* kOmegaEG =
    "(-a1^2*q^2 - a2*q*t - 2*a2*q^2*t - a2*q^3*t - b1*c1*q*t^2)*X1"
    " + t*(-b2 - 2*b2*q - 2*b2*q^2 - b2*q^3 - a1*c1*q*t + b1^2*t^2 - b2*t^3 - b2*q*t^3)*X2"
    " + t*(-c2*q - 2*c2*q^2 - 2*c2*q^3 - c2*q^4 - a1*b1*q*t - c1^2*q*t^2 + c2*t^3 + c2*q*t^3)*X3"
    " + (1+q)*t^2*c1*q*t*X2*X1 + t*(-b1 - b1*q - b1*q^2 - 2*b1*t^3 - b1*q*t^3)*X2^2"
    " + (-a1*q^2 + a1*q*t^3)*X2*X3 + (1+q)*t^2*b1*t*X3*X1 + (a1*q^3 + a1*q*t^3)*X3*X2"
    " + t*(-c1*q^2 - c1*q^3 - c1*q^4 + c1*t^3 + 2*c1*q*t^3)*X3^2"
    " + (1+q)*t^2*(1+t)*(1-t+t^2)*X2^3 + (1+q)*t*(q^3 - t^3)*X2*X3*X1"
    " - (1+q)*t*(1+t)*(1-t+t^2)*q*X3*X2*X1 + (q^3 - t^3)*(1+q)*t*X3^3";
const char* kOmegaEG0 =
    "(q^2-1)*q*X3*X2*X1 - (q+1)*(a2*q*X1 + b2*X2 + c2*q*X3) - a1*q^2*X1^2 - b1*X2^2"
    " - c1*q^2*X3^2";

AlgebraPreset eg(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("eg", "Etingof-Ginzburg E6 algebra", X(), {kTC1, kTC2, kTC3});
  p.potential = cyc(X(), kPhiEG);
  add_candidate(p, "omega_eg", kOmegaEG, "eg-casimir");
  p.anchors = {"eg-relations", "eg-potential", "eg-casimir"};
  nonzero(p, "q");
  nonzero(p, "t");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset eg_t0(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("eg_t0", "Etingof-Ginzburg relations at t = 0", X(), {kTC1, kTC2, kTC3});
  p.potential = cyc(X(), kPhiEG);
  add_candidate(p, "omega_eg_t0", kOmegaEG0, "eg-casimir-t0");
  p.anchors = {"eg-relations", "eg-casimir-t0"};
  nonzero(p, "q - 1");
  finalize(p, {{"t", Scalar(0)}}, user);
  return p;
}

NcPoly power_sum(const Alphabet& a, int gen, const std::string& prefix, int top) {
  NcPoly f(a);
  for (int k = 1; k <= top; ++k)
    f += NcPoly::word(a, Word(static_cast<std::size_t>(k), char(gen)),
                      Scalar::var(prefix + std::to_string(k)));
  return f;
}

AlgebraPreset eg_higher(int r, const Bindings& user) {
  std::string hom = r == 7 ? "X1*X2*X3 - q*X2*X1*X3 - t*(X1^4/4 + X2^4/4 + X3^2/2)"
                           : "X1*X2*X3 - q*X2*X1*X3 - t*(X1^6/6 + X2^3/3 + X3^2/2)";
  NcPoly phi = nc(X(), hom) + power_sum(X(), 0, "eta", r == 7 ? 3 : 5) +
               power_sum(X(), 1, "sigma", r == 7 ? 3 : 2) + nc(X(), "rho1*X3");
  AlgebraPreset p;
  p.id = r == 7 ? "eg7" : "eg8";
  p.title = r == 7 ? "Etingof-Ginzburg E7 potential algebra" : "Etingof-Ginzburg E8 potential algebra";
  p.rels.gens = X();
  p.potential = cyclic_reduce(phi);
  for (int j : {2, 0, 1}) p.rels.rels.push_back(cyclic_derivative(*p.potential, j));
  p.order = MonomialOrder::descending(3);
  p.anchors = {"eg-higher-potentials"};
  p.notes = "relations are the cyclic derivatives d3, d1, d2; no central element is recorded";
  finalize(p, {}, user);
  return p;
}

const char* kOmegaGEG =
    "q*(1+q)*(q^3-1)*X3*X2*X1 + q^3*(1+q)*alpha*X1^3 + (1+q)*beta*X2^3"
    " - a1*q^2*(1+q+q^2)*X1^2 + c1*q*(1+q)*alpha*beta*X2*X1 - b1*(1+q+q^2)*X2^2"
    " - c1*q^2*(1+q+q^2)*X3^2 - q*X1*(a2*(1+2*q+2*q^2+q^3) + b1*c1*alpha)"
    " + X2*(-b2*(1+2*q+2*q^2+q^3) - a1*c1*q*beta)"
    " - q*X3*(c2*(1+2*q+2*q^2+q^3) + c1^2*alpha*beta)";

AlgebraPreset geg(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("geg", "generalised Etingof-Ginzburg algebra", X(),
                         {"X1*X2 - q*X2*X1 - gamma*X3^2 + c1*X3 + c2",
                          "X2*X3 - q*X3*X2 - alpha*X1^2 + a1*X1 + a2",
                          "X3*X1 - q*X1*X3 - beta*X2^2 + b1*X2 + b2"});
  p.potential = cyc(X(),
                    "X1*X2*X3 - q*X2*X1*X3 - (alpha*X1^3 + beta*X2^3 + gamma*X3^3)/3"
                    " + (a1*X1^2 + b1*X2^2 + c1*X3^2)/2 + a2*X1 + b2*X2 + c2*X3");
  add_candidate(p, "omega_geg", kOmegaGEG, "geg-casimir", true, "stated for gamma = 0");
  p.anchors = {"geg-relations", "geg-casimir"};
  p.notes = "gamma defaults to 0, the case with a recorded central element";
  finalize(p, {{"gamma", Scalar(0)}}, user);
  return p;
}

AlgebraPreset gsp(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("gsp", "generalised Sklyanin-Painleve algebra", X(),
                         {"X2*X3 - a*X3*X2 - alpha*X1^2 + a1*X1 + a2",
                          "X3*X1 - b*X1*X3 - beta*X2^2 + b1*X2 + b2",
                          "X1*X2 - c*X2*X1 - gamma*X3^2 + c1*X3 + c2"});
  p.anchors = {"gsp-relations"};
  p.notes = "a, b, c not roots of unity";
  finalize(p, {}, user);
  return p;
}

AlgebraPreset gensk(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("gensk", "generalised Sklyanin algebra", X(),
                         {"X2*X3 - a*X3*X2 - alpha*X1^2", "X3*X1 - b*X1*X3 - beta*X2^2",
                          "X1*X2 - c*X2*X1 - gamma*X3^2"});
  p.anchors = {"gensk-relations", "gensk-classification"};
  p.notes =
      "PHS iff (1) a=b=c!=0, (a^3, alpha beta gamma) != (-1, 1); (2) (a,b,c) != 0 and "
      "alpha=beta=a-b=0 or cyclic; (3) a root-of-unity finite case; (4) a=b=c=0, "
      "alpha beta gamma != 0; (5) alpha=beta=gamma=0, (a,b,c) != 0";
  finalize(p, {}, user);
  return p;
}

AlgebraPreset sklyanin(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("sklyanin", "Sklyanin algebra Q3(a, b, c)", X(),
                         {"a*X2*X3 + b*X3*X2 + c*X1^2", "a*X3*X1 + b*X1*X3 + c*X2^2",
                          "a*X1*X2 + b*X2*X1 + c*X3^2"});
  p.potential = cyc(X(), "a*X1*X2*X3 + b*X2*X1*X3 + c/3*(X1^3 + X2^3 + X3^3)");
  p.anchors = {"sklyanin-relations"};
  p.notes = "(a, b, c) outside the degeneration locus";
  finalize(p, {}, user);
  return p;
}

AlgebraPreset sklyanin_degenerate(const std::string& variant, const Bindings& user) {
  Alphabet uvw{"u", "v", "w"};
  AlgebraPreset p;
  if (variant == "squares") {
    p = make("sklyanin_degenerate:squares", "degenerate Sklyanin algebra, a = b", uvw,
             {"u^2", "v^2", "w^2"});
  } else if (variant == "products") {
    p = make("sklyanin_degenerate:products", "degenerate Sklyanin algebra, a != b", uvw,
             {"u*v", "v*w", "w*u"});
    p.notes = "semiclassically phi = uvw";
  } else {
    throw Error(ErrorKind::UnknownPreset, "sklyanin_degenerate variant '" + variant + "'");
  }
  p.anchors = {"sklyanin-degenerate"};
  finalize(p, {}, user);
  return p;
}

Scalar inv_qm1() { return (Scalar::var("q") - Scalar(1)).inverse(); }

AlgebraPreset odesskii(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("odesskii", "Odesskii algebra", X(),
                         {"X1*X2 - q*X2*X1 - X3", "X2*X3 - q*X3*X2 - X1", "X3*X1 - q*X1*X3 - X2"});
  p.potential = cyc(X(), "X1*X2*X3 - q*X2*X1*X3 - (X1^2 + X2^2 + X3^2)/2");
  add_candidate(p, "omega_q", "(q^2-1)*X1*X2*X3 + X1^2 + q^2*X2^2 + X3^2", "odesskii-casimir");
  p.classical = "odesskii_classical";
  p.classical_gen_factor = {inv_qm1(), inv_qm1(), inv_qm1()};
  p.anchors = {"odesskii-relations", "odesskii-casimir", "odesskii-potential"};
  p.notes = "semiclassical limit taken after X_i -> X_i/(q-1)";
  nonzero(p, "q - 1");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset molrag(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("molrag", "quantum sl2 in the rotated Odesskii form", X(),
                         {"q*X1*X2 - X2*X1 - (q - q^(-1))*X3", "q*X2*X3 - X3*X2 - (q - q^(-1))*X1",
                          "q*X3*X1 - X1*X3 - (q - q^(-1))*X2"});
  add_candidate(p, "omega_O", "-q*X1*X2*X3 + q^2*X1^2 + X2^2 + X3^2", "quantum-sl2-casimir", true,
                "printed form");
  add_candidate(p, "omega_O_transported", "-q*X2*X1*X3 + q^2*X1^2 + X2^2 + X3^2",
                "odesskii-transport", false, "image of Omega^q under the transport, times (q-1/q)^2");
  p.classical = "markov_classical";
  p.anchors = {"quantum-sl2-relations", "quantum-sl2-casimir", "odesskii-transport",
               "markov-cubic"};
  nonzero(p, "q - 1");
  nonzero(p, "q + 1");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset pbw_example(const std::string& variant, const Bindings& user) {
  AlgebraPreset p;
  if (variant == "P1") {
    p = make("pbw_example:P1", "example P1", X(),
             {"X3^2 + a*X1*X2 + b*X2*X1", "X2^2 + a*X3*X1 + b*X1*X3", "X1^2 + a*X2*X3 + b*X3*X2"});
    p.assumptions = {"(a, b) != (0, 0)", "(a^3, b^3) != (1, 1)", "(a + b)^3 != -1"};
    p.nonvanishing = {Scalar(1), Scalar(1), S("(a+b)^3 + 1")};
  } else if (variant == "PII") {
    p = make("pbw_example:PII", "example PII", Y(),
             {"Y1*Y2 + b*Y2*Y1", "Y3*Y1 + b*Y1*Y3", "Y2*Y3 + b*Y3*Y2"});
    nonzero(p, "b");
  } else {
    throw Error(ErrorKind::UnknownPreset, "pbw_example variant '" + variant + "'");
  }
  p.anchors = {"pbw-examples"};
  finalize(p, {}, user);
  return p;
}

AlgebraPreset bousseau(int r, const Bindings& user) {
  AlgebraPreset p;
  if (r == 1) {
    p = make("bousseau_v1", "quantum 1-vertex algebra", Y(),
             {"qh^(1/2)*Y3*Y1 - qh^(-1/2)*Y1*Y3",
              "qh^(1/2)*Y2*Y3 - qh^(-1/2)*Y3*Y2 - (qh - qh^(-1))*Y1",
              "qh^(1/2)*Y1*Y2 - qh^(-1/2)*Y2*Y1 - (qh^(3/2) - qh^(-3/2))*Y3^2"});
    add_candidate(p, "omega_213", "Y2*Y3*Y1 - qh^(1/2)*Y1^2 - qh*Y3^3", "vertex1-casimir");
    add_candidate(p, "omega_213_corrected", "Y2*Y3*Y1 - qh^(1/2)*Y1^2 - qh^(-2)*Y3^3",
                  "vertex1-casimir", false, "Y3^3 coefficient qh^(-2) instead of qh");
    p.classical = "quadrdef_v1";
    p.anchors = {"vertex1-quantum", "vertex1-casimir"};
  } else {
    p = make("bousseau_v2", "quantum 2-vertex algebra", Y(),
             {"qh^(1/2)*Y3*Y1 - qh^(-1/2)*Y1*Y3", "qh^(1/2)*Y2*Y3 - qh^(-1/2)*Y3*Y2",
              "qh^(1/2)*Y1*Y2 - qh^(-1/2)*Y2*Y1 - (qh^(1/2) - qh^(-1/2))*Y3^2"});
    add_candidate(p, "omega_112", "Y1*Y2*Y3 - qh^(1/2)*Y3^2", "vertex2-casimir");
    add_candidate(p, "omega_112_corrected", "Y1*Y2*Y3 - qh^2/(1 + qh + qh^2)*Y3^3",
                  "vertex2-casimir", false, "the degree 3 central element of these relations");
    p.classical = "phi112_0";
    p.anchors = {"vertex2-quantum", "vertex2-casimir"};
  }
  p.order = MonomialOrder::ascending(3);
  p.classical_q = "qh";
  p.classical_sign = -1;  // qh = 1/q reverses the bracket
  nonzero(p, "qh - 1");
  nonzero(p, "qh + 1");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset deformvacdeg(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("deformvacdeg", "infinite mass limit of the vacuum algebra", Y(),
                         {"Y3*Y1 - q*Y1*Y3", "Y2*Y3 - q*Y3*Y2 - Y1", "Y1*Y2 - q*Y2*Y1 - Y3^2"});
  p.order = MonomialOrder::ascending(3);
  p.potential = cyc(Y(), "Y1*Y2*Y3 - q*Y2*Y1*Y3 - Y3^3/3 - Y1^2/2");
  add_candidate(p, "omega_m1_0", "Y3*Y2*Y1 + q/(q^2-1)*Y1^2 + q^2/(q^3-1)*Y3^3",
                "vacuum-degenerate-casimir");
  p.classical = "deformvacdeg_classical";
  Scalar qm1 = Scalar::var("q") - Scalar(1);
  p.classical_gen_factor = {qm1.pow(3L), Scalar(1), qm1.pow(2L)};
  p.anchors = {"vacuum-degenerate", "vacuum-degenerate-casimir"};
  p.notes =
      "the printed Phi_inf has +Y3^3/3 + Y1^2/2, whose derivatives give the relations with -Y1, "
      "-Y3^2; the stored potential matches the relations. Semiclassical limit after "
      "Y1 -> (q-1)^3 Y1, Y3 -> (q-1)^2 Y3";
  nonzero(p, "q^2 - 1");
  nonzero(p, "q^3 - 1");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset deformvacdegeps(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("deformvacdegeps", "rescaled infinite mass limit", Y(),
                         {"Y3*Y1 - q*Y1*Y3", "Y2*Y3 - q*Y3*Y2 - eps1/(eps2*eps3)*Y1",
                          "Y1*Y2 - q*Y2*Y1 - eps3^2/(eps1*eps2)*Y3^2"});
  p.order = MonomialOrder::ascending(3);
  add_candidate(p, "omega_eps",
                "Y3*Y2*Y1 + q/(q^2-1)*eps1/(eps2*eps3)*Y1^2 + q^2/(q^3-1)*eps3^2/(eps1*eps2)*Y3^3",
                "vacuum-degenerate-eps", false, "Y3^3 coefficient read as eps3^2/(eps1 eps2)");
  p.anchors = {"vacuum-degenerate-eps"};
  nonzero(p, "eps1*eps2*eps3");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset deformvacdeg2(const std::string& variant, const Bindings& user) {
  AlgebraPreset p;
  if (variant.empty()) {
    p = make("deformvacdeg2", "second degeneration (as printed)", Y(),
             {"Y1*Y3 - q*Y3*Y1", "Y2*Y3 - q*Y3*Y2", "Y2*Y1 - q*Y1*Y2 - Y3^2"});
    add_candidate(p, "omega_inf", "Y2*Y3*Y1 + Y3^2/(q^2-1)", "vacuum-degenerate-2");
  } else if (variant == "limit") {
    p = make("deformvacdeg2:limit", "eps3 -> 0 limit of the rescaled relations", Y(),
             {"Y3*Y1 - q*Y1*Y3", "Y2*Y3 - q*Y3*Y2", "Y1*Y2 - q*Y2*Y1 - Y3^2"});
    add_candidate(p, "omega_inf_limit", "Y3*Y2*Y1 + q^2/(q^3-1)*Y3^3", "vacuum-degenerate-eps",
                  false, "limit of the rescaled central element with eps2 = 1, eps1 = eps3^2");
  } else {
    throw Error(ErrorKind::UnknownPreset, "deformvacdeg2 variant '" + variant + "'");
  }
  p.order = MonomialOrder::ascending(3);
  p.anchors = {"vacuum-degenerate-2"};
  nonzero(p, "q^2 - 1");
  finalize(p, {}, user);
  return p;
}

AlgebraPreset deformvac(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("deformvac", "vacuum algebra of Phi_marg + Phi_rel", X(),
                         {"X1*X2 - q*X2*X1 + Lambda*X3^2 + m2*X3 + d3",
                          "X2*X3 - q*X3*X2 + Lambda*X1^2 + m1*X1 + d1",
                          "X3*X1 - q*X1*X3 + Lambda*X2^2 + m2*X2 + d2"});
  p.potential = cyc(X(),
                    "X1*X2*X3 - q*X2*X1*X3 + Lambda/3*(X1^3 + X2^3 + X3^3) + m1/2*X1^2"
                    " + m2/2*(X2^2 + X3^2) + d1*X1 + d2*X2 + d3*X3");
  p.anchors = {"vacuum-relations", "vacuum-potentials"};
  p.notes = "mass terms enter the potential as m/2 X^2 so that the derivatives give m X";
  finalize(p, {}, user);
  return p;
}

AlgebraPreset ncpiv(const std::string& variant, const Bindings& user) {
  AlgebraPreset p;
  if (variant.empty()) {
    p = make("ncpiv", "single mass algebra", X(),
             {"X1*X2 - q*X2*X1", "X2*X3 - q*X3*X2 - m*X1", "X3*X1 - q*X1*X3"});
    p.potential = cyc(X(), "X1*X2*X3 - q*X2*X1*X3 - m/2*X1^2");
    p.classical = "ncpiv_classical";
    p.classical_params = {{"m", S("(1-q)*m")}};
    p.anchors = {"single-mass"};
    p.notes = "semiclassical limit with m -> (1-q) m";
  } else if (variant == "linear") {
    p = make("ncpiv:linear", "single mass algebra with linear terms", X(),
             {"X1*X2 - q*X2*X1 - d2", "X2*X3 - q*X3*X2 - m*X1 - d1", "X3*X1 - q*X1*X3 - d2"});
    p.potential = cyc(X(), "X1*X2*X3 - q*X2*X1*X3 - m/2*X1^2 - d1*X1 - d2*X2 - d2*X3");
    add_candidate(p, "casimir_piv",
                  "X1*X2*X3 - q*X2*X1*X3 - m/2*X1^2 + (d1*X1 + d2*(X2 + X3))/(1-q)",
                  "single-mass-linear");
    add_candidate(p, "casimir_piv_corrected",
                  "X1*X2*X3 + m/(q^2-1)*X1^2 + (d1*X1 + q*d2*X2 + d2*X3)/(q-1)",
                  "single-mass-linear", false,
                  "the printed expression is a potential; as an element it is not central");
    p.anchors = {"single-mass-linear"};
    p.notes = "the printed potential has +d terms; the stored one matches the relations";
    nonzero(p, "q - 1");
  } else {
    throw Error(ErrorKind::UnknownPreset, "ncpiv variant '" + variant + "'");
  }
  finalize(p, {}, user);
  return p;
}

AlgebraPreset ncpii(const std::string&, const Bindings& user) {
  AlgebraPreset p;
  p.id = "ncpii";
  p.title = "Painleve II potential algebra";
  p.rels.gens = X();
  p.potential = cyc(X(), "X1*X2*X3 - q*X2*X1*X3 + (q-1)*(X1 + Om2*X2 + X3)");
  for (int j : {2, 0, 1}) p.rels.rels.push_back(cyclic_derivative(*p.potential, j));
  p.order = MonomialOrder::descending(3);
  p.classical = "ncpii_classical";
  p.classical_sign = -1;  // the classical cubic is printed with -x1x2x3
  p.anchors = {"painleve2-potential"};
  p.notes =
      "relations are the cyclic derivatives of the potential; the printed relations carry the "
      "opposite sign on the constant terms";
  finalize(p, {}, user);
  return p;
}

AlgebraPreset cuabc(const std::string&, const Bindings& user) {
  AlgebraPreset p = make("cuabc", "conformal sl2 enveloping algebra", X(),
                         {"X1*X2 - q*X2*X1 - X3", "X2*X3 - q*X3*X2 - X1",
                          "X3*X1 - q*X1*X3 + gamma*X2^2 - X2 - 1"});
  const std::string lbw =
      "(q^2-1)*X3*X2*X1 - gamma*(1+q)/(q*(1+q+q^2))*X2^3 + q*X1^2 + X2^2/q + q*X3^2";
  add_candidate(p, "omega_lbw", lbw, "conformal-sl2-casimir");
  add_candidate(p, "omega_lbw_corrected", lbw + " + ((q+1)/q + gamma/(q^2+q+1))*X2",
                "conformal-sl2-casimir", false, "adds the linear term ((q+1)/q + gamma/(q^2+q+1)) X2");
  p.anchors = {"conformal-sl2", "conformal-sl2-casimir", "conformal-sl2-divisor"};
  p.notes = "divisor, stored as documentation only: -gamma q X2^3 + (q^3 - 1) X1X2X3";
  nonzero(p, "q^3 - 1");
  finalize(p, {}, user);
  return p;
}

using AlgebraBuilder = std::function<AlgebraPreset(const std::string&, const Bindings&)>;

struct AlgebraEntry {
  AlgebraBuilder build;
  std::vector<std::string> variants;  // expanded ids for listing
};

const std::map<std::string, AlgebraEntry>& algebra_registry() {
  static const std::map<std::string, AlgebraEntry> reg = [] {
    std::map<std::string, AlgebraEntry> m;
    std::vector<std::string> uzv;
    for (auto d : all_painleve_types()) uzv.push_back(painleve_name(d));
    m["uz"] = {uz, uzv};
    m["skew"] = {skew, {}};
    m["eg"] = {eg, {}};
    m["eg_t0"] = {eg_t0, {}};
    m["eg7"] = {[](const std::string&, const Bindings& b) { return eg_higher(7, b); }, {}};
    m["eg8"] = {[](const std::string&, const Bindings& b) { return eg_higher(8, b); }, {}};
    m["geg"] = {geg, {}};
    m["gsp"] = {gsp, {}};
    m["gensk"] = {gensk, {}};
    m["sklyanin"] = {sklyanin, {}};
    m["sklyanin_degenerate"] = {sklyanin_degenerate, {"squares", "products"}};
    m["odesskii"] = {odesskii, {}};
    m["molrag"] = {molrag, {}};
    m["pbw_example"] = {pbw_example, {"P1", "PII"}};
    m["bousseau_v1"] = {[](const std::string&, const Bindings& b) { return bousseau(1, b); }, {}};
    m["bousseau_v2"] = {[](const std::string&, const Bindings& b) { return bousseau(2, b); }, {}};
    m["deformvacdeg"] = {deformvacdeg, {}};
    m["deformvacdegeps"] = {deformvacdegeps, {}};
    m["deformvacdeg2"] = {deformvacdeg2, {"", "limit"}};
    m["deformvac"] = {deformvac, {}};
    m["ncpiv"] = {ncpiv, {"", "linear"}};
    m["ncpii"] = {ncpii, {}};
    m["cuabc"] = {cuabc, {}};
    return m;
  }();
  return reg;
}

// ------------------------------------------------------------ Poisson side

CommPoly cp(const std::vector<std::string>& v, const std::string& s) { return CommPoly::parse(v, s); }

PoissonPreset pp(const std::string& id, const std::vector<std::string>& v, const std::string& phi,
                 std::vector<std::string> anchors, const std::string& notes = "") {
  PoissonPreset p;
  p.id = id;
  p.structure = {id, cp(v, phi)};
  p.anchors = std::move(anchors);
  p.notes = notes;
  return p;
}

const std::map<PainleveType, std::string>& table1_rows() {
  static const std::map<PainleveType, std::string> rows = {
      {PainleveType::PVI, "x1*x2*x3 - x1^2 - x2^2 - x3^2 + w1*x1 + w2*x2 + w3*x3 + w4"},
      {PainleveType::PV, "x1*x2*x3 - x1^2 - x2^2 + w1*x1 + w2*x2 + w3*x3 + w4"},
      {PainleveType::PVdeg, "x1*x2*x3 - x1^2 - x2^2 + w1*x1 + w2*x2 + w4"},
      {PainleveType::PIV, "x1*x2*x3 - x1^2 + w1*x1 + w2*x2 + w3*x3 + w4"},
      {PainleveType::PIII_D6, "x1*x2*x3 - x1^2 - x2^2 + w1*x1 + w2*x2 + w4"},
      {PainleveType::PIII_D7, "x1*x2*x3 - x1^2 - x2^2 + w1*x1 - x2"},
      {PainleveType::PIII_D8, "x1*x2*x3 - x1^2 - x2^2 - x2"},
      {PainleveType::PII_JM, "x1*x2*x3 - x1 + w2*x2 - x3 + w4"},
      {PainleveType::PII_FN, "x1*x2*x3 - x1^2 + w1*x1 - x2 - 1"},
      {PainleveType::PI, "x1*x2*x3 - x1 - x2 + 1"},
  };
  return rows;
}

PoissonPreset chebyshev(int n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::UnknownPreset, "cheb:n needs 1 <= n <= 12");
  CommPoly phi = cp(kx, "x1*x2*x3");
  for (int i = 0; i < 3; ++i)
    phi -= CommPoly::var(kx, i).scaled(Scalar::var("e" + std::to_string(i + 1)).pow(long(n)));
  Scalar E = S("e1*e2*e3");
  auto T = chebyshev_t(n);
  for (int k = 0; k <= n; ++k) {
    if (T[k] == 0) continue;
    // 2 c_k (-1)^k w^k 2^-k E^((n-k)/2), n - k is even whenever c_k != 0
    Scalar c = Scalar(mpq_class(2 * T[k], mpz_class(1) << k)) * E.pow(long((n - k) / 2)) *
               Scalar::var("w").pow(long(k));
    if (k % 2) c = -c;
    phi += CommPoly(kx, c);
  }
  PoissonPreset p;
  p.id = "cheb:" + std::to_string(n);
  p.structure = {p.id, phi};
  p.anchors = {"chebyshev-family"};
  return p;
}

PoissonPreset mon_mf(const std::string& variant) {
  auto [type, mode] = split_variant(variant.empty() ? "PVI" : variant);
  PainleveType d = painleve_from_name(type);
  auto e = painleve_epsilon(d);
  CommPoly phi = cp(kx, "x1*x2*x3 + w4");
  for (int i = 0; i < 3; ++i) phi -= CommPoly::var(kx, i).pow(2).scaled(Scalar(long(e[i])));
  std::array<Scalar, 3> om{S("Om1"), S("Om2"), S("Om3")};
  if (mode == "geometric") {
    auto w = omega_from_g(S("g1"), S("g2"), S("g3"), S("ginf"), {e[0], e[1], e[2]});
    om = {w[0], w[1], w[2]};
    phi = specialize(phi, {{"w4", w[3]}});
  } else if (!mode.empty() && mode != "symbolic") {
    throw Error(ErrorKind::UnknownPreset, "mon-mf mode " + mode);
  }
  for (int i = 0; i < 3; ++i) phi += CommPoly::var(kx, i).scaled(om[i]);
  PoissonPreset p;
  p.id = "mon-mf:" + painleve_name(d) + (mode == "geometric" ? ":geometric" : "");
  p.structure = {p.id, phi};
  p.anchors = {"monodromy-cubic", "epsilon-map"};
  if (mode == "geometric") p.anchors.push_back("omega-map");
  return p;
}

using PoissonBuilder = std::function<PoissonPreset(const std::string&)>;

const std::map<std::string, std::pair<PoissonBuilder, std::vector<std::string>>>& poisson_registry() {
  static const auto reg = [] {
    std::map<std::string, std::pair<PoissonBuilder, std::vector<std::string>>> m;
    std::vector<std::string> types;
    for (auto d : all_painleve_types()) types.push_back(painleve_name(d));
    m["table1"] = {[](const std::string& v) {
                     PainleveType d = painleve_from_name(v.empty() ? "PVI" : v);
                     return pp("table1:" + painleve_name(d), kx, table1_rows().at(d),
                               {"painleve-cubics"});
                   },
                   types};
    m["mon-mf"] = {mon_mf, types};
    auto simple = [&m](const std::string& id, const std::vector<std::string>& v,
                       const std::string& phi, std::vector<std::string> anchors,
                       std::optional<std::array<std::string, 3>> table = std::nullopt,
                       const std::string& notes = "") {
      m[id] = {[=](const std::string&) {
                 PoissonPreset p = pp(id, v, phi, anchors, notes);
                 if (table) p.printed_table = bracket_table(v, (*table)[0], (*table)[1], (*table)[2]);
                 return p;
               },
               {}};
    };
    simple("hesse", kx, "(x1^3 + x2^3 + x3^3)/3 + tau*x1*x2*x3", {"hesse-cubic"},
           std::array<std::string, 3>{"x3^2 + tau*x1*x2", "x1^2 + tau*x2*x3", "x2^2 + tau*x3*x1"});
    simple("hesse_rational", ky, "y2^3/3 + y1*y2*y3", {"hesse-rational-limit"},
           std::array<std::string, 3>{"y1*y2", "y2*y3", "y2^2 + y3*y1"});
    simple("phi213", kx, "tau2*x1*x2*x3 + x1^3/3 + x2^6/6 + x3^2/2", {"weighted-cubics"});
    simple("phi112", kx, "tau1*x1*x2*x3 + x1^4/4 + x2^4/4 + x3^2/2", {"weighted-cubics"});
    simple("phi213_0", ky, "y1^3 + y3^2 - y1*y2*y3", {"weighted-degenerations"},
           std::array<std::string, 3>{"2*y3 - y1*y2", "3*y1^2 - y3*y2", "-y1*y3"});
    simple("phi112_0", ky, "y3^2 - y1*y2*y3", {"weighted-degenerations"},
           std::array<std::string, 3>{"2*y3 - y1*y2", "-y3*y2", "-y1*y3"});
    simple("vertex1", ky, "y1*y2*y3 - y1^2 - y3^2", {"vertex-potentials"});
    simple("vertex2", ky, "y1*y2*y3 - y3^2", {"vertex-potentials"});
    simple("quadrdef", kx,
           "x1*x2*x3 - m1*x1^2 - m2*(x2^2 + x3^2) - lambda/3*(x1^3 + x2^3 + x3^3)",
           {"perturbed-sklyanin"});
    simple("quadrdef_tot", kx,
           "x1*x2*x3 - m1*x1^2 - m2*(x2^2 + x3^2) - lambda/3*(x1^3 + x2^3 + x3^3)"
           " + delta1*x1 + delta2*x2 + delta3*x3",
           {"perturbed-sklyanin"});
    simple("quadrdef1", kx, "x1*x2*x3 - m1*x1^2 - (x1^3 + x2^3 + x3^3)/m1^3",
           {"perturbed-sklyanin", "mass-rescalings"});
    simple("quadrdef_v1", ky, "y1*y2*y3 - y1^2 - y3^3", {"mass-rescalings"},
           std::array<std::string, 3>{"-3*y3^2 + y1*y2", "-2*y1 + y2*y3", "y3*y1"});
    simple("quadrdef_v2", ky, "y1*y2*y3 - y1^2", {"mass-rescalings"},
           std::array<std::string, 3>{"y1*y2", "-2*y1 + y2*y3", "y3*y1"});
    simple("markov_classical", kx, "-x1*x2*x3 + x1^2 + x2^2 + x3^2", {"markov-cubic"});
    simple("skew_classical", kx, "x1*x2*x3", {"skew-relations", "semiclassical-limit"},
           std::array<std::string, 3>{"x1*x2", "x2*x3", "x3*x1"});
    simple("odesskii_classical", kx, "x1*x2*x3 + (x1^2 + x2^2 + x3^2)/2",
           {"odesskii-casimir", "semiclassical-limit"});
    simple("deformvacdeg_classical", ky, "y1*y2*y3 + y1^2/2 + y3^3/3",
           {"vacuum-degenerate-casimir", "semiclassical-limit"});
    simple("ncpiv_classical", kx, "x1*x2*x3 - m/2*x1^2", {"single-mass"});
    simple("ncpii_classical", kx, "-x1*x2*x3 + x1 + Om2*x2 + x3", {"painleve2-potential"});
    simple("eor:D4", kx, "x1*x2*x3 + x1^2 + x2^2 + x3^2 + eta*x1 + sigma*x2 + rho*x3 + omega",
           {"eor-families"});
    simple("eor:E6", kx,
           "x1*x2*x3 + x1^3 + x2^3 + x3^2 + eta2*x1^2 + eta1*x1 + sigma2*x2^2 + sigma1*x2"
           " + rho*x3 + omega",
           {"eor-families"});
    simple("eor:E7", kx,
           "x1*x2*x3 + x1^4 + x2^2 + x3^2 + eta3*x1^3 + eta2*x1^2 + eta1*x1 + sigma*x2 + rho*x3"
           " + omega",
           {"eor-families"}, std::nullopt, "printed x3^2 + x3^2 read as x2^2 + x3^2");
    simple("eor:E8", kx,
           "x1*x2*x3 + x1^5 + x2^2 + x3^2 + eta4*x1^4 + eta3*x1^3 + eta2*x1^2 + eta1*x1"
           " + sigma*x2 + rho*x3 + omega",
           {"eor-families"}, std::nullopt, "printed x3^2 + x3^2 read as x2^2 + x3^2");
    simple("eg:E6", kx,
           "tau*x1*x2*x3 + (x1^3 + x2^3 + x3^3)/3 + eta2*x1^2 + eta1*x1 + sigma2*x2^2"
           " + sigma1*x2 + rho2*x3^2 + rho1*x3 + omega",
           {"eg-families"});
    simple("eg:E7", kx,
           "tau*x1*x2*x3 + x1^4/4 + x2^4/4 + x3^2/2 + eta3*x1^3 + eta2*x1^2 + eta1*x1"
           " + sigma3*x2^3 + sigma2*x2^2 + sigma1*x2 + rho2*x3^2 + rho1*x3 + omega",
           {"eg-families"});
    simple("eg:E8", kx,
           "tau*x1*x2*x3 + x1^6/6 + x2^3/3 + x3^2/2 + eta5*x1^5 + eta4*x1^4 + eta3*x1^3"
           " + eta2*x1^2 + eta1*x1 + sigma2*x2^2 + sigma1*x2 + rho2*x3^2 + rho1*x3 + omega",
           {"eg-families"});
    m["cheb"] = {[](const std::string& v) {
                   int n = 1;
                   if (!v.empty()) {
                     try {
                       n = std::stoi(v);
                     } catch (const std::exception&) {
                       throw Error(ErrorKind::UnknownPreset, "cheb:" + v);
                     }
                   }
                   return chebyshev(n);
                 },
                 {"1", "2", "3", "4"}};
    return m;
  }();
  return reg;
}

// ids whose registry key contains a colon ("eor:D4") are looked up whole.
template <class Reg>
auto lookup(const Reg& reg, const std::string& id) -> std::pair<typename Reg::const_iterator, std::string> {
  auto it = reg.find(id);
  if (it != reg.end()) return {it, ""};
  auto [head, variant] = split_variant(id);
  it = reg.find(head);
  if (it != reg.end() && !it->second.second.empty()) return {it, variant};
  return {reg.end(), ""};
}

Scalar eps_pow(int num, int den = 1) { return Scalar::var_pow("eps", mpq_class(num, den)); }

}  // namespace

const std::map<std::string, std::string>& anchor_map() { return kAnchors; }

const CentralCandidate& AlgebraPreset::candidate(const std::string& name) const {
  for (auto& c : central)
    if (c.name == name) return c;
  std::string have;
  for (auto& c : central) have += (have.empty() ? "" : ", ") + c.name;
  throw Error(ErrorKind::UnknownPreset,
              "no central candidate '" + name + "' in " + id + " (have: " + (have.empty() ? "none" : have) + ")");
}

RelationSet AlgebraPreset::semiclassical_relations() const {
  RelationSet r = rels;
  if (!classical_params.empty()) r = r.specialized(classical_params);
  if (!classical_gen_factor.empty()) {
    Rescaling s{classical_gen_factor, {}};
    for (auto& f : r.rels) f = substitute_scale(f, s);
  }
  return r;
}

AlgebraPreset algebra_preset(const std::string& id, const Bindings& params) {
  auto& reg = algebra_registry();
  auto [head, variant] = split_variant(id);
  auto it = reg.find(head);
  if (it == reg.end()) throw Error(ErrorKind::UnknownPreset, id);
  if (!variant.empty() && it->second.variants.empty())
    throw Error(ErrorKind::UnknownPreset, id + " takes no variant");
  try {
    return it->second.build(variant, params);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownType) throw Error(ErrorKind::UnknownPreset, id + ": " + e.what());
    throw;
  }
}

PoissonPreset poisson_preset(const std::string& id, const Bindings& params) {
  auto& reg = poisson_registry();
  PoissonPreset p;
  auto it = reg.find(id);
  if (it != reg.end() && it->second.second.empty()) {
    p = it->second.first("");
  } else {
    auto [head, variant] = split_variant(id);
    auto jt = reg.find(head);
    if (jt == reg.end() || jt->second.second.empty()) throw Error(ErrorKind::UnknownPreset, id);
    try {
      p = jt->second.first(variant);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::UnknownType) throw Error(ErrorKind::UnknownPreset, id + ": " + e.what());
      throw;
    }
  }
  for (auto& a : p.anchors) check_anchor(a);
  if (!params.empty()) {
    p.structure.phi = specialize(p.structure.phi, params);
    if (p.printed_table) {
      BracketTable t(p.printed_table->vars());
      int n = static_cast<int>(t.nvars());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) t.set(i, j, specialize(p.printed_table->get(i, j), params));
      p.printed_table = t;
    }
  }
  return p;
}

DegenerationPreset degeneration_preset(const std::string& id) {
  DegenerationPreset d;
  d.id = id;
  CommRescaling& r = d.rescaling;
  r.new_vars = ky;
  Scalar c2 = Scalar::var_pow("r2", mpq_class(1, 2)), c3 = Scalar::var_pow("r3", mpq_class(1, 3));
  if (id == "hesse_rational") {
    d.source = "hesse";
    d.target = "hesse_rational";
    r.factor = {eps_pow(1), Scalar(1), eps_pow(1)};
    r.params = {{"tau", eps_pow(-2)}};
    d.anchors = {"hesse-rational-limit"};
    d.notes = "tau = eps^-2, x1 = eps y1, x3 = eps y3";
  } else if (id == "degen_213") {
    d.source = "phi213";
    d.target = "phi213_0";
    r.factor = {c3, -eps_pow(1) / (c2 * c3), c2};
    r.params = {{"tau2", eps_pow(-1)}};
    r.finally = {{"r2", Scalar(2)}, {"r3", Scalar(3)}};
    d.anchors = {"weighted-degenerations"};
    d.notes = "tau2 = 1/eps, x1 = 3^(1/3) y1, x2 = -eps y2/(2^(1/2) 3^(1/3)), x3 = 2^(1/2) y3";
  } else if (id == "degen_112") {
    d.source = "phi112";
    d.target = "phi112_0";
    Scalar c4 = Scalar::var_pow("r2", mpq_class(1, 4));
    r.factor = {-eps_pow(1, 2) / c4, eps_pow(1, 2) / c4, c2};
    r.params = {{"tau1", eps_pow(-1)}};
    r.finally = {{"r2", Scalar(2)}};
    d.anchors = {"weighted-degenerations"};
    d.notes = "tau1 = 1/eps, x1 = -eps^(1/2) y1/2^(1/4), x2 = eps^(1/2) y2/2^(1/4), x3 = 2^(1/2) y3";
  } else if (id == "mass_v1") {
    d.source = "quadrdef1";
    d.target = "quadrdef_v1";
    r.factor = {eps_pow(1, 2), eps_pow(1, 2), eps_pow(-1)};
    r.params = {{"m1", eps_pow(-1)}};
    d.anchors = {"mass-rescalings"};
    d.notes = "m1 = 1/eps, x1 = y1/sqrt(m1), x2 = y2/sqrt(m1), x3 = m1 y3";
  } else if (id == "mass_v2") {
    d.source = "quadrdef1";
    d.target = "quadrdef_v2";
    r.factor = {eps_pow(1, 2), Scalar(1), eps_pow(-1, 2)};
    r.params = {{"m1", eps_pow(-1)}};
    d.anchors = {"mass-rescalings"};
    d.notes = "m1 = 1/eps, x1 = y1/sqrt(m1), x3 = sqrt(m1) y3";
  } else {
    throw Error(ErrorKind::UnknownPreset, id);
  }
  return d;
}

Bindings binding_set(const std::string& id) {
  if (id == "specialisation" || id == "specialisation_keep_t") {
    Bindings b{{"a1", S("(q^2-1)*e1/q^(1/2)")}, {"b1", S("(q^2-1)*e2/q^(1/2)")},
               {"c1", S("(q^2-1)*e3/q^(1/2)")}, {"a2", S("Om1*(1-q)")},
               {"b2", S("Om2*(1-q)")},          {"c2", S("Om3*(1-q)")}};
    if (id == "specialisation") b["t"] = Scalar(0);
    return b;
  }
  throw Error(ErrorKind::UnknownPreset, id);
}

AnyPreset preset(const std::string& id, const Bindings& params) {
  try {
    return algebra_preset(id, params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnknownPreset) throw;
  }
  return poisson_preset(id, params);
}

std::vector<std::string> algebra_preset_ids() {
  std::vector<std::string> ids;
  for (auto& [k, e] : algebra_registry()) {
    if (e.variants.empty()) ids.push_back(k);
    for (auto& v : e.variants) ids.push_back(v.empty() ? k : k + ":" + v);
  }
  return ids;
}

std::vector<std::string> poisson_preset_ids() {
  std::vector<std::string> ids;
  for (auto& [k, e] : poisson_registry()) {
    if (e.second.empty()) ids.push_back(k);
    for (auto& v : e.second) ids.push_back(k + ":" + v);
  }
  return ids;
}

std::vector<std::string> degeneration_preset_ids() {
  return {"degen_112", "degen_213", "hesse_rational", "mass_v1", "mass_v2"};
}

std::vector<std::string> binding_set_ids() { return {"specialisation", "specialisation_keep_t"}; }

std::array<Scalar, 4> omega_from_g(const Scalar& g1, const Scalar& g2, const Scalar& g3,
                                   const Scalar& ginf, const std::array<mpq_class, 3>& eps) {
  Scalar e1(eps[0]), e2(eps[1]), e3(eps[2]);
  return {-g1 * ginf - e1 * g2 * g3, -g2 * ginf - e2 * g1 * g3, -g3 * ginf - e3 * g1 * g2,
          e2 * e3 * g1 * g1 + e1 * e3 * g2 * g2 + e1 * e2 * g3 * g3 + ginf * ginf +
              g1 * g2 * g3 * ginf - Scalar(4) * e1 * e2 * e3};
}

GeneratorMap odesskii_transport(bool as_printed) {
  GeneratorMap m;
  m.id = as_printed ? "odesskii_transport:printed" : "odesskii_transport";
  Scalar c = S("q - q^(-1)");
  Scalar k = as_printed ? c : c.inverse();
  m.images = {NcPoly::gen(X(), 1).scaled(-k), NcPoly::gen(X(), 0).scaled(k),
              NcPoly::gen(X(), 2).scaled(k)};
  m.anchors = {"odesskii-transport"};
  m.notes = as_printed ? "X1 -> -(q-1/q) X2, X2 -> (q-1/q) X1, X3 -> (q-1/q) X3"
                       : "X1 -> -X2/(q-1/q), X2 -> X1/(q-1/q), X3 -> X3/(q-1/q)";
  return m;
}

RescalingSolve solve_rescaling(const RelationSet& source, const RelationSet& target,
                               const Bindings& substitution, int fixed) {
  RescalingSolve out;
  std::size_t n = source.gens.size();
  check_alphabet(source.gens, target.gens);
  if (source.rels.size() != target.rels.size() || fixed < 0 || std::size_t(fixed) >= n) {
    out.log.push_back("shape mismatch");
    return out;
  }
  // Rows: exponent difference vector | index of the ratio it must equal.
  std::vector<std::vector<mpq_class>> rows;
  std::vector<Scalar> ratios;
  std::vector<std::map<std::size_t, mpq_class>> rhs;
  auto counts = [&](const Word& w) {
    std::vector<mpq_class> e(n);
    for (char l : w) e[static_cast<unsigned char>(l)] += 1;
    return e;
  };
  for (std::size_t j = 0; j < source.rels.size(); ++j) {
    NcPoly s = specialize_nc(source.rels[j], substitution);
    const NcPoly& t = target.rels[j];
    if (s.size() != t.size() || s.is_zero()) {
      out.log.push_back("relation " + std::to_string(j + 1) + ": supports differ");
      return out;
    }
    auto ref = s.terms().begin();
    Scalar tref = t.coeff(ref->first);
    if (tref.is_zero()) {
      out.log.push_back("relation " + std::to_string(j + 1) + ": supports differ");
      return out;
    }
    auto e0 = counts(ref->first);
    for (auto& [w, c] : s.terms()) {
      if (w == ref->first) continue;
      Scalar tw = t.coeff(w);
      if (tw.is_zero()) {
        out.log.push_back("relation " + std::to_string(j + 1) + ": supports differ");
        return out;
      }
      auto e = counts(w);
      for (std::size_t i = 0; i < n; ++i) e[i] -= e0[i];
      rows.push_back(e);
      ratios.push_back(tw * ref->second / (tref * c));
      rhs.push_back({{ratios.size() - 1, mpq_class(1)}});
    }
  }
  std::vector<mpq_class> gauge(n);
  gauge[std::size_t(fixed)] = 1;
  rows.push_back(gauge);
  rhs.push_back({});
  // Gauss-Jordan on the exponent matrix, carrying formal logarithms.
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    mpq_class inv = 1 / rows[r][col];
    for (auto& v : rows[r]) v *= inv;
    for (auto& [k, v] : rhs[r]) v *= inv;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][col] == 0) continue;
      mpq_class f = rows[o][col];
      for (std::size_t i = 0; i < n; ++i) rows[o][i] -= f * rows[r][i];
      for (auto& [k, v] : rhs[r]) rhs[o][k] -= f * v;
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  out.kappa.assign(n, Scalar(1));
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot_row[i] < 0) {
      out.log.push_back("kappa" + std::to_string(i + 1) + " undetermined, set to 1");
      continue;
    }
    Scalar k(1);
    for (auto& [idx, v] : rhs[std::size_t(pivot_row[i])]) {
      if (v == 0) continue;
      if (v.get_den() == 1) {
        k *= ratios[idx].pow(v.get_num().get_si());
      } else {
        try {
          k *= ratios[idx].pow(v);
        } catch (const Error&) {
          out.log.push_back("kappa" + std::to_string(i + 1) + " needs a non-monomial root");
          return out;
        }
      }
    }
    out.kappa[i] = k;
  }
  // Verify: every rescaled source relation is proportional to its target.
  Rescaling s{out.kappa, substitution};
  for (std::size_t j = 0; j < source.rels.size(); ++j) {
    auto u = proportional(substitute_scale(source.rels[j], s), target.rels[j]);
    if (!u) {
      out.log.push_back("relation " + std::to_string(j + 1) + " not matched (inconsistent system)");
      out.units.clear();
      return out;
    }
    out.units.push_back(*u);
  }
  out.found = true;
  return out;
}

// ------------------------------------------------------------ JSON

namespace {

Json candidates_json(const std::vector<CentralCandidate>& cs) {
  Json a = Json::array();
  for (auto& c : cs)
    a.push_back({{"name", c.name},
                 {"element", ncpoly_to_json(c.element)},
                 {"text", c.element.str()},
                 {"anchor", c.anchor},
                 {"as_printed", c.as_printed},
                 {"note", c.note}});
  return a;
}

Json parameters_json(const RelationSet& r) {
  std::set<std::string> names;
  for (auto& f : r.rels)
    for (auto& [w, c] : f.terms())
      for (VarId v : c.vars()) names.insert(var_name(v));
  Json j = Json::array();
  for (auto& n : names) j.push_back(n);
  return j;
}

}  // namespace

Json algebra_preset_json(const AlgebraPreset& p) {
  Json rels = Json::array();
  for (auto& f : p.rels.rels) rels.push_back(ncpoly_to_json(f));
  Json text = Json::array();
  for (auto& f : p.rels.rels) text.push_back(f.str());
  Json j = {{"kind", "algebra"},
            {"id", p.id},
            {"title", p.title},
            {"gens", p.rels.gens},
            {"relations", rels},
            {"relations_text", text},
            {"parameters", parameters_json(p.rels)},
            {"bindings", Json::object()},
            {"potential", p.potential ? ncpoly_to_json(p.potential->as_poly()) : Json()},
            {"central", candidates_json(p.central)},
            {"classical", p.classical},
            {"classical_q", p.classical_q},
            {"classical_sign", p.classical_sign},
            {"order", p.order.str(p.rels.gens)},
            {"anchors", p.anchors},
            {"assumptions", p.assumptions},
            {"warnings", p.warnings},
            {"notes", p.notes}};
  for (auto& [k, v] : p.rels.params) j["bindings"][k] = scalar_to_json(v);
  return j;
}

Json poisson_preset_json(const PoissonPreset& p) {
  Json j = {{"kind", "poisson"},
            {"id", p.id},
            {"phi", commpoly_to_json(p.structure.phi)},
            {"phi_text", p.structure.phi.str()},
            {"anchors", p.anchors},
            {"notes", p.notes}};
  if (p.printed_table) j["printed_table"] = bracket_table_json(*p.printed_table);
  return j;
}

Json degeneration_preset_json(const DegenerationPreset& d) {
  Json f = Json::array();
  for (auto& s : d.rescaling.factor) f.push_back(s.str());
  Json params = Json::object();
  for (auto& [k, v] : d.rescaling.params) params[k] = v.str();
  Json fin = Json::object();
  for (auto& [k, v] : d.rescaling.finally) fin[k] = v.str();
  return {{"kind", "degeneration"}, {"id", d.id},           {"source", d.source},
          {"target", d.target},     {"factors", f},         {"params", params},
          {"finally", fin},         {"anchors", d.anchors}, {"notes", d.notes}};
}

Json presets_manifest() {
  Json alg = Json::array();
  for (auto& id : algebra_preset_ids()) {
    AlgebraPreset p = algebra_preset(id);
    Json defaults = Json::object();
    for (auto& [k, v] : p.rels.params) defaults[k] = v.str();
    Json cands = Json::array();
    for (auto& c : p.central) cands.push_back(c.name);
    alg.push_back({{"id", p.id},
                   {"title", p.title},
                   {"anchors", p.anchors},
                   {"parameters", parameters_json(p.rels)},
                   {"defaults", defaults},
                   {"central", cands},
                   {"has_potential", p.potential.has_value()},
                   {"classical", p.classical}});
  }
  Json poi = Json::array();
  for (auto& id : poisson_preset_ids()) {
    PoissonPreset p = poisson_preset(id);
    std::set<std::string> names;
    for (auto& [e, c] : p.structure.phi.terms())
      for (VarId v : c.vars()) names.insert(var_name(v));
    poi.push_back({{"id", p.id},
                   {"anchors", p.anchors},
                   {"parameters", std::vector<std::string>(names.begin(), names.end())},
                   {"phi", p.structure.phi.str()}});
  }
  Json deg = Json::array();
  for (auto& id : degeneration_preset_ids()) {
    auto d = degeneration_preset(id);
    deg.push_back({{"id", d.id}, {"source", d.source}, {"target", d.target}, {"anchors", d.anchors}});
  }
  Json bs = Json::array();
  for (auto& id : binding_set_ids()) {
    Json b = Json::object();
    for (auto& [k, v] : binding_set(id)) b[k] = v.str();
    bs.push_back({{"id", id}, {"anchors", {"eg-specialisation"}}, {"bindings", b}});
  }
  Json anchors = Json::object();
  for (auto& [k, v] : kAnchors) anchors[k] = v;
  return {{"algebras", alg},
          {"poisson", poi},
          {"degenerations", deg},
          {"binding_sets", bs},
          {"anchors", anchors}};
}

}  // namespace ncalg
