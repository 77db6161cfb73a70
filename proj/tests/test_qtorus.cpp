#include <random>

#include "doctest.h"
#include "ncalg/error.hpp"
#include "ncalg/qtorus.hpp"

using namespace ncalg;

namespace {

constexpr LatticeKind G = LatticeKind::Generic;
constexpr LatticeKind P3 = LatticeKind::PIII;

TorusElement T(LatticeKind k, const char* s) { return parse_exp_poly(k, s, {}); }

Scalar qpow(int num, int den) { return Scalar::var_pow("q", mpq_class(num, den)); }

// Doubled exponents; half-integers only where the presets allow them (p's,
// and s2 on the PIII lattice), so q-powers stay in (1/4)Z.
Exponent random_exponent(std::mt19937_64& rng, LatticeKind k) {
  std::uniform_int_distribution<int> e(-3, 3);
  Exponent u{};
  for (int i = 0; i < kTorusRank; ++i) {
    bool half = i >= 3 || (k == P3 && i == 1);
    u[i] = half ? e(rng) : 2 * e(rng);
  }
  return u;
}

TorusElement random_torus(std::mt19937_64& rng, LatticeKind k) {
  std::uniform_int_distribution<int> n(1, 3), c(-5, 5), e(-2, 2);
  TorusElement a(k);
  int terms = n(rng);
  for (int i = 0; i < terms; ++i)
    a.add_term(random_exponent(rng, k), Scalar(static_cast<long>(c(rng))) * qpow(e(rng), 2));
  return a;
}

std::array<mpq_class, kTorusRank> p3_shift() {
  std::array<mpq_class, kTorusRank> s{};
  s[5] = -2;
  return s;
}

}  // namespace

TEST_CASE("shear lattice presets") {
  for (LatticeKind k : {G, P3}) {
    ShearLattice L = ShearLattice::make(k);
    for (int i = 0; i < kTorusRank; ++i)
      for (int j = 0; j < kTorusRank; ++j) CHECK(L.omega[i][j] == -L.omega[j][i]);
  }
  ShearLattice g = ShearLattice::make(G);
  CHECK(g.omega[0][1] == 1);
  CHECK(g.omega[1][2] == 1);
  CHECK(g.omega[2][0] == 1);
  for (int j = 0; j < kTorusRank; ++j) CHECK(g.omega[4][j] == 0);
  ShearLattice p = ShearLattice::make(P3);
  CHECK(p.omega[0][1] == 1);
  CHECK(p.omega[4][0] == 1);
  CHECK(p.omega[2][1] == 1);
  CHECK(p.omega[4][2] == 1);
  CHECK(p.omega[1][4] == 2);
  CHECK(p.omega[0][2] == 0);
  for (int j = 0; j < kTorusRank; ++j) CHECK(p.omega[3][j] == 0);
}

TEST_CASE("torus_mul examples") {
  CHECK(torus_mul(T(G, "e(s1)"), T(G, "e(s2)")) ==
        TorusElement::exp(G, {2, 2, 0, 0, 0, 0}, qpow(-1, 2)));
  CHECK(torus_mul(T(G, "e(s1-2*s2+p1/2)"), T(G, "e(-s1+2*s2-p1/2)")) == TorusElement(G, Scalar(1)));
  TorusElement a = T(G, "e(s1)"), b = T(G, "e(s2)"), c = T(G, "e(s3)");
  CHECK(torus_mul(torus_mul(a, b), c) == torus_mul(a, torus_mul(b, c)));
  CHECK_THROWS_AS(torus_mul(T(G, "e(s1)"), T(P3, "e(s1)")), Error);
}

TEST_CASE("torus_mul is associative with unit (random)") {
  std::mt19937_64 rng(7);
  for (LatticeKind k : {G, P3})
    for (int i = 0; i < 25; ++i) {
      TorusElement a = random_torus(rng, k), b = random_torus(rng, k), c = random_torus(rng, k);
      CHECK(torus_mul(torus_mul(a, b), c) == torus_mul(a, torus_mul(b, c)));
      CHECK(torus_mul(a, TorusElement(k, Scalar(1))) == a);
      CHECK(torus_mul(TorusElement(k, Scalar(1)), a) == a);
    }
}

TEST_CASE("commutation rule e^u e^v = q^-omega(u,v) e^v e^u (random)") {
  std::mt19937_64 rng(11);
  for (LatticeKind k : {G, P3}) {
    ShearLattice L = ShearLattice::make(k);
    for (int i = 0; i < 40; ++i) {
      Exponent u = random_exponent(rng, k), v = random_exponent(rng, k);
      TorusElement eu = TorusElement::exp(k, u), ev = TorusElement::exp(k, v);
      Scalar f = Scalar::var_pow("q", -pairing(L, u, v));
      CHECK(torus_mul(eu, ev) == torus_mul(ev, eu).scaled(f));
    }
  }
}

TEST_CASE("is_central_torus") {
  CHECK(is_central_torus(T(P3, "e(s1+s2/2+p2/2)")));
  CHECK_FALSE(is_central_torus(T(G, "e(s1)")));
  CHECK(is_central_torus(TorusElement(G, Scalar(1))));
  CHECK(is_central_torus(T(G, "e(s1+s2+s3) + e(p1/2)")));
}

TEST_CASE("painleve_data rows") {
  CHECK(painleve_data(PainleveType::PIII_D8).X[1] == T(P3, "2 + e(-s2) + e(s2)"));
  CHECK(painleve_data(PainleveType::PI).X[0] == T(G, "e(-s1)"));
  CHECK(painleve_data(PainleveType::PVI).eps == std::array<int, 3>{1, 1, 1});
  CHECK(painleve_from_name("PII_FN") == PainleveType::PII_FN);
  CHECK_THROWS_AS(painleve_from_name("PVII"), Error);
  // The quantum X1 of PVI expands the g-products before lifting.
  TorusElement x1 = T(G,
                      "e(s2+s3+p2/2+p3/2)+e(-s2-s3-p2/2-p3/2)+e(s2-s3+p2/2-p3/2)"
                      "+e(p2/2-s3-p3/2)+e(-p2/2-s3-p3/2)+e(p3/2+s2+p2/2)+e(-p3/2+s2+p2/2)");
  CHECK(painleve_data(PainleveType::PVI).X[0] == x1);
}

TEST_CASE("PI realization satisfies its cubic classically") {
  ShearReport r = verify_painleve(PainleveType::PI, false);
  CHECK(r.pass);
}

TEST_CASE("shear realizations satisfy the quantum and classical relations") {
  for (PainleveType d : all_painleve_types()) {
    bool piii = d == PainleveType::PIII_D6 || d == PainleveType::PIII_D7 || d == PainleveType::PIII_D8;
    CAPTURE(painleve_name(d));
    ShearReport qr = verify_painleve(d, true), cr = verify_painleve(d, false);
    // The PIII rows are inconsistent as printed; see the decisions ledger.
    CHECK(qr.pass == !piii);
    CHECK(cr.pass == !piii);
  }
}

TEST_CASE("quantum Omega_4 commutes with every X_j") {
  for (PainleveType d : all_painleve_types()) {
    if (d == PainleveType::PIII_D7 || d == PainleveType::PIII_D8) continue;
    CAPTURE(painleve_name(d));
    ShearRealization r = painleve_data(d);
    for (int j = 0; j < 3; ++j) CHECK(torus_commutator(r.Omega[3], r.X[j]).is_zero());
  }
}

TEST_CASE("printed conventions fail even for PI") {
  ShearReport r = verify_painleve(PainleveType::PI, true, ShearOptions::as_printed());
  CHECK_FALSE(r.pass);
  ShearOptions o = ShearOptions::as_printed();
  o.reversed_orientation = true;
  CHECK(verify_painleve(PainleveType::PI, true, o).pass);
  CHECK_FALSE(verify_painleve(PainleveType::PI, false, ShearOptions::as_printed()).pass);
  CHECK_FALSE(verify_painleve(PainleveType::PVI, true, o).pass);
}

TEST_CASE("torus_rescale and limits") {
  TorusElement a = T(G, "e(s1) + 3*e(p3/2)");
  CHECK(torus_rescale(a, {}) == a);
  CHECK(torus_rescale(T(G, "e(p3/2)"), p3_shift()) ==
        TorusElement::exp(G, {0, 0, 0, 0, 0, 1}, Scalar::var("eps").inverse()));
  TorusElement c = torus_rescale(T(G, "e(-p3/2) + e(s1+s2+s3)"), p3_shift());
  CHECK(is_central_torus(c));
  CHECK(torus_limit(c) == T(G, "e(s1+s2+s3)"));
  CHECK_THROWS_AS(torus_limit(torus_rescale(T(G, "e(p3)"), p3_shift())), Error);
}

TEST_CASE("PVI relations persist after p3 -> p3 - 2 log eps") {
  ShearRealization r = painleve_data(PainleveType::PVI);
  for (auto& x : r.X) x = torus_rescale(x, p3_shift());
  for (auto& o : r.Omega) o = torus_rescale(o, p3_shift());
  for (const TorusElement& J : torus_relations(r)) CHECK(J.is_zero());
  bool has_eps = false;
  for (auto& [u, c] : r.X[0].terms()) has_eps = has_eps || c.has_var(var_id("eps"));
  CHECK(has_eps);
}

TEST_CASE("torus JSON round trip") {
  TorusElement a = painleve_data(PainleveType::PIII_D6).X[0].scaled(qpow(1, 4));
  Json j = torus_to_json(a);
  CHECK(j["lattice"] == "piii");
  CHECK(torus_from_json(j) == a);
  CHECK(torus_from_json(Json::parse(j.dump())) == a);
  Json bad = j;
  bad["lattice"] = "hex";
  CHECK_THROWS_AS(torus_from_json(bad), Error);
}

TEST_CASE("exponential parser errors") {
  CHECK_THROWS_AS(T(G, "e(s4)"), Error);
  CHECK_THROWS_AS(T(G, "e(s1/3)"), Error);
  CHECK_THROWS_AS(T(G, "g7*e(s1)"), Error);
  CHECK_THROWS_AS(T(G, "e(s1"), Error);
}
