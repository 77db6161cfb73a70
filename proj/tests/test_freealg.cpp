#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ncalg/error.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/json_io.hpp"

using namespace ncalg;
using testing_helpers::random_ncpoly;

namespace {

const Alphabet X = default_alphabet();

NcPoly P(const char* s) { return NcPoly::parse(X, s); }

const char* kPhiUZ =
    "X1*X2*X3 - q*X2*X1*X3 + (q^2-1)/(2*q^(1/2))*(e1*X1^2 + e2*X2^2 + e3*X3^2)"
    " + (1-q)*(Om1*X1 + Om2*X2 + Om3*X3)";

}  // namespace

TEST_CASE("nc_mul basics") {
  CHECK(nc_mul(P("X1"), P("X2")) == P("X1*X2"));
  CHECK(nc_mul(P("X1*X2 - q*X2*X1"), P("X3")).size() == 2);
  NcPoly other = NcPoly::parse({"Y1", "Y2", "Y3"}, "Y1");
  CHECK_THROWS_AS(nc_mul(P("X1"), other), Error);
}

TEST_CASE("three-term commutator identity expands to zero") {
  NcPoly lhs = P("(X1*X2 - q*X2*X1)*X3 + (X2*X3 - q*X3*X2)*X1 + (X3*X1 - q*X1*X3)*X2");
  NcPoly rhs = P("X3*(X1*X2 - q*X2*X1) + X1*(X2*X3 - q*X3*X2) + X2*(X3*X1 - q*X1*X3)");
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("commutator") {
  CHECK(commutator(P("X1"), P("X1")).is_zero());
  CHECK(commutator(P("X1"), P("X2")) == P("X1*X2 - X2*X1"));
  CHECK(commutator(P("Om1"), P("X1")).is_zero());
}

TEST_CASE("cyclic_reduce") {
  CHECK(cyclic_reduce(P("X1*X2*X3 - X3*X1*X2")).is_zero());
  auto c = cyclic_reduce(P("X2*X1*X3"));
  REQUIRE(c.terms().size() == 1);
  CHECK(c.terms().begin()->first == Word({0, 2, 1}));
  CHECK(min_rotation(Word({1, 0, 1, 0})) == Word({0, 1, 0, 1}));
}

TEST_CASE("cyclic_derivative") {
  CHECK(cyclic_derivative(cyclic_reduce(P("X1*X2*X3 - q*X2*X1*X3")), 0) == P("X2*X3 - q*X3*X2"));
  CHECK(cyclic_derivative(cyclic_reduce(P("X1^2")), 0) == P("2*X1"));
  // The third derivative of the UZ potential is q^(1/2) times the first relation.
  NcPoly j1 = P("q^(-1/2)*X1*X2 - q^(1/2)*X2*X1 - (q^(-1)-q)*e3*X3 + (q^(-1/2)-q^(1/2))*Om3");
  NcPoly d3 = cyclic_derivative(cyclic_reduce(P(kPhiUZ)), 2);
  auto u = proportional(j1, d3);
  REQUIRE(u);
  CHECK(*u == Scalar::parse("q^(1/2)"));
}

TEST_CASE("substitute_scale") {
  Rescaling r = Rescaling::eps_powers("eps", {1, 0, 0});
  CHECK(substitute_scale(P("X1*X2"), r) == P("eps*X1*X2"));
  NcPoly f = P(kPhiUZ);
  CHECK(substitute_scale(f, Rescaling::identity(3)) == f);
  Rescaling s = Rescaling::identity(3);
  s.params["e1"] = Scalar(0);
  CHECK(substitute_scale(f, s).coeff(Word({0, 0})).is_zero());
}

TEST_CASE("free algebra properties on random samples") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 15; ++i) {
    NcPoly a = random_ncpoly(rng, X, 4, 3), b = random_ncpoly(rng, X, 4, 3),
           c = random_ncpoly(rng, X, 4, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * NcPoly(X, Scalar(1)) == a);
    CHECK(NcPoly(X, Scalar(1)) * a == a);
    CHECK(cyclic_reduce(commutator(a, b)).is_zero());
    CyclicPotential pa = cyclic_reduce(a), pb = cyclic_reduce(b);
    for (int j = 0; j < 3; ++j)
      CHECK(cyclic_derivative(pa + pb, j) == cyclic_derivative(pa, j) + cyclic_derivative(pb, j));
  }
}

TEST_CASE("Euler identity for homogeneous potentials") {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    NcPoly f = random_ncpoly(rng, X, 6, 5).part(n);
    CyclicPotential phi = cyclic_reduce(f);
    CyclicPotential sum(X);
    for (int j = 0; j < 3; ++j) sum = sum + cyclic_reduce(NcPoly::gen(X, j) * cyclic_derivative(phi, j));
    CHECK(sum == phi.scaled(Scalar(n)));
  }
}

TEST_CASE("NcPoly JSON round trip") {
  NcPoly f = P(kPhiUZ);
  Json j = ncpoly_to_json(f);
  CHECK(ncpoly_from_json(j) == f);
  CHECK(ncpoly_from_json(Json::parse(j.dump())) == f);
  CHECK(j["terms"][0][1].is_array());
}
