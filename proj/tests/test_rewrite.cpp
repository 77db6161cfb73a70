#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ncalg/error.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;
using testing_helpers::random_ncpoly;

namespace {

const Alphabet X = default_alphabet();

NcPoly P(const char* s) { return NcPoly::parse(X, s); }

RelationSet skew() {
  return {X,
          {P("q^(-1/2)*X1*X2 - q^(1/2)*X2*X1"), P("q^(-1/2)*X2*X3 - q^(1/2)*X3*X2"),
           P("q^(-1/2)*X3*X1 - q^(1/2)*X1*X3")},
          {}};
}

RelationSet uz() {
  return {X,
          {P("q^(-1/2)*X1*X2 - q^(1/2)*X2*X1 - (q^(-1)-q)*e3*X3 + (q^(-1/2)-q^(1/2))*Om3"),
           P("q^(-1/2)*X2*X3 - q^(1/2)*X3*X2 - (q^(-1)-q)*e1*X1 + (q^(-1/2)-q^(1/2))*Om1"),
           P("q^(-1/2)*X3*X1 - q^(1/2)*X1*X3 - (q^(-1)-q)*e2*X2 + (q^(-1/2)-q^(1/2))*Om2")},
          {}};
}

const char* kOmega4 =
    "q^(1/2)*X3*X2*X1 - q*e1*X1^2 - e2/q*X2^2 - q*e3*X3^2 + q^(1/2)*Om1*X1"
    " + Om2/q^(1/2)*X2 + q^(1/2)*Om3*X3";

MonomialOrder desc() { return MonomialOrder::descending(3); }

}  // namespace

TEST_CASE("orient the skew polynomial relations") {
  RewriteSystem rs = orient(skew(), desc());
  REQUIRE(rs.rules().size() == 3);
  CHECK(rs.rules()[0].lead == Word({1, 0}));
  CHECK(rs.rules()[0].tail == P("q^(-1)*X1*X2"));
  CHECK(rs.rules()[1].lead == Word({2, 1}));
  CHECK(rs.rules()[1].tail == P("q^(-1)*X2*X3"));
  CHECK(rs.rules()[2].lead == Word({2, 0}));
  // X3*X1 = q*X1*X3 follows from the third relation as written.
  CHECK(rs.rules()[2].tail == P("q*X1*X3"));
  CHECK(rs.assumptions().empty());
}

TEST_CASE("orient UZ keeps the quadratic leading words") {
  RewriteSystem rs = orient(uz(), desc());
  CHECK(rs.rules()[0].lead == Word({1, 0}));
  CHECK(rs.rules()[1].lead == Word({2, 1}));
  CHECK(rs.rules()[2].lead == Word({2, 0}));
  CHECK(rs.rules()[0].tail.degree() == 2);
  CHECK(rs.rules()[0].tail.coeff(Word({2})) == Scalar::parse("-(q^(-3/2)-q^(1/2))*e3"));
}

TEST_CASE("orient records parameter assumptions") {
  RelationSet r{X, {P("t*X3*X3 + X1*X2")}, {}};
  RewriteSystem rs = orient(r, desc());
  REQUIRE(rs.assumptions().size() == 1);
  CHECK(rs.assumptions()[0] == "t != 0");
  RelationSet dep{X, {P("X2*X1 - X1*X2"), P("2*X2*X1 - 2*X1*X2")}, {}};
  CHECK_THROWS_AS(orient(dep, desc()), Error);
}

TEST_CASE("reduce") {
  RewriteSystem rs = orient(skew(), desc());
  CHECK(reduce(rs, P("X2*X1")) == P("q^(-1)*X1*X2"));
  NcPoly g = P("X1*X2*X3 + 3*X1^2");
  CHECK(reduce(rs, g) == g);
  CHECK(reduce(rs, P("X3*X2*X1")) == P("q^(-1)*X1*X2*X3"));
  RewriteSystem u = orient(uz(), desc());
  NcPoly w = P("X3*X2*X1");
  CHECK(reduce(u, w, Strategy::Leftmost) == reduce(u, w, Strategy::Rightmost));
}

TEST_CASE("confluence") {
  RewriteSystem u = orient(uz(), desc());
  auto rep = confluence_check(u, 6);
  CHECK(rep.status == ConfluenceReport::Status::Confluent);
  REQUIRE(rep.ambiguities.size() == 1);
  CHECK(rep.ambiguities[0].word == Word({2, 1, 0}));
  RewriteSystem empty = orient(RelationSet{X, {}, {}}, desc());
  CHECK(confluence_check(empty).status == ConfluenceReport::Status::Confluent);
  Json j = confluence_json(rep);
  CHECK(j["ambiguities"][0]["word"] == Json::array({3, 2, 1}));
}

TEST_CASE("central_by_rewrite") {
  RewriteSystem u = orient(uz(), desc());
  CHECK_THROWS_AS(central_by_rewrite(u, P("1")), Error);
  confluence_check(u);
  CHECK(central_by_rewrite(u, P(kOmega4)));
  CHECK(central_by_rewrite(u, P("1")));
  CHECK_FALSE(central_by_rewrite(u, P("X1")));
}

TEST_CASE("reduce is a linear, multiplicative projection") {
  RewriteSystem u = orient(uz(), desc());
  std::mt19937_64 rng(21);
  for (int i = 0; i < 10; ++i) {
    NcPoly f = random_ncpoly(rng, X, 3, 3), g = random_ncpoly(rng, X, 3, 3);
    NcPoly rf = reduce(u, f), rg = reduce(u, g);
    CHECK(reduce(u, rf) == rf);
    CHECK(reduce(u, f + g) == rf + rg);
    CHECK(reduce(u, f * g) == reduce(u, rf * rg));
  }
}

TEST_CASE("normal forms do not depend on the strategy") {
  RewriteSystem u = orient(uz(), desc());
  REQUIRE(confluence_check(u, 6).status == ConfluenceReport::Status::Confluent);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> letter(0, 2), len(1, 4);
  for (int i = 0; i < 20; ++i) {
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(static_cast<char>(letter(rng)));
    NcPoly f = NcPoly::word(X, w);
    NcPoly a = reduce(u, f, Strategy::Leftmost);
    CHECK(reduce(u, f, Strategy::Rightmost) == a);
    CHECK(reduce(u, f, Strategy::Random, rng()) == a);
  }
}

TEST_CASE("normal words of UZ are ordered monomials") {
  RewriteSystem u = orient(uz(), desc());
  for (int k = 0; k <= 6; ++k) {
    auto ws = normal_words(u, k);
    CHECK(ws.size() == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    for (auto& w : ws) CHECK(std::is_sorted(w.begin(), w.end()));
  }
}
