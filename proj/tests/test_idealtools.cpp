#include "doctest.h"
#include "ncalg/error.hpp"
#include "ncalg/idealtools.hpp"

using namespace ncalg;

namespace {

const Alphabet X = default_alphabet();

NcPoly P(const char* s) { return NcPoly::parse(X, s); }

RelationSet rels_of(std::initializer_list<const char*> rs) {
  RelationSet r{X, {}, {}};
  for (auto* s : rs) r.rels.push_back(P(s));
  return r;
}

RelationSet uz() {
  return rels_of({"q^(-1/2)*X1*X2 - q^(1/2)*X2*X1 - (q^(-1)-q)*e3*X3 + (q^(-1/2)-q^(1/2))*Om3",
                  "q^(-1/2)*X2*X3 - q^(1/2)*X3*X2 - (q^(-1)-q)*e1*X1 + (q^(-1/2)-q^(1/2))*Om1",
                  "q^(-1/2)*X3*X1 - q^(1/2)*X1*X3 - (q^(-1)-q)*e2*X2 + (q^(-1/2)-q^(1/2))*Om2"});
}

const char* kOmega4 =
    "q^(1/2)*X3*X2*X1 - q*e1*X1^2 - e2/q*X2^2 - q*e3*X3^2 + q^(1/2)*Om1*X1"
    " + Om2/q^(1/2)*X2 + q^(1/2)*Om3*X3";

RelationSet tcomm() {
  return rels_of({"X1*X2 - q*X2*X1 - t*X3^2 + c1*X3 + c2", "X2*X3 - q*X3*X2 - t*X1^2 + a1*X1 + a2",
                  "X3*X1 - q*X1*X3 - t*X2^2 + b1*X2 + b2"});
}

std::vector<std::size_t> V(std::initializer_list<std::size_t> v) { return v; }

}  // namespace

TEST_CASE("ideal_basis sizes") {
  CHECK(ideal_basis(rels_of({"X1*X2 - q*X2*X1"}), 2, 0).size() == 1);
  CHECK(ideal_basis(uz(), 2, 0).size() == 3);
  Bindings b{{"q", Scalar(3)}, {"t", Scalar(5)}, {"a1", Scalar(2)}, {"a2", Scalar(-7)},
             {"b1", Scalar(11)}, {"b2", Scalar(13)}, {"c1", Scalar(-17)}, {"c2", Scalar(19)}};
  IdealSpan s(tcomm().specialized(b), 3, 0);
  CHECK(s.rows_generated() == 21);
  CHECK_FALSE(s.symbolic());
  CHECK(s.rank() <= 21);
}

TEST_CASE("membership") {
  RelationSet u = uz();
  CHECK(contains(u, u.rels[0] * P("X1"), 3, 0).found);
  CHECK(contains(u, commutator(P(kOmega4), P("X2")), 4, 2).found);
  CHECK_FALSE(contains(u, P("X1"), 4, 2).found);
}

TEST_CASE("membership certificates re-multiply exactly") {
  RelationSet u = uz();
  NcPoly f = commutator(P(kOmega4), P("X1"));
  Membership m = contains(u, f, 4, 0, true);
  REQUIRE(m.found);
  CHECK(expand_certificate(u, m.certificate) == f);
}

TEST_CASE("graded dimensions") {
  RelationSet skew = rels_of({"q^(-1/2)*X1*X2 - q^(1/2)*X2*X1", "q^(-1/2)*X2*X3 - q^(1/2)*X3*X2",
                              "q^(-1/2)*X3*X1 - q^(1/2)*X1*X3"});
  CHECK(graded_dims(skew, 6) == V({1, 3, 6, 10, 15, 21, 28}));
  RelationSet free{X, {}, {}};
  CHECK(graded_dims(free, 4) == V({1, 3, 9, 27, 81}));
  // Sklyanin algebra at a rational point.
  RelationSet skl = rels_of({"2*X2*X3 + 3*X3*X2 + 5*X1^2", "2*X3*X1 + 3*X1*X3 + 5*X2^2",
                             "2*X1*X2 + 3*X2*X1 + 5*X3^2"});
  CHECK(graded_dims(skl, 6) == V({1, 3, 6, 10, 15, 21, 28}));
  CHECK_THROWS_AS(graded_dims(uz(), 3), Error);
}

TEST_CASE("filtered dimensions") {
  CHECK(filtered_dims(RelationSet{X, {}, {}}, 3) == V({1, 3, 9, 27}));
  RelationSet u = uz().specialized({{"q", Scalar(4)}, {"e1", Scalar(1)}, {"e2", Scalar(1)},
                                    {"e3", Scalar(1)}, {"Om1", Scalar(2)}, {"Om2", Scalar(-3)},
                                    {"Om3", Scalar(5)}});
  CHECK(filtered_dims(u, 4, 2) == V({1, 3, 6, 10, 15}));
  RewriteSystem rs = orient(u, MonomialOrder::descending(3));
  auto fd = filtered_dims(u, 4, 1);
  for (int k = 0; k <= 4; ++k) CHECK(fd[k] == normal_words(rs, k).size());
}

TEST_CASE("column cap") {
  CHECK_THROWS_AS(IdealSpan(uz(), 6, 2), Error);
}

TEST_CASE("central_by_ideal") {
  auto rep = central_by_ideal(uz(), P(kOmega4), 4, 2, 3, 1);
  CHECK(rep.central);
  CHECK(rep.verdict == "central (generic, 3 witnesses)");
  CHECK(rep.trials.size() == 3);
  auto neg = central_by_ideal(uz(), P("X3*X2*X1"), 4, 2, 2, 1);
  CHECK_FALSE(neg.central);
}

TEST_CASE("find_potential recovers the UZ potential") {
  auto res = find_potential(uz());
  REQUIRE(res);
  NcPoly phi = P("X1*X2*X3 - q*X2*X1*X3 + (q^2-1)/(2*q^(1/2))*(e1*X1^2 + e2*X2^2 + e3*X3^2)"
                 " + (1-q)*(Om1*X1 + Om2*X2 + Om3*X3)");
  CHECK(proportional(cyclic_reduce(phi).as_poly(), res->phi.as_poly()));
}
