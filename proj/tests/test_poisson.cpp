#include <random>

#include "doctest.h"
#include "ncalg/error.hpp"
#include "ncalg/poisson.hpp"

using namespace ncalg;

namespace {

const std::vector<std::string> X{"x1", "x2", "x3"};
const std::vector<std::string> Y{"y1", "y2", "y3"};

CommPoly P(const std::string& s, const std::vector<std::string>& v = X) {
  return CommPoly::parse(v, s);
}

PoissonStructure S(const std::string& s, const std::vector<std::string>& v = X) {
  return {s, P(s, v)};
}

Scalar eps_pow(int num, int den = 1) { return Scalar::var_pow("eps", mpq_class(num, den)); }

const char* kPVI = "x1*x2*x3 - x1^2 - x2^2 - x3^2 + w1*x1 + w2*x2 + w3*x3 + w4";

CommPoly random_poly(std::mt19937_64& rng, int maxdeg) {
  std::uniform_int_distribution<int> n(1, 5), c(-4, 4), e(0, maxdeg);
  CommPoly f(X);
  for (int i = n(rng); i > 0; --i) f.add_term({e(rng), e(rng), e(rng)}, Scalar(long(c(rng))));
  return f;
}

}  // namespace

TEST_CASE("CommPoly arithmetic and parsing") {
  CommPoly f = P("(x1 + x2)^2 - 2*x1*x2");
  CHECK(f == P("x1^2 + x2^2"));
  CHECK(f.degree() == 2);
  CHECK(P("a*x1/2").coeff({1, 0, 0}) == Scalar::var("a") / Scalar(2));
  CHECK(P("x1^3*x3").derivative(0) == P("3*x1^2*x3"));
  CHECK(P("0").is_zero());
  CHECK_THROWS_AS(P("x1^(1/2)"), Error);
  CHECK_THROWS_AS(P("1/x1"), Error);
  CHECK(P("x1*x2 - 2*x3").str() == "x1*x2 - 2*x3");
}

TEST_CASE("nambu brackets of coordinates") {
  PoissonStructure pvi = S(kPVI);
  CHECK(nambu(pvi, P("x1"), P("x2")) == P("x1*x2 - 2*x3 + w3"));
  CHECK(nambu(pvi, P("x2"), P("x3")) == P("x2*x3 - 2*x1 + w1"));
  CHECK(nambu(pvi, P("x3"), P("x1")) == P("x3*x1 - 2*x2 + w2"));
  PoissonStructure hesse = S("(x1^3 + x2^3 + x3^3)/3 + tau*x1*x2*x3");
  CHECK(nambu(hesse, P("x1"), P("x2")) == P("x3^2 + tau*x1*x2"));
  CHECK(nambu_table(hesse) == bracket_table(X, "x3^2 + tau*x1*x2", "x1^2 + tau*x2*x3",
                                            "x2^2 + tau*x3*x1"));
  PoissonStructure two{"2d", CommPoly::parse({"a", "b"}, "a*b")};
  CHECK_THROWS_AS(nambu(two, two.phi, two.phi), Error);
}

TEST_CASE("nambu is antisymmetric, Leibniz, and phi is Casimir (random)") {
  std::mt19937_64 rng(5);
  PoissonStructure pvi = S(kPVI);
  for (int i = 0; i < 20; ++i) {
    CommPoly f = random_poly(rng, 2), g = random_poly(rng, 2), h = random_poly(rng, 2);
    CHECK(nambu(pvi, f, f).is_zero());
    CHECK(nambu(pvi, f, g) == -nambu(pvi, g, f));
    CHECK(nambu(pvi, f * g, h) == f * nambu(pvi, g, h) + g * nambu(pvi, f, h));
    CHECK(nambu(pvi, pvi.phi, f).is_zero());
    CHECK(nambu_table(pvi).bracket(f, g) == nambu(pvi, f, g));
  }
}

TEST_CASE("poisson_checks") {
  for (const char* s : {kPVI, "x1", "x1*x2*x3 - x3^2", "x1^5 + x1*x2*x3 + a*x2^2 + x3^2 + w"}) {
    CAPTURE(s);
    PoissonReport r = poisson_checks(S(s));
    CHECK(r.pass);
    CHECK(r.checks.size() == 7);
  }
  // A non-Jacobian quadratic table violating Jacobi.
  BracketTable bad = bracket_table(X, "x1*x2", "x3^2", "0");
  CHECK_FALSE(bracket_checks(bad).pass);
  // Cluster table, with Casimir x1x2x3.
  BracketTable cl = bracket_table(X, "x1*x2", "x2*x3", "x3*x1");
  CHECK(bracket_checks(cl).pass);
  CommPoly m = P("x1*x2*x3");
  CHECK(bracket_checks(cl, &m).pass);
}

TEST_CASE("scale_limit: Hesse cubic") {
  PoissonStructure hesse = S("(x1^3 + x2^3 + x3^3)/3 + tau*x1*x2*x3");
  CommRescaling r;
  r.factor = {eps_pow(1), Scalar(1), eps_pow(1)};
  r.params = {{"tau", eps_pow(-2)}};
  r.new_vars = Y;
  PoissonStructure lim = scale_limit(hesse, r);
  CHECK(lim.phi == P("y2^3/3 + y1*y2*y3", Y));
  CHECK(poisson_checks(lim).pass);
  BracketTable t = scale_limit(nambu_table(hesse), r);
  CHECK(t == bracket_table(Y, "y1*y2", "y2*y3", "y2^2 + y3*y1"));
  CHECK(t == nambu_table(lim));
  // Without the eps^2 rescaling of tau the brackets diverge.
  CommRescaling bad = r;
  bad.params = {{"tau", eps_pow(-3)}};
  CHECK_THROWS_AS(scale_limit(hesse, bad), Error);
}

TEST_CASE("scale_limit: weighted cubics to the vertex potentials") {
  // x1 = 3^(1/3) y1, x2 = -eps y2 / (2^(1/2) 3^(1/3)), x3 = 2^(1/2) y3, tau2 = 1/eps.
  PoissonStructure p213 = S("tau2*x1*x2*x3 + x1^3/3 + x2^6/6 + x3^2/2");
  CommRescaling r;
  Scalar c3 = Scalar::var_pow("r3", mpq_class(1, 3)), c2 = Scalar::var_pow("r2", mpq_class(1, 2));
  r.factor = {c3, -eps_pow(1) / (c2 * c3), c2};
  r.params = {{"tau2", eps_pow(-1)}};
  r.finally = {{"r2", Scalar(2)}, {"r3", Scalar(3)}};
  r.new_vars = Y;
  PoissonStructure v1 = scale_limit(p213, r);
  CHECK(v1.phi == P("y1^3 + y3^2 - y1*y2*y3", Y));
  BracketTable t = scale_limit(nambu_table(p213), r);
  CHECK(t == bracket_table(Y, "2*y3 - y1*y2", "3*y1^2 - y3*y2", "-y1*y3"));

  PoissonStructure p112 = S("tau1*x1*x2*x3 + x1^4/4 + x2^4/4 + x3^2/2");
  CommRescaling s;
  Scalar c4 = Scalar::var_pow("r2", mpq_class(1, 4));
  s.factor = {-eps_pow(1, 2) / c4, eps_pow(1, 2) / c4, c2};
  s.params = {{"tau1", eps_pow(-1)}};
  s.finally = {{"r2", Scalar(2)}};
  s.new_vars = Y;
  CHECK(scale_limit(p112, s).phi == P("y3^2 - y1*y2*y3", Y));
  CHECK(scale_limit(nambu_table(p112), s) == bracket_table(Y, "2*y3 - y1*y2", "-y3*y2", "-y1*y3"));
}

TEST_CASE("scale_limit: infinite mass limits of the perturbed Sklyanin cubic") {
  PoissonStructure p = S("x1*x2*x3 - m1*x1^2 - (x1^3 + x2^3 + x3^3)/m1^3");
  CommRescaling a;
  a.factor = {eps_pow(1, 2), eps_pow(1, 2), eps_pow(-1)};
  a.params = {{"m1", eps_pow(-1)}};
  a.new_vars = Y;
  CHECK(scale_limit(p, a).phi == P("y1*y2*y3 - y1^2 - y3^3", Y));
  CHECK(scale_limit(nambu_table(p), a) ==
        bracket_table(Y, "-3*y3^2 + y1*y2", "-2*y1 + y2*y3", "y3*y1"));
  CommRescaling b;
  b.factor = {eps_pow(1, 2), Scalar(1), eps_pow(-1, 2)};
  b.params = {{"m1", eps_pow(-1)}};
  b.new_vars = Y;
  CHECK(scale_limit(p, b).phi == P("y1*y2*y3 - y1^2", Y));
  CHECK(scale_limit(nambu_table(p), b) == bracket_table(Y, "y1*y2", "-2*y1 + y2*y3", "y3*y1"));
}

TEST_CASE("scale_limit commutes with taking Nambu brackets (random)") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 2);
  for (int i = 0; i < 15; ++i) {
    PoissonStructure p{"r", random_poly(rng, 3)};
    CommRescaling r;
    for (int k = 0; k < 3; ++k) r.factor.push_back(eps_pow(e(rng)));
    PoissonStructure l = scale_limit(p, r);
    try {
      CHECK(scale_limit(nambu_table(p), r) == nambu_table(l));
    } catch (const Error& err) {
      // A divergent bracket with a finite potential is possible only when the
      // limited potential loses the leading behaviour; never the reverse.
      CHECK(err.kind() == ErrorKind::DivergentLimit);
    }
  }
}

TEST_CASE("classical_limit of the PVI presentation") {
  Alphabet g = default_alphabet();
  RelationSet rels{g,
                   {NcPoly::parse(g, "q^(-1/2)*X1*X2 - q^(1/2)*X2*X1 - (q^(-1) - q)*X3 + "
                                     "(q^(-1/2) - q^(1/2))*Om3"),
                    NcPoly::parse(g, "q^(-1/2)*X2*X3 - q^(1/2)*X3*X2 - (q^(-1) - q)*X1 + "
                                     "(q^(-1/2) - q^(1/2))*Om1"),
                    NcPoly::parse(g, "q^(-1/2)*X3*X1 - q^(1/2)*X1*X3 - (q^(-1) - q)*X2 + "
                                     "(q^(-1/2) - q^(1/2))*Om2")},
                   {}};
  RewriteSystem rs = orient(rels, MonomialOrder::descending(3));
  BracketTable t = classical_limit(rs, X);
  PoissonStructure pvi =
      S("x1*x2*x3 - x1^2 - x2^2 - x3^2 + Om1*x1 + Om2*x2 + Om3*x3 + w4");
  CHECK(sign_relation(t, nambu_table(pvi)) == 1);
}

TEST_CASE("classical_limit of the skew polynomial ring is the cluster table") {
  Alphabet g = default_alphabet();
  RelationSet rels{g,
                   {NcPoly::parse(g, "X1*X2 - q*X2*X1"), NcPoly::parse(g, "X2*X3 - q*X3*X2"),
                    NcPoly::parse(g, "X3*X1 - q*X1*X3")},
                   {}};
  RewriteSystem rs = orient(rels, MonomialOrder::descending(3));
  BracketTable t = classical_limit(rs, X);
  CHECK(t == bracket_table(X, "x1*x2", "x2*x3", "x3*x1"));
  CHECK(bracket_checks(t).pass);
  // A constant term without a factor (q-1) has no classical limit.
  RelationSet pole{g,
                   {NcPoly::parse(g, "X1*X2 - q*X2*X1 - 1"), NcPoly::parse(g, "X2*X3 - q*X3*X2"),
                    NcPoly::parse(g, "X3*X1 - q*X1*X3")},
                   {}};
  RewriteSystem rp = orient(pole, MonomialOrder::descending(3));
  CHECK_THROWS_AS(classical_limit(rp, X), Error);
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_t(0) == std::vector<mpz_class>{1});
  CHECK(chebyshev_t(1) == std::vector<mpz_class>{0, 1});
  CHECK(chebyshev_t(3) == std::vector<mpz_class>{0, -3, 0, 4});
  CHECK(chebyshev_t(4) == std::vector<mpz_class>{1, 0, -8, 0, 8});
  // T_m(T_n) = T_mn on integer points.
  auto eval = [](const std::vector<mpz_class>& c, const mpz_class& x) {
    mpz_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
  };
  for (int x = -3; x <= 3; ++x)
    CHECK(eval(chebyshev_t(2), eval(chebyshev_t(3), x)) == eval(chebyshev_t(6), x));
}

TEST_CASE("CommPoly JSON round trip") {
  CommPoly f = P("x1*x2*x3 - q^(1/2)*x1^2 + a/(1 - b)");
  Json j = commpoly_to_json(f);
  CHECK(j["vars"] == Json(X));
  CHECK(commpoly_from_json(Json::parse(j.dump())) == f);
  Json bad = j;
  bad["terms"][0][1] = Json::array({1, 2});
  CHECK_THROWS_AS(commpoly_from_json(bad), Error);
}
