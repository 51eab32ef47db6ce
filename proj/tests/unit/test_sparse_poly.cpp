#include <doctest.h>

#include "helpers.hpp"

using namespace sparsefac;
using namespace testutil;

TEST_CASE("combine examples") {
  const Field f7 = Field::make(7);
  CHECK(combine(X(f7, "x1+1"), X(f7, "x1+6"), CombineKind::mul) == X(f7, "x1^2+6"));
  CHECK(combine(X(f7, "x1+1"), X(f7, "6*x1+6"), CombineKind::add).is_zero());
  const Field f5 = Field::make(5);
  CHECK(X(f5, "x1+x2+x3").pow(5) == X(f5, "x1^5+x2^5+x3^5"));
  CHECK_THROWS_AS(X(f7, "x1") * X(f7, "x2"), ShapeMismatch);
  CHECK_THROWS_AS(X(f7, "x1") + X(f5, "x1"), CtxMismatch);
}

TEST_CASE("evaluate examples") {
  const Field f7 = Field::make(7);
  const std::vector<Elem> pt{Elem{2}, Elem{3}};
  CHECK(evaluate(X(f7, "x1^2*x2+1"), pt) == Elem{6});
  const std::vector<std::size_t> v1{1};
  const std::vector<Elem> zero{Elem{0}}, one{Elem{1}};
  CHECK(evaluate_partial(X(f7, "x1*x2"), v1, zero).is_zero());
  CHECK(evaluate_partial(Y(f7, "y^2-x1"), v1, one) == X(f7, "x1^2+6"));
  CHECK_THROWS_AS(evaluate(X(f7, "x1"), pt), ShapeMismatch);
}

TEST_CASE("restrict_to_line examples") {
  const Field f7 = Field::make(7);
  const std::vector<Elem> a{Elem{1}, Elem{1}}, b{Elem{2}, Elem{3}};
  // x1*x2 without y: lift to (y, x1, x2).
  const SparsePoly f = Y(f7, "x1*x2", 3);
  CHECK(restrict_to_line(f, a, b) == Y(f7, "2*x1^2+3*x1+1", 2));
  const std::vector<Elem> a1{Elem{0}}, b1{Elem{1}};
  CHECK(restrict_to_line(Y(f7, "y-x1"), a1, b1) == Y(f7, "y-x1"));
  const SparsePoly g = Y(f7, "y^2*x1 + x2^3 + 4");
  const auto r = restrict_to_line(g, a, a);
  CHECK(r.degree_in(1) == 0);
  CHECK_THROWS_AS(restrict_to_line(g, a1, b), ShapeMismatch);
}

TEST_CASE("lead_and_degrees examples") {
  const Field f7 = Field::make(7);
  auto li = lead_and_degrees(X(f7, "x1*x2^2+x2+1"), 1);
  CHECK(li.degree == 2);
  CHECK(li.lc == X(f7, "x1", 2));
  li = lead_and_degrees(Y(f7, "y^3+x1*y"), 0);
  CHECK(li.degree == 3);
  CHECK(li.lc.is_one());
  li = lead_and_degrees(X(f7, "5", 1), 0);
  CHECK(li.degree == 0);
  CHECK(li.lc == X(f7, "5", 1));
  CHECK_THROWS_AS(lead_and_degrees(SparsePoly(f7, 2), 0), ZeroPolynomial);
}

TEST_CASE("make_monic examples") {
  const Field f7 = Field::make(7);
  auto mt = make_monic(X(f7, "x1*x2+1"));
  CHECK(mt.k == 1);
  CHECK(mt.fhat == Y(f7, "y+1", 2));
  CHECK(mt.fk == X(f7, "x1"));
  mt = make_monic(X(f7, "x1*x2^2+x2+x1"));
  CHECK(mt.k == 2);
  CHECK(mt.fhat == Y(f7, "y^2+y+x1^2"));
  mt = make_monic(X(f7, "x2^2+x1*x2+3"));
  CHECK(mt.fhat == Y(f7, "y^2+x1*y+3"));
  CHECK(mt.fk.is_one());
  CHECK_THROWS_AS(make_monic(X(f7, "x1+1", 2)), ZeroDegree);
}

TEST_CASE("sparse_divide examples") {
  const Field f7 = Field::make(7);
  auto q = sparse_divide(X(f7, "x1^2+6"), X(f7, "x1+6"), 2);
  REQUIRE(q);
  CHECK(*q == X(f7, "x1+1"));
  CHECK_FALSE(sparse_divide(X(f7, "x1", 2), X(f7, "x2"), 5));
  CHECK_FALSE(sparse_divide(X(f7, "x1^2+2*x1+1"), X(f7, "x1+1"), 1));
  CHECK(sparse_divide(X(f7, "x1^2+2*x1+1"), X(f7, "x1+1"), 2));
}

TEST_CASE("phi_score examples") {
  const std::vector<unsigned> a{2}, b{1, 1}, c{1}, e{};
  CHECK(phi_score(a) == 3);
  CHECK(phi_score(b) == 2);
  CHECK(phi_score(c) == 1);
  CHECK_THROWS_AS(phi_score(e), EmptyVector);
}

TEST_CASE("text format round trip") {
  const Field f7 = Field::make(7);
  const auto p = parse_polynomial("3*x1^2*x2 - x2 + 9", f7);
  CHECK(p.poly.nvars() == 2);
  CHECK(format_polynomial(p.poly) == "3*x1^2*x2 + 6*x2 + 2");
  const auto q = parse_polynomial("y^2 + x1*y - 1", f7);
  CHECK(q.style == VarStyle::y_first);
  CHECK(format_polynomial(q.poly, VarStyle::y_first) == "y^2 + y*x1 + 6");
  const Field f9 = Field::make(3, 2);
  const auto r = parse_polynomial("[1,2]*x1 + [0,1]", f9);
  CHECK(format_polynomial(r.poly) == "[1,2]*x1 + [0,1]");
  CHECK_THROWS_AS(parse_polynomial("", f7), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0", f7), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +", f7), ParseError);
  CHECK_THROWS_AS(parse_polynomial("[1,2,3]", f9), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 $ x1", f7), ParseError);
  CHECK(parse_polynomial("0", f7).poly.is_zero());
}

TEST_CASE("multiplication properties") {
  std::mt19937_64 rng(7);
  const Field f = Field::make(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const auto a = random_sparse(f, n, 1 + rng() % 6, 3, rng);
    const auto b = random_sparse(f, n, 1 + rng() % 6, 3, rng);
    const auto c = random_sparse(f, n, 1 + rng() % 6, 3, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).sparsity() <= a.sparsity() * b.sparsity());
    for (std::size_t i = 0; i < n; ++i) {
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(lead_and_degrees(a * b, i).lc == lead_and_degrees(a, i).lc * lead_and_degrees(b, i).lc);
    }
  }
}

TEST_CASE("line restriction commutes with multiplication") {
  std::mt19937_64 rng(8);
  const Field f = Field::make(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const auto g = random_sparse(f, n, 1 + rng() % 5, 2, rng);
    const auto h = random_sparse(f, n, 1 + rng() % 5, 2, rng);
    const auto a = random_point(f, n - 1, rng), b = random_point(f, n - 1, rng);
    CHECK(restrict_to_line(g * h, a, b) == restrict_to_line(g, a, b) * restrict_to_line(h, a, b));
    // endpoints
    const auto r = restrict_to_line(g, a, b);
    std::vector<std::size_t> tv{1};
    std::vector<Elem> t0{Elem{0}}, t1{Elem{1}};
    std::vector<std::size_t> xs;
    for (std::size_t i = 1; i < n; ++i) xs.push_back(i);
    CHECK(evaluate_partial(r, tv, t0) == evaluate_partial(g, xs, a));
    CHECK(evaluate_partial(r, tv, t1) == evaluate_partial(g, xs, b));
  }
}

TEST_CASE("make_monic bounds and sparse_divide inverse") {
  std::mt19937_64 rng(9);
  const Field f = Field::make(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    auto g = random_sparse(f, n, 1 + rng() % 8, 3, rng);
    if (!g.depends_on(n - 1)) g = g + X(f, "x" + std::to_string(n), n);
    const auto mt = make_monic(g);
    const unsigned d = g.individual_degree();
    double bound = 1;
    for (unsigned i = 0; i < d; ++i) bound *= static_cast<double>(g.sparsity());
    CHECK(static_cast<double>(mt.fhat.sparsity()) <= bound);
    CHECK(mt.fhat.individual_degree() <= d * d);
    CHECK(lead_and_degrees(mt.fhat, 0).lc.is_one());

    const auto a = random_sparse(f, n, 1 + rng() % 5, 2, rng);
    const auto b = random_sparse(f, n, 1 + rng() % 5, 2, rng);
    if (a.is_zero() || b.is_zero()) continue;
    auto q = sparse_divide(a * b, b, a.sparsity());
    REQUIRE(q);
    CHECK(*q == a);
  }
}
