#include <doctest.h>

#include "sparsefac/field.hpp"

using namespace sparsefac;

TEST_CASE("prime field construction and arithmetic") {
  const Field f7 = Field::make(7);
  CHECK(f7.order() == 7);
  CHECK(f7.add(Elem{3}, Elem{5}) == Elem{1});
  CHECK(f7.mul(Elem{3}, Elem{5}) == Elem{1});
  CHECK(f7.inv(Elem{3}) == Elem{5});
  CHECK(f7.inv(Elem{1}) == Elem{1});
  CHECK_THROWS_AS(f7.inv(Elem{0}), DivByZero);
  CHECK(f7.from_int(-1) == Elem{6});
  CHECK(f7.name() == "F_7");
}

TEST_CASE("composite characteristic is rejected") {
  CHECK_THROWS_AS(Field::make(4), NotPrime);
  CHECK_THROWS_AS(Field::make(1), NotPrime);
  CHECK_THROWS_AS(Field::make(2, 17), Error);
}

TEST_CASE("F_8 uses z^3 + z + 1") {
  const Field f8 = Field::make(2, 3);
  CHECK(f8.modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  const Elem z{2}, z2{4};
  // z * z^2 = z^3 = z + 1, code 1 + 2 = 3
  CHECK(f8.mul(z, z2) == Elem{3});
  CHECK(f8.format(z) == "[0,1,0]");
  CHECK(f8.name() == "F_2^3");
}

TEST_CASE("moduli are the lexicographically smallest irreducibles") {
  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::make(2, 4).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  CHECK(Field::make(7, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
}

TEST_CASE("inverse property exhaustively for q <= 64") {
  for (auto [p, l] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {2, 3},
                                                       {3, 2}, {2, 4}, {5, 2}, {2, 5}, {7, 2}, {2, 6},
                                                       {3, 3}, {61, 1}}) {
    const Field f = Field::make(p, l);
    for (std::uint32_t a = 1; a < f.order(); ++a) CHECK(f.mul(Elem{a}, f.inv(Elem{a})) == f.one());
  }
}

TEST_CASE("field axioms exhaustively for q <= 16") {
  for (auto [p, l] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2},
                                                       {2, 3}, {3, 2}, {2, 4}, {13, 1}}) {
    const Field f = Field::make(p, l);
    const std::uint32_t q = f.order();
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a)
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        const Elem A{a}, B{b};
        ok = ok && f.add(A, B) == f.add(B, A) && f.mul(A, B) == f.mul(B, A);
        ok = ok && f.sub(f.add(A, B), B) == A;
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          const Elem C{c};
          ok = ok && f.add(f.add(A, B), C) == f.add(A, f.add(B, C));
          ok = ok && f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C));
          ok = ok && f.mul(A, f.add(B, C)) == f.add(f.mul(A, B), f.mul(A, C));
        }
      }
    CHECK_MESSAGE(ok, f.name());
  }
}

TEST_CASE("frobenius and pth roots are inverse") {
  const Field f = Field::make(3, 3);
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    CHECK(f.frobenius(f.pth_root(Elem{a})) == Elem{a});
  }
}

TEST_CASE("bound elements check their context") {
  const Field f5 = Field::make(5), f7 = Field::make(7);
  const FieldElem a(f7, Elem{3}), b(f7, Elem{5}), c(f5, Elem{1});
  CHECK((a + b).value() == Elem{1});
  CHECK((a * b).value() == Elem{1});
  CHECK((a - b).value() == Elem{5});
  CHECK(arith(a, b, ArithKind::mul).value() == Elem{1});
  CHECK(inverse(a).value() == Elem{5});
  CHECK_THROWS_AS(a + c, CtxMismatch);
}

TEST_CASE("subfield embedding round-trips") {
  const Field small = Field::make(2, 2), big = Field::make(2, 4);
  const FieldEmbedding emb(small, big);
  for (std::uint32_t a = 0; a < small.order(); ++a) {
    for (std::uint32_t b = 0; b < small.order(); ++b) {
      CHECK(emb.lift(small.mul(Elem{a}, Elem{b})) == big.mul(emb.lift(Elem{a}), emb.lift(Elem{b})));
      CHECK(emb.lift(small.add(Elem{a}, Elem{b})) == big.add(emb.lift(Elem{a}), emb.lift(Elem{b})));
    }
    Elem back;
    CHECK(emb.descend(emb.lift(Elem{a}), back));
    CHECK(back == Elem{a});
  }
  int inside = 0;
  for (std::uint32_t a = 0; a < big.order(); ++a) {
    Elem out;
    inside += emb.descend(Elem{a}, out) ? 1 : 0;
  }
  CHECK(inside == 4);
}
