#include <random>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "g3/field.hpp"

using namespace g3;

namespace {

// Independent multiply: schoolbook carry-less product reduced by long
// division, sharing no code with Field::mul.
Fe slow_mul(int n, Fe mod, Fe a, Fe b) {
  std::uint64_t acc = 0;
  for (int i = 0; i < n; ++i)
    if ((b >> i) & 1) acc ^= static_cast<std::uint64_t>(a) << i;
  for (int d = 2 * n - 2; d >= n; --d)
    if ((acc >> d) & 1) acc ^= static_cast<std::uint64_t>(mod) << (d - n);
  return static_cast<Fe>(acc);
}

}  // namespace

TEST_CASE("default moduli") {
  CHECK(default_modulus(1) == 0b10);  // x: GF(2) itself
  CHECK(default_modulus(2) == 0b111);
  CHECK(default_modulus(3) == 0b1011);  // x^3 + x + 1, smallest by trial division
  CHECK(default_modulus(4) == 0b10011);

  const Field f1(1);
  CHECK(f1.order() == 2);
  CHECK(f1.r0() == 1);

  const Field f3(3);
  CHECK(f3.order() == 8);
  CHECK(f3.modulus() == 0b1011);
  CHECK(f3.r0() == 1);
}

TEST_CASE("reducible modulus is rejected with a witness factor") {
  // x^3 + x^2 + x + 1 = (x+1)(x^2+1)
  CHECK(reducibility_witness(0b1111).value() == 0b11);
  CHECK_THROWS_WITH_AS(Field(3, 0b1111),
                       "modulus f is reducible: divisible by 3", std::invalid_argument);
  CHECK_THROWS_AS(Field(3, 0b10011), std::invalid_argument);  // degree 4, not 3
  CHECK_THROWS_AS(Field(0), std::invalid_argument);
  CHECK_THROWS_AS(Field(31), std::invalid_argument);
}

TEST_CASE("GF(8) arithmetic against hand values") {
  const Field k(3);
  const Fe x = 0b010, x2 = 0b100;
  CHECK(k.mul(x, x2) == 0b011);  // x^3 = x + 1 mod x^3+x+1
  CHECK(k.sqrt(x) == 0b110);     // x^4 = x^2 + x
  CHECK(k.sqrt(1) == 1);
  CHECK(k.trace(x) == 0);
  CHECK(k.in_as(x));
  CHECK(k.trace(1) == 1);  // n odd
}

TEST_CASE("field axioms: exhaustive for n <= 4, random triples beyond") {
  for (int n : {1, 2, 3, 4}) {
    const Field k(n);
    const Fe q = static_cast<Fe>(k.order());
    for (Fe a = 0; a < q; ++a)
      for (Fe b = 0; b < q; ++b) {
        CHECK(k.add(a, b) == k.add(b, a));
        CHECK(k.mul(a, b) == k.mul(b, a));
        CHECK(k.add(a, a) == 0);
        for (Fe c = 0; c < q; ++c) {
          CHECK(k.mul(a, k.mul(b, c)) == k.mul(k.mul(a, b), c));
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        }
      }
    for (Fe a = 1; a < q; ++a) CHECK(k.mul(a, k.inv(a)) == 1);
  }
  for (int n : {7, 11, 18}) {
    const Field k(n);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
      const Fe a = static_cast<Fe>(rng() % k.order());
      const Fe b = static_cast<Fe>(rng() % k.order());
      const Fe c = static_cast<Fe>(rng() % k.order());
      CHECK(k.mul(a, k.mul(b, c)) == k.mul(k.mul(a, b), c));
      CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
      if (a != 0) CHECK(k.mul(a, k.inv(a)) == 1);
    }
  }
}

TEST_CASE("multiplication agrees with an independent schoolbook oracle") {
  for (int n : {2, 3, 8, 13, 20}) {
    const Field k(n);
    std::mt19937_64 rng(11 + n);
    for (int i = 0; i < 2000; ++i) {
      const Fe a = static_cast<Fe>(rng() % k.order());
      const Fe b = static_cast<Fe>(rng() % k.order());
      CHECK(k.mul(a, b) == slow_mul(n, k.modulus(), a, b));
    }
  }
}

TEST_CASE("frobenius is a field automorphism with order n") {
  for (int n : {3, 4, 6}) {
    const Field k(n);
    for (Fe a = 0; a < k.order(); ++a) {
      for (Fe b = 0; b < k.order(); ++b) {
        CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
        CHECK(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
      }
      Fe it = a;
      for (int i = 0; i < n; ++i) it = k.frobenius(it);
      CHECK(it == a);
    }
  }
}

TEST_CASE("square and higher roots invert the power maps") {
  for (int n : {3, 5, 8}) {
    const Field k(n);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
      const Fe a = static_cast<Fe>(rng() % k.order());
      CHECK(k.sqr(k.sqrt(a)) == a);
      CHECK(k.pow(k.root4(a), 4) == a);
      CHECK(k.pow(k.root8(a), 8) == a);
    }
  }
}

TEST_CASE("trace properties") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    const Field k(n);
    CHECK(k.trace(k.r0()) == 1);
    if (n % 2 == 1) CHECK(k.r0() == 1);
    long long zero_count = 0;
    for (Fe a = 0; a < k.order(); ++a) {
      CHECK(k.trace(k.sqr(a)) == k.trace(a));
      if (k.trace(a) == 0) ++zero_count;
      for (Fe b = a; b < k.order(); ++b)
        CHECK(k.trace(a ^ b) == (k.trace(a) ^ k.trace(b)));
    }
    CHECK(zero_count == static_cast<long long>(k.order() / 2));
  }
}

TEST_CASE("solve_as against an exhaustive scan oracle") {
  for (int n : {1, 2, 3, 4, 6, 7}) {
    const Field k(n);
    for (Fe c = 0; c < k.order(); ++c) {
      std::set<Fe> expected;
      for (Fe x = 0; x < k.order(); ++x)
        if ((k.sqr(x) ^ x) == c) expected.insert(x);
      const auto got = k.solve_as(c);
      if (k.trace(c) == 0) {
        REQUIRE(got.has_value());
        CHECK(expected.count(*got) == 1);
        CHECK(expected.count(*got ^ 1) == 1);
        CHECK((k.sqr(*got) ^ *got) == c);
      } else {
        CHECK(!got.has_value());
        CHECK(expected.empty());
      }
    }
  }
}

TEST_CASE("solve_as frozen GF(8) examples") {
  const Field k(3);
  const Fe x = 0b010;
  const Fe c = k.sqr(x) ^ x;  // x^2 + x
  const auto s = k.solve_as(c);
  REQUIRE(s.has_value());
  CHECK((*s == x || *s == (x ^ 1)));
  CHECK(!k.solve_as(1).has_value());  // trace(1) = 1 for n odd
  const auto z = k.solve_as(0);
  REQUIRE(z.has_value());
  CHECK((*z == 0 || *z == 1));
}

TEST_CASE("cubic_roots: degenerate and split cases, Vieta over the scan") {
  const Field k(3);
  CHECK(k.cubic_roots(0, 0) == std::vector<Fe>{0, 0, 0});
  CHECK(k.cubic_roots(1, 0) == std::vector<Fe>{0, 1, 1});  // y(y+1)^2

  int split_count = 0;
  for (Fe f = 0; f < 8; ++f)
    for (Fe g = 1; g < 8; ++g) {
      const auto roots = k.cubic_roots(f, g);
      if (roots.size() != 3) continue;
      ++split_count;
      CHECK((roots[0] ^ roots[1] ^ roots[2]) == 0);
      const Fe e2 = k.mul(roots[0], roots[1]) ^ k.mul(roots[0], roots[2]) ^
                    k.mul(roots[1], roots[2]);
      CHECK(e2 == f);
      CHECK(k.mul(roots[0], k.mul(roots[1], roots[2])) == g);
      CHECK(roots[0] != roots[1]);  // g != 0 forces distinct roots
      CHECK(roots[1] != roots[2]);
    }
  CHECK(split_count == 7);  // the 3-subsets of GF(8)* summing to 0
}

TEST_CASE("inv(0) raises") {
  const Field k(4);
  CHECK_THROWS_AS(k.inv(0), std::domain_error);
}
