#include <doctest.h>

#include "truthlab/nat.hpp"
#include "truthlab/rng.hpp"

using namespace truthlab;

TEST_CASE("small arithmetic agrees with the hardware") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    uint64_t a = rng.next() >> 34, b = (rng.next() >> 34) + 1;
    CHECK(Nat{a} + Nat{b} == Nat{a + b});
    CHECK(Nat{a} * Nat{b} == Nat{a * b});
    CHECK(Nat{a} / Nat{b} == Nat{a / b});
    CHECK(Nat{a} % Nat{b} == Nat{a % b});
    if (a >= b) CHECK(Nat{a} - Nat{b} == Nat{a - b});
  }
}

TEST_CASE("divmod identity on large operands") {
  Rng rng(12);
  for (int i = 0; i < 300; ++i) {
    Nat a{rng.next()}, b{rng.next() | 1};
    for (int k = 0; k < 6; ++k) a = a * Nat{rng.next()} + Nat{rng.next()};
    for (int k = 0; k < 3; ++k) b = b * Nat{rng.next()} + Nat{rng.next() | 1};
    Nat q, r;
    Nat::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r < b);
  }
}

TEST_CASE("isqrt brackets the square root") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Nat z{rng.next()};
    for (int k = 0; k < i % 7; ++k) z = z * Nat{rng.next() | 1} + Nat{3};
    Nat s = isqrt(z);
    CHECK(s * s <= z);
    CHECK((s + Nat{1}) * (s + Nat{1}) > z);
  }
  CHECK(isqrt(Nat{0}) == Nat{0});
  CHECK(isqrt(Nat{1}) == Nat{1});
  CHECK(isqrt(Nat{99}) == Nat{9});
}

TEST_CASE("pairing is a bijection") {
  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    Nat x{rng.next() >> 40}, y{rng.next() >> 40};
    auto [bx, by] = cantor_unpair(cantor_pair(x, y));
    CHECK(bx == x);
    CHECK(by == y);
  }
  // unpair is total as well: every natural is a pair
  for (uint64_t z = 0; z < 200; ++z) {
    auto [x, y] = cantor_unpair(Nat{z});
    CHECK(cantor_pair(x, y) == Nat{z});
  }
}

TEST_CASE("decimal io roundtrip") {
  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    Nat v{rng.next()};
    for (int k = 0; k < i % 5; ++k) v = v * Nat{rng.next()} + Nat{7};
    CHECK(Nat::from_decimal(v.to_decimal()) == v);
  }
  CHECK(Nat{}.to_decimal() == "0");
  CHECK(Nat::from_decimal("18446744073709551616") ==
        (Nat{1} << 64));  // one past uint64
}

TEST_CASE("shifts") {
  Nat v = Nat::from_decimal("123456789123456789123456789");
  CHECK(((v << 95) >> 95) == v);
  CHECK((v >> 200).is_zero());
}
