#include <doctest.h>

#include <random>

#include "skewsign/errors.hpp"
#include "skewsign/polynomial.hpp"

using namespace skewsign;

namespace {

// One x and one y variable with caps (2, 2) unless stated otherwise.
TruncatedPolynomial ring() { return TruncatedPolynomial(1, 1, 2, 2); }

Monomial mono(int xe, int ye, int se) {
  Monomial m;
  m.x = {xe};
  m.y = {ye};
  m.s = se;
  return m;
}

TruncatedPolynomial random_poly(std::mt19937& rng) {
  TruncatedPolynomial p(2, 1, 3, 3);
  const int terms = static_cast<int>(rng() % 6u);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    m.x = {static_cast<int>(rng() % 3u), static_cast<int>(rng() % 3u)};
    m.y = {static_cast<int>(rng() % 3u)};
    m.s = static_cast<int>(rng() % 4u);
    p.add_term(m, static_cast<long long>(rng() % 9u) - 4);
  }
  return p;
}

}  // namespace

TEST_CASE("addition identities and cancellation") {
  TruncatedPolynomial a = ring();
  a.add_term(mono(1, 0, 0), 1);  // x1

  const TruncatedPolynomial zero = ring();
  CHECK(a + zero == a);

  TruncatedPolynomial minus = ring();
  minus.add_term(mono(1, 0, 0), -1);
  CHECK((a + minus).is_zero());

  TruncatedPolynomial xy = ring();
  xy.add_term(mono(1, 1, 0), 1);
  TruncatedPolynomial sxy = ring();
  sxy.add_term(mono(1, 1, 2), 1);
  const TruncatedPolynomial sum = xy + sxy;
  CHECK(sum.terms().size() == 2);
  CHECK(sum.coefficient(mono(1, 1, 0)) == 1);
  CHECK(sum.coefficient(mono(1, 1, 2)) == 1);
}

TEST_CASE("multiplication respects units and caps") {
  TruncatedPolynomial a = ring();
  a.add_term(mono(1, 0, 1), 3);
  a.add_term(mono(0, 1, 0), -2);
  const TruncatedPolynomial one = TruncatedPolynomial::constant(1, 1, 2, 2, 1);
  CHECK(a * one == a);

  TruncatedPolynomial x(1, 1, 1, 1);
  x.add_term(mono(1, 0, 0), 1);
  TruncatedPolynomial y(1, 1, 1, 1);
  y.add_term(mono(0, 1, 0), 1);
  const TruncatedPolynomial xy = x * y;
  CHECK(xy.terms().size() == 1);
  CHECK(xy.coefficient(mono(1, 1, 0)) == 1);

  CHECK((x * x).is_zero());  // x-degree 2 exceeds the cap of 1
}

TEST_CASE("ring mismatches are rejected") {
  const TruncatedPolynomial a(1, 1, 2, 2);
  const TruncatedPolynomial b(1, 1, 3, 2);
  const TruncatedPolynomial c(2, 1, 2, 2);
  CHECK_THROWS_AS(a + b, CapMismatch);
  CHECK_THROWS_AS(a * c, CapMismatch);
  CHECK_THROWS_AS((void)(a == b), CapMismatch);

  TruncatedPolynomial d(1, 1, 2, 2);
  Monomial wrong;
  wrong.x = {1, 0};
  wrong.y = {0};
  CHECK_THROWS_AS(d.add_term(wrong, 1), CapMismatch);
}

TEST_CASE("zero coefficients are never stored") {
  TruncatedPolynomial a = ring();
  a.add_term(mono(1, 1, 0), 5);
  a.add_term(mono(1, 1, 0), -5);
  CHECK(a.is_zero());
  a.add_term(mono(0, 0, 0), 0);
  CHECK(a.is_zero());
}

TEST_CASE("axis swap exchanges x and y") {
  TruncatedPolynomial p(2, 1, 3, 2);
  Monomial m;
  m.x = {2, 1};
  m.y = {1};
  m.s = 3;
  p.add_term(m, 7);
  const TruncatedPolynomial q = p.with_axes_swapped();
  CHECK(q.num_x() == 1);
  CHECK(q.num_y() == 2);
  CHECK(q.cap_x() == 2);
  CHECK(q.cap_y() == 3);
  Monomial swapped;
  swapped.x = {1};
  swapped.y = {2, 1};
  swapped.s = 3;
  CHECK(q.coefficient(swapped) == 7);
  CHECK(q.with_axes_swapped() == p);
}

TEST_CASE("ring laws hold under truncation") {
  std::mt19937 rng(99u);
  for (int trial = 0; trial < 200; ++trial) {
    const TruncatedPolynomial a = random_poly(rng);
    const TruncatedPolynomial b = random_poly(rng);
    const TruncatedPolynomial c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == TruncatedPolynomial(2, 1, 3, 3));
  }
}
