#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace skewsign {

using Coeff = boost::multiprecision::cpp_int;

// Exponent triple for fixed x/y variable counts. s is the half-spin marker
// with s*s = q, so half-integral spin exponents stay integral.
struct Monomial {
  std::vector<int> x;
  std::vector<int> y;
  int s = 0;

  int x_degree() const;
  int y_degree() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded order: total x+y degree first, then the x and y exponent vectors
// lexicographically, then the s exponent.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial over Z in the x-, y-, and s-variables, truncated so that
// no stored term exceeds the total x-degree or total y-degree cap. Exponents
// are non-negative, so the dropped terms form an ideal and truncation commutes
// with addition and multiplication.
class TruncatedPolynomial {
 public:
  TruncatedPolynomial(int num_x, int num_y, int cap_x, int cap_y);

  static TruncatedPolynomial constant(int num_x, int num_y, int cap_x, int cap_y,
                                      const Coeff& value);

  int num_x() const { return num_x_; }
  int num_y() const { return num_y_; }
  int cap_x() const { return cap_x_; }
  int cap_y() const { return cap_y_; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Coeff, MonomialOrder>& terms() const { return terms_; }

  // Zero when the monomial is absent (or over the caps).
  Coeff coefficient(const Monomial& m) const;

  // Accumulates c onto the monomial; silently drops over-cap terms and erases
  // terms whose coefficient cancels to zero.
  void add_term(const Monomial& m, const Coeff& c);

  // All-zero exponent vectors sized for this ring.
  Monomial unit_monomial() const;

  // Same terms with the roles of the x- and y-variables exchanged.
  TruncatedPolynomial with_axes_swapped() const;

  friend TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  friend TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

  // Throws CapMismatch when compared across different rings.
  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

 private:
  void require_same_ring(const TruncatedPolynomial& other) const;
  void require_arity(const Monomial& m) const;

  int num_x_;
  int num_y_;
  int cap_x_;
  int cap_y_;
  std::map<Monomial, Coeff, MonomialOrder> terms_;
};

}  // namespace skewsign
