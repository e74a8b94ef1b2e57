#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "skewsign/dominoes.hpp"
#include "skewsign/polynomial.hpp"
#include "skewsign/skew_shape.hpp"

namespace skewsign {

// Domino tiling with a positive entry per domino. Between cells of distinct
// dominoes, entries weakly increase along rows and strictly increase down
// columns. entries[i] belongs to dominoes[i].
struct SemistandardDominoTableau {
  SkewShape shape;
  std::vector<Domino> dominoes;
  std::vector<int> entries;
};

// Visits every semistandard domino tableau with entries <= max_entry, in a
// fixed deterministic order. max_entry 0 admits only the empty shape.
void for_each_ssdt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardDominoTableau&)>& fn);
std::vector<SemistandardDominoTableau> enumerate_ssdt(const SkewShape& shape, int max_entry);

enum class VariableAxis { x, y };

// Spin-weight generating function of the shape: the sum over semistandard
// domino tableaux of s^(vertical count) times the product of one variable per
// domino entry. Variables come from the chosen axis; entries run up to that
// axis' variable count. Every term is homogeneous of degree size(shape)/2 in
// the chosen axis.
TruncatedPolynomial g_polynomial(const SkewShape& shape, VariableAxis axis, int num_x, int num_y,
                                 int cap_x, int cap_y);

// Truncated expansion of prod_{i,j} 1 / ((1 - x_i y_j) (1 - s^2 x_i y_j)).
TruncatedPolynomial kernel_expansion(int num_x, int num_y, int cap_x, int cap_y);

struct CauchyDifference {
  Monomial monomial;
  Coeff lhs_coeff;
  Coeff rhs_coeff;
};

struct CauchyReport {
  Partition alpha;
  Partition beta;
  int num_x = 0;
  int num_y = 0;
  int max_dominoes = 0;
  TruncatedPolynomial lhs;
  TruncatedPolynomial rhs;
  bool equal = false;
  std::optional<CauchyDifference> first_difference;
};

// Checks, with degree caps max_dominoes on each axis, that
//   sum_lambda G_{lambda/alpha}(X) G_{lambda/beta}(Y)
// equals the kernel expansion times
//   sum_mu G_{alpha/mu}(X) G_{beta/mu}(Y).
CauchyReport verify_cauchy(const Partition& alpha, const Partition& beta, int num_x, int num_y,
                           int max_dominoes);

// Coefficient of x_1 x_2 ... x_k in the generating function (k = domino
// count), as a polynomial in s, evaluated at s = i. Tableaux with squarefree
// weight are exactly the standard ones, so this matches spin_sum.
GaussianInt squarefree_spin_value(const SkewShape& shape);

}  // namespace skewsign
