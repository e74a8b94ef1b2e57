#pragma once

#include <string>
#include <vector>

#include "skewsign/dominoes.hpp"
#include "skewsign/skew_shape.hpp"

namespace skewsign {

// Comparison of the squared imbalance against the signed square of the spin
// sum, with the intermediate domino sums kept for diagnosis:
//   sum_sign       = sum over standard domino tableaux of sign(D)
//   sum_nv_sign    = sum over the same tableaux of (-1)^(nice vertical count)
//   spin_sum       = sum of i^(vertical count)
// and rhs_value = (-1)^(v_outer + v_inner) * spin_sum^2.
struct PropositionReport {
  SkewShape shape;
  long long imbalance = 0;
  long long imbalance_squared = 0;
  long long rhs_value = 0;
  bool equal = false;

  long long sdt_count = 0;
  long long sum_sign = 0;
  long long sum_nv_sign = 0;
  bool nv_termwise = true;  // sign(D) == (-1)^nv(D) held for every tableau
  GaussianInt spin_sum;
  int v_outer = 0;
  int v_inner = 0;
  int v_prime = 0;  // meaningful only when tileable
  bool tileable = false;
};

// Throws OddSize unless the shape has an even number of cells.
PropositionReport check_proposition(const SkewShape& shape);

struct Theorem1Term {
  Partition partition;
  int v = 0;
  long long imbalance_squared = 0;
};

struct Theorem1Report {
  Partition alpha;
  int n = 0;
  long long lhs = 0;
  long long rhs = 0;
  bool equal = false;
  std::vector<Theorem1Term> lhs_terms;  // lambda running over extensions of alpha
  std::vector<Theorem1Term> rhs_terms;  // mu running over restrictions of alpha
};

// Checks sum over lambda/alpha of n cells of (-1)^v(lambda) I^2 against the
// matching sum over alpha/mu. Throws OddN unless n is even and non-negative.
Theorem1Report verify_theorem1(const Partition& alpha, int n);

struct CheckStats {
  long long checked = 0;
  long long passed = 0;
};

struct SweepFailure {
  std::string check;
  std::string subject;
  std::string detail;
};

struct SweepOptions {
  int max_alpha_size = 0;
  std::vector<int> n_values;
  int max_cells = 0;  // bound on the outer partition size for shape checks
  int jobs = 1;
};

struct SweepReport {
  CheckStats theorem1;
  CheckStats imbalance_square;   // squared-imbalance identity per even shape
  CheckStats domino_sign_sum;    // imbalance equals the domino sign sum
  CheckStats nice_parity_sign;   // sign(D) == (-1)^nv(D) termwise
  CheckStats nv_bv_invariance;   // nv - bv constant over tilings and flips
  CheckStats v_prime_mod2;       // v(outer) + v(inner) == nv - bv mod 2
  CheckStats flip_connectivity;
  std::vector<SweepFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

// Runs verify_theorem1 over every alpha with |alpha| <= max_alpha_size and
// every requested n, and the per-shape checks over every skew shape whose
// outer partition has at most max_cells cells. Tasks are independent; jobs > 1
// fans them out over threads with a deterministic merge.
SweepReport sweep(const SweepOptions& options);

}  // namespace skewsign
