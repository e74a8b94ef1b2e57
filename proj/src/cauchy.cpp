#include "skewsign/cauchy.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "skewsign/errors.hpp"

namespace skewsign {

namespace {

// Entry constraint between two dominoes of one tiling; strict for vertical
// adjacency, weak for horizontal.
struct EntryConstraint {
  int lower;   // domino index whose entry must be <= / < the other
  int upper;
  bool strict;
};

std::vector<EntryConstraint> adjacency_constraints(const SkewShape& shape,
                                                   const std::vector<Domino>& dominoes) {
  const CellIndexer idx(shape);
  std::vector<int> domino_at(static_cast<std::size_t>(idx.count()), -1);
  for (std::size_t t = 0; t < dominoes.size(); ++t)
    for (const Cell& c : {dominoes[t].first_cell(), dominoes[t].second_cell()})
      domino_at[static_cast<std::size_t>(idx.index(c.row, c.col))] = static_cast<int>(t);

  std::set<std::tuple<int, int, bool>> seen;
  std::vector<EntryConstraint> out;
  for (const Cell& c : shape.cells()) {
    const int here = domino_at[static_cast<std::size_t>(idx.index(c.row, c.col))];
    const int right = idx.index(c.row, c.col + 1);
    if (right >= 0) {
      const int other = domino_at[static_cast<std::size_t>(right)];
      if (other != here && seen.emplace(here, other, false).second)
        out.push_back({here, other, false});
    }
    const int below = idx.index(c.row + 1, c.col);
    if (below >= 0) {
      const int other = domino_at[static_cast<std::size_t>(below)];
      if (other != here && seen.emplace(here, other, true).second)
        out.push_back({here, other, true});
    }
  }
  return out;
}

}  // namespace

void for_each_ssdt(const SkewShape& shape, int max_entry,
                   const std::function<void(const SemistandardDominoTableau&)>& fn) {
  for_each_tiling(shape, [&](const DominoTiling& tiling) {
    const std::vector<Domino>& dominoes = tiling.dominoes();
    if (dominoes.empty()) {
      fn(SemistandardDominoTableau{shape, {}, {}});
      return;
    }
    if (max_entry < 1) return;

    // Constraints grouped by their later domino, so each assignment is
    // checked as soon as both endpoints have entries.
    std::vector<std::vector<EntryConstraint>> by_later(dominoes.size());
    for (const EntryConstraint& c : adjacency_constraints(shape, dominoes))
      by_later[static_cast<std::size_t>(std::max(c.lower, c.upper))].push_back(c);

    std::vector<int> entries(dominoes.size(), 0);
    auto rec = [&](auto&& self, std::size_t at) -> void {
      if (at == dominoes.size()) {
        fn(SemistandardDominoTableau{shape, dominoes, entries});
        return;
      }
      for (int e = 1; e <= max_entry; ++e) {
        entries[at] = e;
        bool ok = true;
        for (const EntryConstraint& c : by_later[at]) {
          const int lo = entries[static_cast<std::size_t>(c.lower)];
          const int hi = entries[static_cast<std::size_t>(c.upper)];
          if (c.strict ? lo >= hi : lo > hi) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, at + 1);
      }
      entries[at] = 0;
    };
    rec(rec, 0);
  });
}

std::vector<SemistandardDominoTableau> enumerate_ssdt(const SkewShape& shape, int max_entry) {
  std::vector<SemistandardDominoTableau> out;
  for_each_ssdt(shape, max_entry, [&](const SemistandardDominoTableau& t) { out.push_back(t); });
  return out;
}

TruncatedPolynomial g_polynomial(const SkewShape& shape, VariableAxis axis, int num_x, int num_y,
                                 int cap_x, int cap_y) {
  TruncatedPolynomial out(num_x, num_y, cap_x, cap_y);
  const int num_vars = axis == VariableAxis::x ? num_x : num_y;
  for_each_ssdt(shape, num_vars, [&](const SemistandardDominoTableau& t) {
    Monomial m = out.unit_monomial();
    int verticals = 0;
    for (std::size_t i = 0; i < t.dominoes.size(); ++i) {
      const std::size_t var = static_cast<std::size_t>(t.entries[i]) - 1;
      (axis == VariableAxis::x ? m.x : m.y)[var] += 1;
      if (t.dominoes[i].orientation == Orientation::vertical) ++verticals;
    }
    m.s = verticals;
    out.add_term(m, 1);
  });
  return out;
}

TruncatedPolynomial kernel_expansion(int num_x, int num_y, int cap_x, int cap_y) {
  TruncatedPolynomial result = TruncatedPolynomial::constant(num_x, num_y, cap_x, cap_y, 1);
  const int max_power = std::min(cap_x, cap_y);
  for (int i = 0; i < num_x; ++i) {
    for (int j = 0; j < num_y; ++j) {
      TruncatedPolynomial plain(num_x, num_y, cap_x, cap_y);
      TruncatedPolynomial spun(num_x, num_y, cap_x, cap_y);
      for (int a = 0; a <= max_power; ++a) {
        Monomial m = result.unit_monomial();
        m.x[static_cast<std::size_t>(i)] = a;
        m.y[static_cast<std::size_t>(j)] = a;
        plain.add_term(m, 1);
        m.s = 2 * a;  // each q-marked factor carries s^2 per power
        spun.add_term(m, 1);
      }
      result = result * plain * spun;
    }
  }
  return result;
}

CauchyReport verify_cauchy(const Partition& alpha, const Partition& beta, int num_x, int num_y,
                           int max_dominoes) {
  if (max_dominoes < 0) throw Error("max_dominoes must be non-negative");
  if (num_x < 0 || num_y < 0) throw Error("variable counts must be non-negative");
  const int cap = max_dominoes;

  CauchyReport report{alpha,
                      beta,
                      num_x,
                      num_y,
                      max_dominoes,
                      TruncatedPolynomial(num_x, num_y, cap, cap),
                      TruncatedPolynomial(num_x, num_y, cap, cap),
                      false,
                      std::nullopt};

  // Left side: every lambda containing both alpha and beta whose skews stay
  // within the domino budget on each axis.
  const Partition base = rowwise_max(alpha, beta);
  const int max_size = std::min(alpha.size(), beta.size()) + 2 * max_dominoes;
  for (int sz = base.size(); sz <= max_size; ++sz) {
    if ((sz - alpha.size()) % 2 != 0 || (sz - beta.size()) % 2 != 0) continue;
    const int extra = sz - base.size();
    for (const Partition& lambda : enumerate_outer_extensions(base, extra, base.rows() + extra)) {
      const TruncatedPolynomial gx =
          g_polynomial(SkewShape(lambda, alpha), VariableAxis::x, num_x, num_y, cap, cap);
      if (gx.is_zero()) continue;
      const TruncatedPolynomial gy =
          g_polynomial(SkewShape(lambda, beta), VariableAxis::y, num_x, num_y, cap, cap);
      if (gy.is_zero()) continue;
      report.lhs = report.lhs + gx * gy;
    }
  }

  // Right side: kernel times the sum over mu contained in both alpha and
  // beta. The inner sum crosses the variable sets (beta/mu carries x,
  // alpha/mu carries y), as in the skew Cauchy identity for Schur functions;
  // with alpha == beta the crossing is invisible.
  TruncatedPolynomial mu_sum(num_x, num_y, cap, cap);
  const Partition roof = rowwise_min(alpha, beta);
  for (int drop = 0; drop <= roof.size(); ++drop) {
    for (const Partition& mu : enumerate_inner_restrictions(roof, drop)) {
      if ((alpha.size() - mu.size()) % 2 != 0 || (beta.size() - mu.size()) % 2 != 0) continue;
      const TruncatedPolynomial gx =
          g_polynomial(SkewShape(beta, mu), VariableAxis::x, num_x, num_y, cap, cap);
      if (gx.is_zero()) continue;
      const TruncatedPolynomial gy =
          g_polynomial(SkewShape(alpha, mu), VariableAxis::y, num_x, num_y, cap, cap);
      if (gy.is_zero()) continue;
      mu_sum = mu_sum + gx * gy;
    }
  }
  report.rhs = kernel_expansion(num_x, num_y, cap, cap) * mu_sum;

  report.equal = report.lhs == report.rhs;
  if (!report.equal) {
    const MonomialOrder less;
    auto lit = report.lhs.terms().begin();
    auto rit = report.rhs.terms().begin();
    while (lit != report.lhs.terms().end() || rit != report.rhs.terms().end()) {
      if (rit == report.rhs.terms().end() ||
          (lit != report.lhs.terms().end() && less(lit->first, rit->first))) {
        report.first_difference = CauchyDifference{lit->first, lit->second, 0};
        break;
      }
      if (lit == report.lhs.terms().end() || less(rit->first, lit->first)) {
        report.first_difference = CauchyDifference{rit->first, 0, rit->second};
        break;
      }
      if (lit->second != rit->second) {
        report.first_difference = CauchyDifference{lit->first, lit->second, rit->second};
        break;
      }
      ++lit;
      ++rit;
    }
  }
  return report;
}

GaussianInt squarefree_spin_value(const SkewShape& shape) {
  if (shape.size() % 2 != 0) return {0, 0};
  const int k = shape.size() / 2;
  const TruncatedPolynomial g = g_polynomial(shape, VariableAxis::x, k, 0, k, 0);
  GaussianInt total{0, 0};
  for (const auto& [m, c] : g.terms()) {
    if (!std::all_of(m.x.begin(), m.x.end(), [](int e) { return e == 1; })) continue;
    const GaussianInt unit = GaussianInt::unit_power(m.s);
    const long long value = c.convert_to<long long>();
    total = total + GaussianInt{unit.re * value, unit.im * value};
  }
  return total;
}

}  // namespace skewsign
