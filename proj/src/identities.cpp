#include "skewsign/identities.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "skewsign/errors.hpp"
#include "skewsign/tableaux.hpp"

namespace skewsign {

PropositionReport check_proposition(const SkewShape& shape) {
  if (shape.size() % 2 != 0)
    throw OddSize("the squared-imbalance identity needs an even cell count, got " +
                  shape.to_string());

  PropositionReport rep;
  rep.shape = shape;
  rep.imbalance = imbalance(shape);
  rep.imbalance_squared = rep.imbalance * rep.imbalance;
  rep.v_outer = v_statistic(shape.outer());
  rep.v_inner = v_statistic(shape.inner());

  for_each_sdt(shape, [&](const StandardDominoTableau& d) {
    ++rep.sdt_count;
    const int sign = sign_domino(d);
    const auto [nice, bad] = nice_and_bad_counts(d);
    const int nice_sign = nice % 2 == 0 ? +1 : -1;
    rep.sum_sign += sign;
    rep.sum_nv_sign += nice_sign;
    if (sign != nice_sign) rep.nv_termwise = false;
    rep.spin_sum = rep.spin_sum + GaussianInt::unit_power(nice + bad);
  });

  rep.tileable = first_tiling(shape).has_value();
  if (rep.tileable) rep.v_prime = shape_invariants(shape).v_prime;

  const GaussianInt square = rep.spin_sum * rep.spin_sum;
  if (square.im != 0)
    throw std::logic_error("spin sum square is not real on " + shape.to_string());
  const int parity_sign = (rep.v_outer + rep.v_inner) % 2 == 0 ? +1 : -1;
  rep.rhs_value = parity_sign * square.re;
  rep.equal = rep.imbalance_squared == rep.rhs_value;
  return rep;
}

Theorem1Report verify_theorem1(const Partition& alpha, int n) {
  if (n < 0 || n % 2 != 0)
    throw OddN("n must be a non-negative even integer, got " + std::to_string(n));

  Theorem1Report rep;
  rep.alpha = alpha;
  rep.n = n;

  for (const Partition& lambda : enumerate_outer_extensions(alpha, n, alpha.rows() + n)) {
    Theorem1Term term;
    term.partition = lambda;
    term.v = v_statistic(lambda);
    const long long imb = imbalance(SkewShape(lambda, alpha));
    term.imbalance_squared = imb * imb;
    rep.lhs += (term.v % 2 == 0 ? +1 : -1) * term.imbalance_squared;
    rep.lhs_terms.push_back(std::move(term));
  }
  for (const Partition& mu : enumerate_inner_restrictions(alpha, n)) {
    Theorem1Term term;
    term.partition = mu;
    term.v = v_statistic(mu);
    const long long imb = imbalance(SkewShape(alpha, mu));
    term.imbalance_squared = imb * imb;
    rep.rhs += (term.v % 2 == 0 ? +1 : -1) * term.imbalance_squared;
    rep.rhs_terms.push_back(std::move(term));
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

namespace {

struct ShapeOutcome {
  bool even = false;
  bool tileable = false;
  bool prop_pass = true;
  bool first_pass = true;
  bool nv_pass = true;
  bool nvbv_pass = true;
  bool mod2_pass = true;
  bool flip_pass = true;
  std::string detail;
};

ShapeOutcome run_shape_checks(const SkewShape& shape) {
  ShapeOutcome o;
  o.even = shape.size() % 2 == 0;
  o.tileable = first_tiling(shape).has_value();

  if (o.even) {
    const PropositionReport rep = check_proposition(shape);
    o.prop_pass = rep.equal;
    o.first_pass = rep.sum_sign == rep.imbalance;
    o.nv_pass = rep.nv_termwise;
    if (!rep.equal)
      o.detail = "I^2=" + std::to_string(rep.imbalance_squared) +
                 " rhs=" + std::to_string(rep.rhs_value);
  }

  if (o.tileable) {
    const std::vector<DominoTiling> tilings = enumerate_tilings(shape);
    const int reference = nice_minus_bad(tilings.front());
    for (const DominoTiling& t : tilings) {
      if (nice_minus_bad(t) != reference) o.nvbv_pass = false;
      for (const DominoTiling& nb : flip_neighbors(t))
        if (nice_minus_bad(nb) != nice_minus_bad(t)) o.nvbv_pass = false;
    }
    try {
      const ShapeInvariants inv = shape_invariants(shape);
      if ((inv.v_outer + inv.v_inner - inv.v_prime) % 2 != 0) o.mod2_pass = false;
    } catch (const std::logic_error&) {
      o.mod2_pass = false;
    }
    o.flip_pass = flip_graph_summary(shape).connected;
  }
  return o;
}

void record(CheckStats& stats, bool pass, const std::string& check, const std::string& subject,
            const std::string& detail, std::vector<SweepFailure>& failures) {
  ++stats.checked;
  if (pass)
    ++stats.passed;
  else
    failures.push_back({check, subject, detail});
}

// Runs fn(i) for i in [0, count), possibly on several threads. Results must be
// written to per-index slots; the caller merges them in order afterwards.
void run_indexed(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  const std::size_t worker_count = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
  workers.reserve(worker_count);
  for (std::size_t w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : workers) t.join();
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  SweepReport report;

  struct TheoremTask {
    Partition alpha;
    int n;
  };
  std::vector<TheoremTask> theorem_tasks;
  for (int size = 0; size <= options.max_alpha_size; ++size)
    for (const Partition& alpha : partitions_of(size))
      for (int n : options.n_values) theorem_tasks.push_back({alpha, n});

  std::vector<SkewShape> shape_tasks;
  for (int size = 0; size <= options.max_cells; ++size)
    for (const Partition& lambda : partitions_of(size))
      for (int drop = 0; drop <= lambda.size(); ++drop)
        for (const Partition& mu : enumerate_inner_restrictions(lambda, drop))
          shape_tasks.emplace_back(lambda, mu);

  struct TheoremResult {
    bool pass = false;
    std::string detail;
  };
  std::vector<TheoremResult> theorem_results(theorem_tasks.size());
  run_indexed(theorem_tasks.size(), options.jobs, [&](std::size_t i) {
    try {
      const Theorem1Report rep = verify_theorem1(theorem_tasks[i].alpha, theorem_tasks[i].n);
      theorem_results[i] = {rep.equal, rep.equal ? std::string{}
                                                 : "lhs=" + std::to_string(rep.lhs) +
                                                       " rhs=" + std::to_string(rep.rhs)};
    } catch (const std::exception& e) {
      theorem_results[i] = {false, std::string("exception: ") + e.what()};
    }
  });

  std::vector<ShapeOutcome> shape_results(shape_tasks.size());
  run_indexed(shape_tasks.size(), options.jobs, [&](std::size_t i) {
    try {
      shape_results[i] = run_shape_checks(shape_tasks[i]);
    } catch (const std::exception& e) {
      ShapeOutcome o;
      o.even = shape_tasks[i].size() % 2 == 0;
      o.tileable = false;
      o.prop_pass = o.first_pass = o.nv_pass = false;
      o.detail = std::string("exception: ") + e.what();
      shape_results[i] = o;
    }
  });

  for (std::size_t i = 0; i < theorem_tasks.size(); ++i) {
    const std::string subject = "alpha=" + theorem_tasks[i].alpha.to_string() +
                                " n=" + std::to_string(theorem_tasks[i].n);
    record(report.theorem1, theorem_results[i].pass, "theorem1", subject,
           theorem_results[i].detail, report.failures);
  }
  for (std::size_t i = 0; i < shape_tasks.size(); ++i) {
    const ShapeOutcome& o = shape_results[i];
    const std::string subject = shape_tasks[i].to_string();
    if (o.even) {
      record(report.imbalance_square, o.prop_pass, "imbalance_square", subject, o.detail,
             report.failures);
      record(report.domino_sign_sum, o.first_pass, "domino_sign_sum", subject, o.detail,
             report.failures);
      record(report.nice_parity_sign, o.nv_pass, "nice_parity_sign", subject, o.detail,
             report.failures);
    }
    if (o.tileable) {
      record(report.nv_bv_invariance, o.nvbv_pass, "nv_bv_invariance", subject, o.detail,
             report.failures);
      record(report.v_prime_mod2, o.mod2_pass, "v_prime_mod2", subject, o.detail,
             report.failures);
      record(report.flip_connectivity, o.flip_pass, "flip_connectivity", subject, o.detail,
             report.failures);
    }
  }
  return report;
}

}  // namespace skewsign
