#include "skewsign/report_json.hpp"

#include <limits>

namespace skewsign {

using nlohmann::json;

json coeff_json(const Coeff& c) {
  static const Coeff lo = std::numeric_limits<long long>::min();
  static const Coeff hi = std::numeric_limits<long long>::max();
  if (c >= lo && c <= hi) return c.convert_to<long long>();
  return c.str();
}

json to_json(const GaussianInt& g) { return json{{"re", g.re}, {"im", g.im}}; }

json to_json(const StandardYoungTableau& t) {
  json cells = json::array();
  const std::vector<Cell> shape_cells = t.shape().cells();
  for (std::size_t i = 0; i < shape_cells.size(); ++i)
    cells.push_back(json{{"row", shape_cells[i].row},
                         {"col", shape_cells[i].col},
                         {"label", t.labels()[i]}});
  return json{{"cells", std::move(cells)}};
}

json to_json(const Domino& d) {
  return json{{"row", d.row},
              {"col", d.col},
              {"orientation", d.orientation == Orientation::horizontal ? "horizontal" : "vertical"}};
}

json to_json(const DominoTiling& t) {
  json dominoes = json::array();
  for (const Domino& d : t.dominoes()) dominoes.push_back(to_json(d));
  return json{{"dominoes", std::move(dominoes)}};
}

json to_json(const StandardDominoTableau& t) {
  json dominoes = json::array();
  for (std::size_t i = 0; i < t.dominoes().size(); ++i) {
    json d = to_json(t.dominoes()[i]);
    d["label"] = static_cast<int>(i) + 1;
    dominoes.push_back(std::move(d));
  }
  return json{{"dominoes", std::move(dominoes)}};
}

json to_json(const Monomial& m) {
  return json{{"x", m.x}, {"y", m.y}, {"s", m.s}};
}

json to_json(const TruncatedPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json term = to_json(m);
    term["coeff"] = coeff_json(c);
    terms.push_back(std::move(term));
  }
  return terms;
}

json to_json(const PropositionReport& r) {
  json j;
  j["shape"] = r.shape.to_string();
  j["imbalance"] = r.imbalance;
  j["imbalance_squared"] = r.imbalance_squared;
  j["rhs_value"] = r.rhs_value;
  j["equal"] = r.equal;
  j["sdt_count"] = r.sdt_count;
  j["sum_sign"] = r.sum_sign;
  j["sum_nv_sign"] = r.sum_nv_sign;
  j["nv_termwise"] = r.nv_termwise;
  j["spin_sum"] = to_json(r.spin_sum);
  j["v_outer"] = r.v_outer;
  j["v_inner"] = r.v_inner;
  j["v_prime"] = r.v_prime;
  j["tileable"] = r.tileable;
  return j;
}

namespace {

json terms_json(const std::vector<Theorem1Term>& terms) {
  json out = json::array();
  for (const Theorem1Term& t : terms)
    out.push_back(json{{"partition", t.partition.to_string()},
                       {"v", t.v},
                       {"imbalance_squared", t.imbalance_squared}});
  return out;
}

}  // namespace

json to_json(const Theorem1Report& r) {
  json j;
  j["alpha"] = r.alpha.to_string();
  j["n"] = r.n;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["equal"] = r.equal;
  j["lhs_terms"] = terms_json(r.lhs_terms);
  j["rhs_terms"] = terms_json(r.rhs_terms);
  return j;
}

json to_json(const CauchyReport& r) {
  json j;
  j["alpha"] = r.alpha.to_string();
  j["beta"] = r.beta.to_string();
  j["num_x"] = r.num_x;
  j["num_y"] = r.num_y;
  j["max_dominoes"] = r.max_dominoes;
  j["equal"] = r.equal;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  if (r.first_difference) {
    j["first_difference"] = json{{"monomial", to_json(r.first_difference->monomial)},
                                 {"lhs_coeff", coeff_json(r.first_difference->lhs_coeff)},
                                 {"rhs_coeff", coeff_json(r.first_difference->rhs_coeff)}};
  } else {
    j["first_difference"] = nullptr;
  }
  return j;
}

json to_json(const SweepReport& r) {
  auto stats = [](const CheckStats& s) { return json{{"checked", s.checked}, {"passed", s.passed}}; };
  json j;
  j["all_passed"] = r.all_passed();
  j["checks"] = json{{"theorem1", stats(r.theorem1)},
                     {"imbalance_square", stats(r.imbalance_square)},
                     {"domino_sign_sum", stats(r.domino_sign_sum)},
                     {"nice_parity_sign", stats(r.nice_parity_sign)},
                     {"nv_bv_invariance", stats(r.nv_bv_invariance)},
                     {"v_prime_mod2", stats(r.v_prime_mod2)},
                     {"flip_connectivity", stats(r.flip_connectivity)}};
  json failures = json::array();
  for (const SweepFailure& f : r.failures)
    failures.push_back(json{{"check", f.check}, {"subject", f.subject}, {"detail", f.detail}});
  j["failures"] = std::move(failures);
  if (r.failures.empty())
    j["first_counterexample"] = nullptr;
  else
    j["first_counterexample"] = json{{"check", r.failures.front().check},
                                     {"subject", r.failures.front().subject},
                                     {"detail", r.failures.front().detail}};
  return j;
}

}  // namespace skewsign
