#include "leibniz/report.hpp"

namespace leibniz {

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_fraction_string(v[i]));
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(to_json(Vec(m.row(i).transpose())));
  return out;
}

Json to_json(const Subspace& s) {
  return Json{{"ambient_dim", s.ambient_dim()},
              {"dim", s.dim()},
              {"basis", to_json(s.basis())}};
}

Json to_json(const SeriesReport& report) {
  Json terms = Json::array();
  for (const auto& t : report.terms) terms.push_back(to_json(t.space));
  Json out{{"kind", report.kind == SeriesKind::Derived ? "derived" : "lower_central"},
           {"dims", report.dims},
           {"stabilized", report.stabilized},
           {"terms", terms}};
  if (report.first_zero_index) out["first_zero_index"] = *report.first_zero_index;
  return out;
}

Json to_json(const Classification& c) {
  Json out{{"abelian", c.abelian},
           {"nilpotent", c.nilpotent},
           {"solvable", c.solvable}};
  if (c.nilpotency_class) out["nilpotency_class"] = *c.nilpotency_class;
  if (c.derived_length) out["derived_length"] = *c.derived_length;
  return out;
}

Json to_json(const VerifyReport& report) {
  Json out{{"ok", report.ok},
           {"shortcut_requested", report.shortcut_requested},
           {"fell_back_to_full", report.fell_back_to_full}};
  if (report.counterexample) {
    // 1-based triple, matching the presentation format
    out["counterexample"] = {(*report.counterexample)[0] + 1,
                             (*report.counterexample)[1] + 1,
                             (*report.counterexample)[2] + 1};
  }
  return out;
}

Json to_json(const SimplicityVerdict& verdict) {
  const char* kind = "inconclusive";
  if (verdict.kind == SimplicityVerdict::Kind::Simple) kind = "simple";
  if (verdict.kind == SimplicityVerdict::Kind::NotSimple) kind = "not_simple";
  Json out{{"verdict", kind}, {"note", verdict.note}};
  if (verdict.witness) out["witness"] = to_json(verdict.witness->space);
  return out;
}

Json to_json(const ChainWitness& witness) {
  Json out = Json::object();
  if (witness.m_left) out["m_left"] = *witness.m_left;
  if (witness.m_right) out["m_right"] = *witness.m_right;
  out["left_found"] = witness.m_left.has_value();
  out["right_found"] = witness.m_right.has_value();
  return out;
}

Json make_report(const LeibnizAlgebra& g) {
  return Json{{"tool", Json{{"name", kToolName}, {"version", kToolVersion}}},
              {"algebra", Json{{"name", g.name()}, {"dim", g.dim()}}},
              {"results", Json::object()}};
}

}  // namespace leibniz
