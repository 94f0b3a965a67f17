#include "mmslab/serialize.hpp"

#include <cmath>

#include "mmslab/errors.hpp"

namespace mms {

using nlohmann::json;

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

namespace {

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

json row(const CdRow& r) {
  return {{"t", r.t},
          {"n_prime", r.n_prime},
          {"lhs", number(r.lhs)},
          {"rhs", number(r.rhs)},
          {"slack", number(r.slack)},
          {"singular_mass", r.singular_mass}};
}

json atoms(const std::vector<Atom>& atoms) {
  json a = json::array();
  for (const auto& x : atoms) a.push_back({x.from, x.to, x.mass});
  return a;
}

double read(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string()) {
    auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    throw ValidationError(std::string("model spec: bad value for ") + key);
  }
  return v.get<double>();
}

}  // namespace

json to_json(const W2Result& r) {
  return {{"cost", number(r.cost)},
          {"distance", number(r.distance())},
          {"iterations", r.iterations},
          {"marginal_error", number(r.marginal_error)},
          {"plan", atoms(r.plan.atoms)}};
}

json to_json(const CdReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows) rows.push_back(row(x));
  return {{"K", r.K},
          {"N", r.N},
          {"tolerance", number(r.tolerance)},
          {"verdict", to_string(r.verdict)},
          {"worst", r.rows.empty() ? json(nullptr) : row(r.worst)},
          {"rows", rows},
          {"transport_cost", number(r.transport_cost)},
          {"plans_examined", r.plans_examined},
          {"enumeration_complete", r.enumeration_complete},
          {"geodesic_defect", number(r.geodesic_defect)},
          {"flagged_paths", r.flagged_paths},
          {"note", r.note}};
}

json to_json(const ProlongReport& r) {
  json rows = json::array();
  for (const auto& x : r.rows)
    rows.push_back({{"t", x.t},
                    {"ratio", x.ratio},
                    {"entropy", number(x.entropy)},
                    {"jensen_bound", number(x.jensen_bound)},
                    {"rhs", number(x.rhs)}});
  return {{"center", r.center}, {"radius", r.radius}, {"ball_mass", r.ball_mass}, {"coverage", r.coverage}, {"rows", rows}};
}

json to_json(const DoublingProfile& p) {
  return {{"radii", p.radii},
          {"ratios", numbers(p.ratios)},
          {"envelope", numbers(p.envelope)},
          {"centers", p.centers.size()},
          {"iterated_samples", p.iterated.size()},
          {"iterated_violations", p.iterated_violations}};
}

json to_json(const PmghEstimate& e) {
  json terms = json::array();
  for (const auto& t : e.terms) {
    json pairs = json::array();
    for (const auto& [a, b] : t.certificate.pairs) pairs.push_back({a, b});
    terms.push_back({{"radius", t.radius},
                     {"weight", t.weight},
                     {"distortion", number(t.distortion)},
                     {"measure_gap", number(t.measure_gap)},
                     {"term", number(t.term)},
                     {"ball_a", t.ball_a},
                     {"ball_b", t.ball_b},
                     {"net_spacing", t.net_spacing},
                     {"exhaustive", t.exhaustive},
                     {"certificate", pairs}});
  }
  return {{"value", number(e.value)},
          {"lower_bound", e.lower_bound ? number(*e.lower_bound) : json(nullptr)},
          {"terms", terms}};
}

json to_json(const ConvergenceTable& t) { return {{"values", numbers(t.values)}, {"trend", to_string(t.trend)}}; }

json to_json(const BlowupSequence& s) {
  json members = json::array();
  for (const auto& m : s.members)
    members.push_back({{"radius", m.radius},
                       {"points", m.space.space.size()},
                       {"normalization", m.normalization},
                       {"relative_resolution", m.relative_resolution},
                       {"usable", m.usable}});
  return {{"window", s.window}, {"members", members}, {"warnings", s.warnings}};
}

json to_json(const TangentMatch& m) {
  json matches = json::array();
  for (const auto& x : m.matches)
    matches.push_back({{"model", x.model},
                       {"values", numbers(x.values)},
                       {"final", number(x.final_value)},
                       {"trend", to_string(x.trend)}});
  return {{"best", m.best}, {"margin", number(m.margin)}, {"matches", matches}};
}

json to_json(const IteratedTangentReport& r) {
  json cmp = json::array();
  for (const auto& c : r.comparisons)
    cmp.push_back({{"inner_radius", c.inner_radius}, {"original_radius", c.original_radius}, {"value", number(c.value)}});
  return {{"tangent_radius", r.tangent_radius},
          {"yprime", r.yprime},
          {"yprime_offset", r.yprime_offset},
          {"min_value", number(r.min_value)},
          {"best", {{"inner_radius", r.best.inner_radius}, {"original_radius", r.best.original_radius}}},
          {"comparisons", cmp}};
}

json to_json(const LineCandidate& l) {
  return {{"chain", l.chain},
          {"params", l.params},
          {"half_length", l.half_length},
          {"eps_line", l.eps_line},
          {"center", l.center}};
}

json to_json(const SplitResult& s) {
  return {{"T", s.T},
          {"window", s.window},
          {"slab_points", s.points.size()},
          {"quotient_points", s.quotient.space.size()},
          {"quotient_base", s.quotient.base},
          {"delta_metric", number(s.delta_metric)},
          {"delta_measure", number(s.delta_measure)}};
}

json to_json(const DimensionResult& d) {
  json stages = json::array();
  for (const auto& s : d.stages)
    stages.push_back({{"line_found", s.line_found},
                      {"eps_line", number(s.eps_line)},
                      {"delta_metric", number(s.delta_metric)},
                      {"delta_measure", number(s.delta_measure)},
                      {"points", s.points},
                      {"quotient_points", s.quotient_points},
                      {"note", s.note}});
  return {{"n", d.n}, {"remainder_points", d.remainder_points}, {"inconclusive", d.inconclusive}, {"stages", stages}};
}

json to_json(const ModelSpec& s) {
  return {{"kind", to_string(s.kind)},
          {"dim", s.dim},
          {"h", s.h},
          {"lo", s.lo},
          {"hi", s.hi},
          {"p", number(s.p)},
          {"cone_angle", s.cone_angle},
          {"circumference", s.circumference},
          {"axis_length", s.axis_length},
          {"weight_exponent", s.weight_exponent},
          {"nodes", s.nodes},
          {"connect_radius", s.connect_radius},
          {"seed", s.seed}};
}

json to_json(const GroundTruth& g) {
  return {{"kind", g.kind},
          {"tangent", g.tangent},
          {"doubling_exponent", g.doubling_exponent},
          {"curvature", g.curvature},
          {"notes", g.notes}};
}

ModelSpec model_spec_from_json(const json& j) {
  ModelSpec s;
  try {
    s.kind = model_kind_from_string(j.at("kind").get<std::string>());
    s.dim = j.value("dim", s.dim);
    s.h = read(j, "h", s.h);
    s.lo = read(j, "lo", s.lo);
    s.hi = read(j, "hi", s.hi);
    s.p = read(j, "p", s.p);
    s.cone_angle = read(j, "cone_angle", s.cone_angle);
    s.circumference = read(j, "circumference", s.circumference);
    s.axis_length = read(j, "axis_length", s.axis_length);
    s.weight_exponent = read(j, "weight_exponent", s.weight_exponent);
    s.nodes = j.value("nodes", s.nodes);
    s.connect_radius = read(j, "connect_radius", s.connect_radius);
    s.seed = j.value("seed", s.seed);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("model spec: ") + e.what());
  }
  return s;
}

}  // namespace mms
