#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <limits>
#include <sstream>

#include "cli/cache.hpp"
#include "cli/output.hpp"
#include "mmslab/curvature.hpp"
#include "mmslab/doubling.hpp"
#include "mmslab/errors.hpp"
#include "mmslab/models.hpp"
#include "mmslab/pmgh.hpp"
#include "mmslab/serialize.hpp"
#include "mmslab/space_io.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/splitting.hpp"
#include "mmslab/tangent.hpp"

namespace mmscli {

namespace {

using nlohmann::json;

struct Common {
  std::string out = "mmslab-out";
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool svg = false;
};

struct Input {
  std::string path, model;
};

// What a command hands back for writing.
struct Result {
  json report;
  Series series;
  std::vector<Curve> curves;
  std::string title, summary;
};

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw mms::ValidationError(std::string("bad number in ") + what + ": " + tok);
    }
  }
  if (v.empty()) throw mms::ValidationError(std::string("empty list for ") + what);
  return v;
}

mms::PointedSpace load_input(const Input& in) {
  if (!in.model.empty()) {
    if (!in.path.empty()) throw mms::ValidationError("give either a space file or --model, not both");
    return mms::make_model(mms::parse_model_spec(in.model));
  }
  if (in.path.empty()) throw mms::ValidationError("no input space: pass a space file or --model");
  return mms::load_space(in.path);
}

json describe_input(const Input& in) { return in.model.empty() ? json{{"file", in.path}} : json{{"model", in.model}}; }

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("space", in.path, "Space JSON file");
  cmd->add_option("--model", in.model, "Model spec, e.g. euclidean-grid:2d,h=0.02");
}

mms::Measure measure_arg(const std::string& file, long dirac, std::size_t n, const char* name) {
  if (!file.empty()) return mms::Measure{mms::load_measure(file, n)};
  if (dirac >= 0) return mms::Measure::dirac(n, static_cast<std::size_t>(dirac));
  throw mms::ValidationError(std::string("missing ") + name + " (measure file or Dirac index)");
}

// Uniform measures on the support below / above the midpoint of the first coordinate.
std::pair<mms::Measure, mms::Measure> coordinate_halves(const mms::FiniteSpace& X) {
  if (!X.has_coords()) throw mms::ValidationError("default measures need coordinates; pass --mu0 and --mu1");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < X.size(); ++i) {
    lo = std::min(lo, X.coords(i)[0]);
    hi = std::max(hi, X.coords(i)[0]);
  }
  const double mid = 0.5 * (lo + hi), eps = 1e-12 * std::max(1.0, hi - lo);
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < X.size(); ++i) {
    if (!X.in_support(i)) continue;
    double x = X.coords(i)[0];
    if (x < mid - eps) a.push_back(i);
    else if (x > mid + eps) b.push_back(i);
  }
  return {mms::Measure::uniform_on(X, a), mms::Measure::uniform_on(X, b)};
}

std::vector<mms::TangentModel> parse_models(const std::string& text) {
  std::vector<mms::TangentModel> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok.size() >= 2 && tok[0] == 'R' && std::isdigit(static_cast<unsigned char>(tok[1])))
      out.push_back(mms::euclidean_model(std::stoul(tok.substr(1))));
    else if (tok == "linf")
      out.push_back(mms::lp_model(std::numeric_limits<double>::infinity()));
    else if (tok.rfind("lp:", 0) == 0)
      out.push_back(mms::lp_model(parse_list(tok.substr(3), "lp exponent").front()));
    else if (tok.rfind("circle:", 0) == 0)
      out.push_back(mms::circle_model(parse_list(tok.substr(7), "circumference").front()));
    else if (tok == "point")
      out.push_back(mms::singleton_model());
    else
      throw mms::ValidationError("unknown tangent model: " + tok);
  }
  if (out.empty()) throw mms::ValidationError("no tangent models given");
  return out;
}

mms::PmghMode parse_mode(const std::string& m) {
  if (m == "auto") return mms::PmghMode::automatic;
  if (m == "exhaustive") return mms::PmghMode::exhaustive;
  if (m == "anneal") return mms::PmghMode::anneal;
  throw mms::ValidationError("unknown pmgh mode: " + m);
}

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite metric measure space laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "Output directory")->capture_default_str();
  app.add_option("--seed", common.seed, "Random seed")->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--svg", common.svg, "Also write plot.svg");

  std::function<Result()> action;
  std::string name;

  // w2
  Input w2_in;
  std::string w2_mu0, w2_mu1;
  long w2_d0 = -1, w2_d1 = -1;
  bool w2_entropic = false;
  double w2_reg = 1e-3;
  auto* w2 = app.add_subcommand("w2", "Quadratic optimal transport between two measures");
  add_input(w2, w2_in);
  w2->add_option("--mu0", w2_mu0, "Source measure file");
  w2->add_option("--mu1", w2_mu1, "Target measure file");
  w2->add_option("--dirac0", w2_d0, "Source Dirac index");
  w2->add_option("--dirac1", w2_d1, "Target Dirac index");
  w2->add_flag("--entropic", w2_entropic, "Log-domain Sinkhorn instead of the exact LP");
  w2->add_option("--reg", w2_reg, "Entropic regularization relative to max d^2")->capture_default_str();
  w2->callback([&] {
    name = "w2";
    action = [&] {
      auto ps = load_input(w2_in);
      auto mu0 = measure_arg(w2_mu0, w2_d0, ps.space.size(), "mu0");
      auto mu1 = measure_arg(w2_mu1, w2_d1, ps.space.size(), "mu1");
      mms::W2Options o;
      o.solver = w2_entropic ? mms::Solver::entropic : mms::Solver::exact;
      o.entropic_reg = w2_reg;
      W2Cache cache;
      std::string key;
      std::optional<mms::W2Result> r;
      if (!w2_entropic && cache.enabled()) {
        key = cache.key(ps.space, mu0, mu1);
        r = cache.load(key, ps.space.size());
      }
      const bool hit = r.has_value();
      if (!r) r = mms::w2(ps.space, mu0, mu1, o);
      if (!w2_entropic && cache.enabled() && !hit) cache.store(key, *r);
      Result res;
      res.report = {{"command", "w2"},
                    {"input", describe_input(w2_in)},
                    {"solver", w2_entropic ? "entropic" : "exact"},
                    {"result", mms::to_json(*r)}};
      res.series.columns = {"from", "to", "mass"};
      for (const auto& a : r->plan.atoms) res.series.add({std::to_string(a.from), std::to_string(a.to), fmt(a.mass)});
      res.summary = "W2^2 = " + fmt(r->cost) + (hit ? " (cached)" : "");
      return res;
    };
  });

  // cdstar
  Input cd_in;
  double cd_K = 0.0, cd_N = 1.0;
  std::string cd_t = "0.25,0.5,0.75", cd_np, cd_mu0, cd_mu1;
  double cd_tol = -1.0;
  bool cd_exhaustive = false;
  auto* cd = app.add_subcommand("cdstar", "Check the reduced curvature-dimension inequality along a computed plan");
  add_input(cd, cd_in);
  cd->add_option("--K", cd_K, "Curvature bound")->capture_default_str();
  cd->add_option("--N", cd_N, "Dimension bound")->capture_default_str();
  cd->add_option("--t-grid", cd_t, "Comma-separated times")->capture_default_str();
  cd->add_option("--Nprime-grid", cd_np, "Comma-separated N' values (default N, N+1, 2N)");
  cd->add_option("--tol-cd", cd_tol, "Verdict tolerance (default 5*h*diam)");
  cd->add_option("--mu0", cd_mu0, "Source measure file (default: lower coordinate half)");
  cd->add_option("--mu1", cd_mu1, "Target measure file (default: upper coordinate half)");
  cd->add_flag("--exhaustive", cd_exhaustive, "Search all vertex-optimal plans (small supports)");
  cd->callback([&] {
    name = "cdstar";
    action = [&] {
      auto ps = load_input(cd_in);
      mms::Measure mu0, mu1;
      if (cd_mu0.empty() && cd_mu1.empty()) {
        std::tie(mu0, mu1) = coordinate_halves(ps.space);
      } else {
        mu0 = measure_arg(cd_mu0, -1, ps.space.size(), "mu0");
        mu1 = measure_arg(cd_mu1, -1, ps.space.size(), "mu1");
      }
      mms::CdOptions o;
      o.K = cd_K;
      o.N = cd_N;
      o.t_grid = parse_list(cd_t, "--t-grid");
      if (!cd_np.empty()) o.n_prime_grid = parse_list(cd_np, "--Nprime-grid");
      if (cd_tol >= 0.0) o.tolerance = cd_tol;
      o.exhaustive = cd_exhaustive;
      auto rep = mms::cdstar_check(ps.space, mu0, mu1, o);
      Result res;
      res.report = {{"command", "cdstar"}, {"input", describe_input(cd_in)}, {"result", mms::to_json(rep)}};
      res.series.columns = {"t", "n_prime", "lhs", "rhs", "slack"};
      std::map<double, Curve> curves;
      for (const auto& r : rep.rows) {
        res.series.add({fmt(r.t), fmt(r.n_prime), fmt(r.lhs), fmt(r.rhs), fmt(r.slack)});
        auto& c = curves[r.n_prime];
        c.label = "N'=" + fmt(r.n_prime);
        c.x.push_back(r.t);
        c.y.push_back(r.slack);
      }
      for (auto& [k, c] : curves) res.curves.push_back(c);
      res.title = "CD* slack";
      res.summary = "verdict: " + mms::to_string(rep.verdict) + " (worst slack " + fmt(rep.worst.slack) +
                    ", tolerance " + fmt(rep.tolerance) + ")";
      return res;
    };
  });

  // prolong
  Input pr_in;
  double pr_R = 0.5, pr_N = 2.0, pr_K = 0.0;
  std::string pr_t = "0.1,0.3,0.5";
  long pr_center = -1;
  auto* pr = app.add_subcommand("prolong", "Transport a ball onto its center and track the swept sets");
  add_input(pr, pr_in);
  pr->add_option("--R", pr_R, "Ball radius")->capture_default_str();
  pr->add_option("--N", pr_N, "Dimension bound")->capture_default_str();
  pr->add_option("--K", pr_K, "Curvature bound")->capture_default_str();
  pr->add_option("--t-grid", pr_t, "Comma-separated times")->capture_default_str();
  pr->add_option("--center", pr_center, "Center index (default: base)");
  pr->callback([&] {
    name = "prolong";
    action = [&] {
      auto ps = load_input(pr_in);
      mms::ProlongOptions o;
      o.K = pr_K;
      o.N = pr_N;
      o.t_grid = parse_list(pr_t, "--t-grid");
      auto rep = mms::prolongability_experiment(ps.space, pr_center >= 0 ? static_cast<std::size_t>(pr_center) : ps.base,
                                                pr_R, o);
      Result res;
      res.report = {{"command", "prolong"}, {"input", describe_input(pr_in)}, {"result", mms::to_json(rep)}};
      res.series.columns = {"t", "ratio", "entropy", "jensen_bound", "rhs"};
      Curve ratio{"m(E_t)/m(B_R)", {}, {}}, ent{"entropy", {}, {}};
      for (const auto& r : rep.rows) {
        res.series.add({fmt(r.t), fmt(r.ratio), fmt(r.entropy), fmt(r.jensen_bound), fmt(r.rhs)});
        ratio.x.push_back(r.t);
        ratio.y.push_back(r.ratio);
        ent.x.push_back(r.t);
        ent.y.push_back(r.entropy);
      }
      res.curves = {ratio, ent};
      res.title = "Prolongability";
      res.summary = "coverage " + fmt(rep.coverage);
      return res;
    };
  });

  // doubling
  Input db_in;
  std::string db_radii;
  std::size_t db_budget = 256, db_samples = 1000;
  auto* db = app.add_subcommand("doubling", "Doubling-ratio profile and iterated bound check");
  add_input(db, db_in);
  db->add_option("--radii", db_radii, "Comma-separated increasing radii (default dyadic from 4h)");
  db->add_option("--centers", db_budget, "Number of sampled centers")->capture_default_str();
  db->add_option("--samples", db_samples, "Iterated-bound samples")->capture_default_str();
  db->callback([&] {
    name = "doubling";
    action = [&] {
      auto ps = load_input(db_in);
      std::vector<double> radii;
      if (!db_radii.empty()) {
        radii = parse_list(db_radii, "--radii");
      } else {
        double h = mms::effective_resolution(ps.space), ecc = 0.0;
        for (std::size_t i = 0; i < ps.space.size(); ++i) ecc = std::max(ecc, ps.space.distance(ps.base, i));
        for (double r = 4.0 * std::max(h, 1e-12); 2.0 * r <= ecc; r *= 2.0) radii.push_back(r);
        if (radii.empty()) radii.push_back(std::max(ecc / 2.0, 1e-12));
      }
      mms::CenterPolicy pol;
      pol.budget = db_budget;
      pol.seed = common.seed;
      auto prof = mms::doubling_profile(ps.space, radii, pol, db_samples);
      Result res;
      res.report = {{"command", "doubling"}, {"input", describe_input(db_in)}, {"result", mms::to_json(prof)}};
      res.series.columns = {"r", "ratio", "envelope"};
      Curve c{"envelope", {}, {}};
      for (std::size_t k = 0; k < prof.radii.size(); ++k) {
        res.series.add({fmt(prof.radii[k]), fmt(prof.ratios[k]), fmt(prof.envelope[k])});
        c.x.push_back(prof.radii[k]);
        c.y.push_back(prof.envelope[k]);
      }
      res.curves = {c};
      res.title = "Doubling envelope";
      res.summary = "max ratio " + fmt(prof.envelope.back()) + ", iterated violations " +
                    std::to_string(prof.iterated_violations);
      return res;
    };
  });

  // ghdist
  std::string gh_a, gh_b, gh_model_a, gh_model_b, gh_radii = "1,2,4,8", gh_mode = "auto";
  std::size_t gh_proposals = 10000, gh_restarts = 2;
  bool gh_raw = false;
  auto* gh = app.add_subcommand("ghdist", "Pointed measured Gromov-Hausdorff surrogate between two spaces");
  gh->add_option("a", gh_a, "First space file");
  gh->add_option("b", gh_b, "Second space file");
  gh->add_option("--model", gh_model_a, "Model spec for the first space");
  gh->add_option("--model-b", gh_model_b, "Model spec for the second space");
  gh->add_option("--radii", gh_radii, "Radius grid")->capture_default_str();
  gh->add_option("--mode", gh_mode, "auto | exhaustive | anneal")->capture_default_str();
  gh->add_option("--proposals", gh_proposals, "Annealing proposals")->capture_default_str();
  gh->add_option("--restarts", gh_restarts, "Annealing restarts")->capture_default_str();
  gh->add_flag("--no-normalize", gh_raw, "Use the measures as given instead of normalizing at radius 1");
  gh->callback([&] {
    name = "ghdist";
    action = [&] {
      Input ia{gh_a, gh_model_a}, ib{gh_b, gh_model_b};
      if (ib.path.empty() && ib.model.empty() && !gh_model_a.empty() && !gh_a.empty()) std::swap(ia.path, ib.path);
      auto A = load_input(ia), B = load_input(ib);
      if (!gh_raw) {
        A = mms::normalize_at(A, 1.0).space;
        B = mms::normalize_at(B, 1.0).space;
      }
      mms::PmghOptions o;
      o.radii = parse_list(gh_radii, "--radii");
      o.mode = parse_mode(gh_mode);
      o.proposals = gh_proposals;
      o.restarts = gh_restarts;
      o.seed = common.seed;
      o.threads = common.jobs;
      auto est = mms::pmgh_distance(A, B, o);
      Result res;
      res.report = {{"command", "ghdist"},
                    {"a", describe_input(ia)},
                    {"b", describe_input(ib)},
                    {"normalized", !gh_raw},
                    {"result", mms::to_json(est)}};
      res.series.columns = {"radius", "distortion", "measure_gap", "term"};
      for (const auto& t : est.terms) res.series.add({fmt(t.radius), fmt(t.distortion), fmt(t.measure_gap), fmt(t.term)});
      res.summary = "D = " + fmt(est.value);
      return res;
    };
  });

  // blowup
  Input bu_in;
  std::string bu_radii = "0.125,0.0625,0.03125", bu_models;
  double bu_window = 8.0;
  auto* bu = app.add_subcommand("blowup", "Blow-up sequence at the base, optionally matched against tangent models");
  add_input(bu, bu_in);
  bu->add_option("--radii", bu_radii, "Decreasing radii in (0,1]")->capture_default_str();
  bu->add_option("--window", bu_window, "Window radius after rescaling")->capture_default_str();
  bu->add_option("--match", bu_models, "Models to match: R<n>, linf, lp:<p>, circle:<C>, point");
  bu->callback([&] {
    name = "blowup";
    action = [&] {
      auto ps = load_input(bu_in);
      auto seq = mms::blowup(ps, parse_list(bu_radii, "--radii"), {bu_window});
      Result res;
      res.report = {{"command", "blowup"}, {"input", describe_input(bu_in)}, {"sequence", mms::to_json(seq)}};
      res.series.columns = {"radius", "model", "D"};
      if (!bu_models.empty()) {
        mms::PmghOptions o;
        o.seed = common.seed;
        o.threads = common.jobs;
        auto m = mms::match_tangent(seq, parse_models(bu_models), o);
        res.report["match"] = mms::to_json(m);
        auto use = seq.usable();
        for (const auto& mm : m.matches) {
          Curve c{mm.model, {}, {}};
          for (std::size_t k = 0; k < mm.values.size(); ++k) {
            double r = seq.members[use[k]].radius;
            res.series.add({fmt(r), mm.model, fmt(mm.values[k])});
            c.x.push_back(std::log2(r));
            c.y.push_back(mm.values[k]);
          }
          res.curves.push_back(c);
        }
        res.title = "D to tangent models vs log2 r";
        res.summary = "best model " + m.best + " (margin " + fmt(m.margin) + ")";
      } else {
        res.summary = std::to_string(seq.usable().size()) + " usable members";
      }
      return res;
    };
  });

  // split
  Input sp_in;
  double sp_L = 2.0, sp_tol = 0.05, sp_window = 0.0;
  auto* sp = app.add_subcommand("split", "Detect a line through the base and split it off");
  add_input(sp, sp_in);
  sp->add_option("--L", sp_L, "Half length of the line")->capture_default_str();
  sp->add_option("--tol-line", sp_tol, "Additivity tolerance")->capture_default_str();
  sp->add_option("--window", sp_window, "Slab half-width (default half the line)");
  sp->callback([&] {
    name = "split";
    action = [&] {
      auto ps = load_input(sp_in);
      Result res;
      res.report = {{"command", "split"}, {"input", describe_input(sp_in)}};
      auto line = mms::detect_line(ps, sp_L, sp_tol);
      res.series.columns = {"point", "b", "fiber"};
      if (!line) {
        res.report["line"] = nullptr;
        res.summary = "no line within tolerance";
        return res;
      }
      mms::SplitOptions so;
      so.window = sp_window;
      so.seed = common.seed;
      auto s = mms::split(ps, *line, so);
      res.report["line"] = mms::to_json(*line);
      res.report["split"] = mms::to_json(s);
      for (std::size_t k = 0; k < s.points.size(); ++k)
        res.series.add({std::to_string(s.points[k]), fmt(s.b[k]), std::to_string(s.projection[k])});
      res.summary = "eps_line " + fmt(line->eps_line) + ", delta_metric " + fmt(s.delta_metric) + ", quotient " +
                    std::to_string(s.quotient.space.size()) + " points";
      return res;
    };
  });

  // dimension
  Input dm_in;
  mms::DimensionConfig dm_cfg;
  auto* dm = app.add_subcommand("dimension", "Count Euclidean factors by repeated blow-up and splitting");
  add_input(dm, dm_in);
  dm->add_option("--N", dm_cfg.N, "Dimension bound")->capture_default_str();
  dm->add_option("--radius", dm_cfg.radius, "First blow-up radius")->capture_default_str();
  dm->add_option("--window", dm_cfg.window, "Window radius")->capture_default_str();
  dm->add_option("--L", dm_cfg.line_length, "Half length of lines")->capture_default_str();
  dm->add_option("--tol-line", dm_cfg.tol_line, "Additivity tolerance")->capture_default_str();
  dm->callback([&] {
    name = "dimension";
    action = [&] {
      auto ps = load_input(dm_in);
      dm_cfg.split.seed = common.seed;
      auto r = mms::euclidean_dimension(ps, dm_cfg);
      Result res;
      res.report = {{"command", "dimension"}, {"input", describe_input(dm_in)}, {"result", mms::to_json(r)}};
      res.series.columns = {"stage", "points", "eps_line", "delta_metric", "delta_measure", "quotient_points"};
      for (std::size_t k = 0; k < r.stages.size(); ++k) {
        const auto& s = r.stages[k];
        res.series.add({std::to_string(k), std::to_string(s.points), fmt(s.eps_line), fmt(s.delta_metric),
                        fmt(s.delta_measure), std::to_string(s.quotient_points)});
      }
      res.summary = "n = " + std::to_string(r.n);
      return res;
    };
  });

  // models
  auto* models = app.add_subcommand("models", "Model-space generators");
  models->require_subcommand(1);
  models->fallthrough();
  auto* list = models->add_subcommand("list", "List model kinds, parameters and ground truth");
  list->callback([&] {
    name = "models list";
    action = [&] {
      Result res;
      json kinds = json::array();
      res.series.columns = {"kind", "tangent", "doubling_exponent", "curvature"};
      for (auto k : mms::all_model_kinds()) {
        mms::ModelSpec s;
        s.kind = k;
        auto g = mms::ground_truth(s);
        kinds.push_back({{"defaults", mms::to_json(s)}, {"ground_truth", mms::to_json(g)}});
        res.series.add({g.kind, "\"" + g.tangent + "\"", fmt(g.doubling_exponent), "\"" + g.curvature + "\""});
      }
      res.report = {{"command", "models list"}, {"kinds", kinds}};
      std::ostringstream s;
      for (auto k : mms::all_model_kinds()) s << mms::to_string(k) << "\n";
      res.summary = s.str();
      return res;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::validation;
  }
  if (!action) {
    err << "error: no command\n";
    return ExitCode::validation;
  }

  const std::string started = iso_now();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Result res = action();
    json argv_json = json::array();
    for (int i = 0; i < argc; ++i) argv_json.push_back(argv[i]);
    json meta = {{"command", name},
                 {"argv", argv_json},
                 {"started", started},
                 {"elapsed_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
                 {"seed", common.seed},
                 {"jobs", common.jobs}};
    write_outputs(common.out, res.report, res.series, meta, res.curves, common.svg, res.title);
    out << res.summary << (res.summary.empty() || res.summary.back() == '\n' ? "" : "\n");
    return ExitCode::ok;
  } catch (const mms::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::validation;
  } catch (const mms::BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return ExitCode::budget;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::validation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::validation;
  }
}

}  // namespace mmscli
