#include "mmslab/space_io.hpp"

#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "mmslab/errors.hpp"
#include "mmslab/space_ops.hpp"

namespace mms {

std::vector<double> shortest_path_closure(std::size_t n,
                                          const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (auto [i, j, len] : edges) {
    if (i >= n || j >= n) throw ValidationError("graph: edge endpoint out of range");
    if (!(len >= 0.0)) throw ValidationError("graph: negative edge length");
    adj[i].emplace_back(j, len);
    adj[j].emplace_back(i, len);
  }
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(n * n, inf);
  using Item = std::pair<double, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    double* row = d.data() + s * n;
    row[s] = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0.0, s);
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > row[u]) continue;
      for (auto [v, len] : adj[u])
        if (du + len < row[v]) {
          row[v] = du + len;
          pq.emplace(row[v], v);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
      if (row[v] == inf) throw ValidationError("graph: disconnected vertices");
  }
  // Dijkstra sums in different orders per source; force exact symmetry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double m = std::min(d[i * n + j], d[j * n + i]);
      d[i * n + j] = d[j * n + i] = m;
    }
  return d;
}

PointedSpace space_from_json(const nlohmann::json& j, double triangle_tol) {
  try {
    const auto& weights_j = j.at("weights");
    std::vector<double> w = weights_j.get<std::vector<double>>();
    const std::size_t n = w.size();
    const auto& metric = j.at("metric");
    const std::string kind = metric.at("kind").get<std::string>();
    FiniteSpace space;
    if (kind == "matrix") {
      auto rows = metric.at("data").get<std::vector<std::vector<double>>>();
      if (rows.size() != n) throw ValidationError("space: matrix row count does not match weights");
      std::vector<double> flat;
      flat.reserve(n * n);
      for (auto& r : rows) {
        if (r.size() != n) throw ValidationError("space: matrix is not square");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      space = from_matrix(n, std::move(flat), std::move(w));
    } else if (kind == "euclidean") {
      auto rows = metric.at("coords").get<std::vector<std::vector<double>>>();
      if (rows.size() != n) throw ValidationError("space: coordinate count does not match weights");
      const std::size_t dim = n ? rows.front().size() : 0;
      std::vector<double> flat;
      for (auto& r : rows) {
        if (r.size() != dim) throw ValidationError("space: ragged coordinates");
        flat.insert(flat.end(), r.begin(), r.end());
      }
      space = from_euclidean(dim, std::move(flat), std::move(w));
    } else if (kind == "graph") {
      std::vector<std::tuple<std::size_t, std::size_t, double>> edges;
      for (const auto& e : metric.at("edges"))
        edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<double>());
      space = from_matrix(n, shortest_path_closure(n, edges), std::move(w));
    } else {
      throw ValidationError("space: unknown metric kind '" + kind + "'");
    }
    if (j.contains("points")) {
      std::vector<std::string> ids;
      for (const auto& p : j.at("points")) ids.push_back(p.is_string() ? p.get<std::string>() : p.dump());
      space = space.with_ids(std::move(ids));
    }
    if (j.contains("resolution")) space = space.with_resolution(j.at("resolution").get<double>());

    auto report = validate(space, triangle_tol);
    if (!report.ok()) {
      std::ostringstream msg;
      msg << "space: " << report.violations.size() << " invariant violation(s)";
      for (std::size_t k = 0; k < std::min<std::size_t>(3, report.violations.size()); ++k) {
        const auto& v = report.violations[k];
        msg << "; " << to_string(v.kind) << " at (" << v.i << "," << v.j << "," << v.k << ") amount " << v.amount;
      }
      throw ValidationError(msg.str());
    }
    return make_pointed(std::move(space), j.value("base", std::size_t{0}));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("space: malformed JSON: ") + e.what());
  }
}

PointedSpace load_space(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open space file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("space file " + path.string() + ": " + e.what());
  }
  return space_from_json(j);
}

nlohmann::json space_to_json(const PointedSpace& ps) {
  const auto& X = ps.space;
  nlohmann::json j;
  nlohmann::json ids = nlohmann::json::array();
  for (std::size_t i = 0; i < X.size(); ++i) ids.push_back(X.id(i));
  j["points"] = ids;
  if (X.kernel().kind() == "euclidean" && X.has_coords() && X.scale() == 1.0) {
    nlohmann::json coords = nlohmann::json::array();
    for (std::size_t i = 0; i < X.size(); ++i) {
      auto c = X.coords(i);
      coords.push_back(std::vector<double>(c.begin(), c.end()));
    }
    j["metric"] = {{"kind", "euclidean"}, {"coords", coords}};
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < X.size(); ++i) {
      std::vector<double> r(X.size());
      for (std::size_t k = 0; k < X.size(); ++k) r[k] = X.distance(i, k);
      rows.push_back(r);
    }
    j["metric"] = {{"kind", "matrix"}, {"data", rows}};
  }
  j["weights"] = std::vector<double>(X.weights().begin(), X.weights().end());
  j["base"] = ps.base;
  if (X.resolution() > 0.0) j["resolution"] = X.resolution();
  return j;
}

void save_space(const PointedSpace& space, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << space_to_json(space).dump(2) << '\n';
}

std::vector<double> load_measure(const std::filesystem::path& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open measure file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto first = text.find_first_not_of(" \t\r\n");
  std::vector<double> w;
  if (first != std::string::npos && text[first] == '[') {
    try {
      w = nlohmann::json::parse(text).get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("measure file " + path.string() + ": " + e.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    bool indexed = false;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto comma = line.find(',');
      if (comma != std::string::npos) {
        indexed = true;
        std::size_t idx = std::stoul(line.substr(0, comma));
        if (w.size() < n) w.resize(n, 0.0);
        if (idx >= n) throw ValidationError("measure file: index out of range");
        w[idx] = std::stod(line.substr(comma + 1));
      } else if (!indexed) {
        w.push_back(std::stod(line));
      }
    }
  }
  if (w.size() != n) throw ValidationError("measure file: expected " + std::to_string(n) + " weights");
  return w;
}

}  // namespace mms
