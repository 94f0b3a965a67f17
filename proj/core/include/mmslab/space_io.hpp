#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmslab/space.hpp"

namespace mms {

/// Parses the space JSON format:
///   { "points": [id, ...],
///     "metric": {"kind": "matrix", "data": [[...], ...]}
///             | {"kind": "euclidean", "coords": [[...], ...]}
///             | {"kind": "graph", "edges": [[i, j, len], ...]},
///     "weights": [...], "base": index, "resolution": h (optional) }
/// Graph metrics are closed under shortest paths at load time. The result is
/// validated; any violation throws ValidationError listing the first few.
PointedSpace space_from_json(const nlohmann::json& j, double triangle_tol = 1e-9);
PointedSpace load_space(const std::filesystem::path& path);

/// Writes "euclidean" when the space carries a Euclidean coordinate metric,
/// otherwise the full "matrix".
nlohmann::json space_to_json(const PointedSpace& space);
void save_space(const PointedSpace& space, const std::filesystem::path& path);

/// All-pairs shortest paths over an undirected weighted edge list (Dijkstra
/// from every source). Unreachable pairs throw ValidationError.
std::vector<double> shortest_path_closure(std::size_t n,
                                          const std::vector<std::tuple<std::size_t, std::size_t, double>>& edges);

/// Measure file: JSON array of weights, or CSV with one weight per line
/// (or "index,weight" lines).
std::vector<double> load_measure(const std::filesystem::path& path, std::size_t n);

}  // namespace mms
