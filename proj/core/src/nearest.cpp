#include "mmslab/nearest.hpp"

#include <algorithm>
#include <limits>

#include "mmslab/errors.hpp"

namespace mms {

namespace {
constexpr std::size_t kLeaf = 12;
constexpr double kTieRel = 1e-12;

bool better(double d2, std::size_t idx, double best_d2, std::size_t best) {
  double tol = kTieRel * std::max(best_d2, 1e-300);
  if (d2 < best_d2 - tol) return true;
  return d2 <= best_d2 + tol && idx < best;
}
}  // namespace

KdTree::KdTree(std::size_t dim, std::span<const double> points)
    : dim_(dim), n_(dim ? points.size() / dim : 0), pts_(points.begin(), points.end()) {
  if (dim_ == 0 || points.size() % dim_ != 0) throw ValidationError("kd-tree: bad point array");
  order_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
  if (n_ > 0) build(0, n_);
}

std::size_t KdTree::build(std::size_t begin, std::size_t end) {
  std::size_t id = nodes_.size();
  nodes_.push_back({begin, end, -1, 0.0, 0, 0});
  if (end - begin <= kLeaf) return id;
  int axis = 0;
  double best_spread = -1.0;
  for (std::size_t k = 0; k < dim_; ++k) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = begin; i < end; ++i) {
      lo = std::min(lo, point(order_[i], k));
      hi = std::max(hi, point(order_[i], k));
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      axis = static_cast<int>(k);
    }
  }
  if (best_spread <= 0.0) return id;  // all coincident
  std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::size_t a, std::size_t b) { return point(a, axis) < point(b, axis); });
  double split = point(order_[mid], axis);
  std::size_t left = build(begin, mid);
  std::size_t right = build(mid, end);
  nodes_[id].axis = axis;
  nodes_[id].split = split;
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

void KdTree::search(std::size_t node_id, std::span<const double> q, double& best_d2,
                    std::size_t& best) const {
  const Node& node = nodes_[node_id];
  if (node.axis < 0) {
    for (std::size_t k = node.begin; k < node.end; ++k) {
      std::size_t i = order_[k];
      double d2 = 0.0;
      for (std::size_t c = 0; c < dim_; ++c) {
        double diff = point(i, c) - q[c];
        d2 += diff * diff;
      }
      if (better(d2, i, best_d2, best)) {
        best_d2 = d2;
        best = i;
      }
    }
    return;
  }
  double diff = q[node.axis] - node.split;
  std::size_t near = diff < 0 ? node.left : node.right;
  std::size_t far = diff < 0 ? node.right : node.left;
  search(near, q, best_d2, best);
  // Ties must be visited too, hence the tolerance on the pruning test.
  if (diff * diff <= best_d2 * (1.0 + 2 * kTieRel) + 1e-300) search(far, q, best_d2, best);
}

std::size_t KdTree::nearest(std::span<const double> query) const {
  if (n_ == 0) throw ValidationError("kd-tree: empty");
  double best_d2 = std::numeric_limits<double>::infinity();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  search(0, query, best_d2, best);
  return best;
}

}  // namespace mms
