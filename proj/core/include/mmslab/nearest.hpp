#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mms {

/// Exact nearest-neighbour queries over a fixed point cloud (k-d tree).
/// Distance ties (within a relative 1e-12) resolve to the lowest index.
class KdTree {
 public:
  KdTree() = default;
  KdTree(std::size_t dim, std::span<const double> points);

  std::size_t nearest(std::span<const double> query) const;
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return n_; }

 private:
  struct Node {
    std::size_t begin, end;  // range in order_
    int axis;                // -1 for leaf
    double split;
    std::size_t left, right;
  };
  std::size_t build(std::size_t begin, std::size_t end);
  void search(std::size_t node, std::span<const double> q, double& best_d2, std::size_t& best) const;
  double point(std::size_t i, std::size_t k) const { return pts_[i * dim_ + k]; }

  std::size_t dim_ = 0, n_ = 0;
  std::vector<double> pts_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace mms
