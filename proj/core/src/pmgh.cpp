#include "mmslab/pmgh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "mmslab/errors.hpp"
#include "mmslab/space_ops.hpp"
#include "mmslab/transport_simplex.hpp"

namespace mms {

namespace {

using Rel = std::vector<std::pair<std::size_t, std::size_t>>;

// A ball (or a net of it) with local distances; pts[0] is the basepoint.
struct Snapshot {
  std::vector<std::size_t> pts;
  std::vector<double> d;
  std::vector<double> w;

  std::size_t size() const { return pts.size(); }
  double D(std::size_t i, std::size_t j) const { return d[i * pts.size() + j]; }
};

// Ball points ordered by (distance to base, index). Distances are bucketed so
// that rounding noise cannot reorder points that are symmetric about the base.
std::vector<std::size_t> ordered_ball(const PointedSpace& s, double R) {
  const double q = 1e-9 * std::max(R, 1.0);
  std::vector<std::pair<long long, std::size_t>> keyed;
  for (std::size_t i = 0; i < s.space.size(); ++i) {
    double d = s.space.distance(s.base, i);
    if (in_ball(d, R)) keyed.emplace_back(std::llround(d / q), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  out.reserve(keyed.size());
  for (const auto& [k, i] : keyed) out.push_back(i);
  return out;
}

// Greedy delta-net in ball order; fails once more than cap points are needed.
bool greedy_net(const FiniteSpace& s, const std::vector<std::size_t>& order, double delta, std::size_t cap,
                std::vector<std::size_t>& net) {
  net.clear();
  for (auto x : order) {
    bool far = true;
    for (auto y : net)
      if (s.distance(x, y) < delta * (1.0 - 1e-9)) {
        far = false;
        break;
      }
    if (!far) continue;
    if (net.size() == cap) return false;
    net.push_back(x);
  }
  return true;
}

Snapshot snapshot(const FiniteSpace& s, const std::vector<std::size_t>& ball, const std::vector<std::size_t>& net) {
  Snapshot out;
  out.pts = net;
  const std::size_t p = net.size();
  out.d.assign(p * p, 0.0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) out.d[i * p + j] = out.d[j * p + i] = s.distance(net[i], net[j]);
  out.w.assign(p, 0.0);
  if (ball.size() == net.size()) {
    for (std::size_t i = 0; i < p; ++i) out.w[i] = s.weight(net[i]);
    return out;
  }
  // Voronoi aggregation, ties to the earliest net point.
  for (auto x : ball) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p; ++k) {
      double d = s.distance(x, net[k]);
      if (d < bd - 1e-9 * std::max(1.0, bd)) {
        bd = d;
        best = k;
      }
    }
    out.w[best] += s.weight(x);
  }
  return out;
}

struct NetChoice {
  double spacing = 0.0;
  std::vector<std::size_t> net_a, net_b;
};

// Smallest spacing on the ladder R 2^{-j/2} for which both nets fit the cap.
NetChoice choose_nets(const PointedSpace& a, const std::vector<std::size_t>& oa, const PointedSpace& b,
                      const std::vector<std::size_t>& ob, double R, std::size_t cap) {
  NetChoice out;
  if (oa.size() <= cap && ob.size() <= cap) {
    out.net_a = oa;
    out.net_b = ob;
    return out;
  }
  std::vector<std::size_t> na, nb;
  for (int j = 0; j < 200; ++j) {
    double delta = R * std::pow(2.0, -0.5 * j);
    if (!greedy_net(a.space, oa, delta, cap, na) || !greedy_net(b.space, ob, delta, cap, nb)) break;
    out.spacing = delta;
    out.net_a = na;
    out.net_b = nb;
    if (na.size() == oa.size() && nb.size() == ob.size()) break;
  }
  return out;
}

// Lexicographic order on (size, weights, distances); used to make the search
// independent of argument order.
int compare(const Snapshot& x, const Snapshot& y) {
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.w.size(); ++i)
    if (x.w[i] != y.w[i]) return x.w[i] < y.w[i] ? -1 : 1;
  for (std::size_t i = 0; i < x.d.size(); ++i)
    if (x.d[i] != y.d[i]) return x.d[i] < y.d[i] ? -1 : 1;
  return 0;
}

double local_distortion(const Snapshot& P, const Snapshot& Q, const Rel& rel) {
  double m = 0.0;
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = i + 1; j < rel.size(); ++j)
      m = std::max(m, std::abs(P.D(rel[i].first, rel[j].first) - Q.D(rel[i].second, rel[j].second)));
  return 0.5 * m;
}

double local_gap(const Snapshot& P, const Snapshot& Q, const Rel& rel) {
  const std::size_t p = P.size(), q = Q.size();
  double mp = 0.0, mq = 0.0;
  for (double x : P.w) mp += x;
  for (double x : Q.w) mq += x;
  if (mp <= 0.0 && mq <= 0.0) return 0.0;
  std::vector<double> cost((p + 1) * (q + 1), std::numeric_limits<double>::infinity());
  auto C = [&](std::size_t i, std::size_t j) -> double& { return cost[i * (q + 1) + j]; };
  for (const auto& [x, y] : rel)
    for (std::size_t i = 0; i < p; ++i) {
      double da = P.D(i, x);
      for (std::size_t j = 0; j < q; ++j) C(i, j) = std::min(C(i, j), da + Q.D(y, j));
    }
  for (std::size_t i = 0; i < p; ++i) C(i, q) = 1.0;
  for (std::size_t j = 0; j < q; ++j) C(p, j) = 1.0;
  C(p, q) = 0.0;
  std::vector<double> supply(P.w), demand(Q.w);
  supply.push_back(mq);
  demand.push_back(mp);
  return solve_transport(supply, demand, cost).cost;
}

Rel dedupe(Rel rel) {
  std::sort(rel.begin(), rel.end());
  rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
  return rel;
}

struct State {
  std::vector<std::size_t> f, g;

  Rel relation() const {
    Rel r;
    for (std::size_t a = 0; a < f.size(); ++a) r.emplace_back(a, f[a]);
    for (std::size_t b = 0; b < g.size(); ++b) r.emplace_back(g[b], b);
    return dedupe(std::move(r));
  }
};

// Anchor matching: farthest-point anchors of P are matched to Q by beam
// search on pairwise-distance consistency, then every point goes to the
// candidate with the closest anchor-distance profile.
std::vector<State> beam_candidates(const Snapshot& P, const Snapshot& Q, std::size_t width = 6) {
  const std::size_t p = P.size(), q = Q.size();
  std::vector<std::size_t> anchors{0};
  std::vector<double> mind(p);
  for (std::size_t x = 0; x < p; ++x) mind[x] = P.D(0, x);
  while (anchors.size() < std::min<std::size_t>(4, p)) {
    std::size_t next = 0;
    for (std::size_t x = 1; x < p; ++x)
      if (mind[x] > mind[next]) next = x;
    if (mind[next] <= 0.0) break;
    anchors.push_back(next);
    for (std::size_t x = 0; x < p; ++x) mind[x] = std::min(mind[x], P.D(next, x));
  }

  struct Partial {
    std::vector<std::size_t> img;
    double cost;
  };
  std::vector<Partial> beam{{{0}, 0.0}};
  for (std::size_t j = 1; j < anchors.size(); ++j) {
    struct Ext {
      double cost;
      std::size_t state, b;
    };
    std::vector<Ext> ext;
    for (std::size_t s = 0; s < beam.size(); ++s)
      for (std::size_t b = 0; b < q; ++b) {
        if (std::find(beam[s].img.begin(), beam[s].img.end(), b) != beam[s].img.end()) continue;
        double c = beam[s].cost;
        for (std::size_t i = 0; i < j; ++i) c += std::abs(P.D(anchors[i], anchors[j]) - Q.D(beam[s].img[i], b));
        ext.push_back({c, s, b});
      }
    if (ext.empty()) break;
    std::stable_sort(ext.begin(), ext.end(), [](const Ext& x, const Ext& y) { return x.cost < y.cost - 1e-12; });
    std::vector<Partial> next;
    for (std::size_t k = 0; k < std::min(width, ext.size()); ++k) {
      Partial np = beam[ext[k].state];
      np.img.push_back(ext[k].b);
      np.cost = ext[k].cost;
      next.push_back(std::move(np));
    }
    beam = std::move(next);
  }

  std::vector<State> out;
  for (const auto& part : beam) {
    const std::size_t k = part.img.size();
    State st;
    st.f.assign(p, 0);
    st.g.assign(q, 0);
    for (std::size_t a = 1; a < p; ++a) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < q; ++b) {
        double c = 0.0;
        for (std::size_t i = 0; i < k; ++i) c += std::abs(P.D(a, anchors[i]) - Q.D(b, part.img[i]));
        if (c < best - 1e-12) {
          best = c;
          st.f[a] = b;
        }
      }
    }
    for (std::size_t b = 1; b < q; ++b) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t a = 0; a < p; ++a) {
        double c = 0.0;
        for (std::size_t i = 0; i < k; ++i) c += std::abs(P.D(a, anchors[i]) - Q.D(b, part.img[i]));
        if (c < best - 1e-12) {
          best = c;
          st.g[b] = a;
        }
      }
    }
    out.push_back(std::move(st));
  }
  return out;
}

// Simulated annealing on (f: P -> Q, g: Q -> P) with bases fixed. Energy is
// the relation's distortion plus half the total variation of the two
// pushforward mismatches; distortions are maintained incrementally.
class Annealer {
 public:
  Annealer(const Snapshot& P, const Snapshot& Q) : P_(P), Q_(Q), p_(P.size()), q_(Q.size()), n_(p_ + q_) {}

  void load(const State& s) {
    st_ = s;
    ea_.assign(n_, 0);
    eb_.assign(n_, 0);
    for (std::size_t a = 0; a < p_; ++a) ea_[a] = a, eb_[a] = s.f[a];
    for (std::size_t b = 0; b < q_; ++b) ea_[p_ + b] = s.g[b], eb_[p_ + b] = b;
    dev_.assign(n_ * n_, 0.0);
    rowmax_.assign(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        double v = std::abs(P_.D(ea_[i], ea_[j]) - Q_.D(eb_[i], eb_[j]));
        dev_[i * n_ + j] = dev_[j * n_ + i] = v;
        rowmax_[i] = std::max(rowmax_[i], v);
        rowmax_[j] = std::max(rowmax_[j], v);
      }
    pf_.assign(q_, 0.0);
    pg_.assign(p_, 0.0);
    for (std::size_t a = 0; a < p_; ++a) pf_[s.f[a]] += P_.w[a];
    for (std::size_t b = 0; b < q_; ++b) pg_[s.g[b]] += Q_.w[b];
    tvf_ = tvg_ = 0.0;
    for (std::size_t b = 0; b < q_; ++b) tvf_ += std::abs(pf_[b] - Q_.w[b]);
    for (std::size_t a = 0; a < p_; ++a) tvg_ += std::abs(pg_[a] - P_.w[a]);
  }

  double energy() const {
    double m = 0.0;
    for (double r : rowmax_) m = std::max(m, r);
    return 0.5 * m + 0.5 * (tvf_ + tvg_);
  }

  const State& state() const { return st_; }

  State run(std::mt19937_64& rng, std::size_t proposals, double cooling, std::size_t every) {
    State best = st_;
    double e = energy(), best_e = e;
    if (e <= 0.0 || (p_ <= 1 && q_ <= 1)) return best;
    double T = 0.1 * e + 1e-4;
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (std::size_t it = 0; it < proposals; ++it) {
      if (it > 0 && it % every == 0) T *= cooling;
      bool side_f = (q_ > 1 && p_ > 1) ? U(rng) < 0.5 : p_ > 1;
      std::size_t n_dom = side_f ? p_ : q_, n_cod = side_f ? q_ : p_;
      if (n_dom <= 1) continue;
      std::uniform_int_distribution<std::size_t> dom(1, n_dom - 1), cod(0, n_cod - 1);
      std::size_t x = dom(rng), y = 0, old_x = 0, old_y = 0;
      bool swap = n_dom > 2 && U(rng) < 0.25;
      if (swap) {
        y = dom(rng);
        if (y == x) continue;
        old_x = target(side_f, x);
        old_y = target(side_f, y);
        if (old_x == old_y) continue;
        assign(side_f, x, old_y);
        assign(side_f, y, old_x);
      } else {
        old_x = target(side_f, x);
        std::size_t nv = cod(rng);
        if (nv == old_x) continue;
        assign(side_f, x, nv);
      }
      double ne = energy();
      if (ne <= e || U(rng) < std::exp(-(ne - e) / T)) {
        e = ne;
        if (e < best_e) {
          best_e = e;
          best = st_;
          if (best_e <= 0.0) break;
        }
      } else if (swap) {
        assign(side_f, x, old_x);
        assign(side_f, y, old_y);
      } else {
        assign(side_f, x, old_x);
      }
    }
    return best;
  }

 private:
  std::size_t target(bool side_f, std::size_t x) const { return side_f ? st_.f[x] : st_.g[x]; }

  void assign(bool side_f, std::size_t x, std::size_t y) {
    if (side_f) {
      std::size_t old = st_.f[x];
      tvf_ -= std::abs(pf_[old] - Q_.w[old]) + std::abs(pf_[y] - Q_.w[y]);
      pf_[old] -= P_.w[x];
      pf_[y] += P_.w[x];
      tvf_ += std::abs(pf_[old] - Q_.w[old]) + std::abs(pf_[y] - Q_.w[y]);
      st_.f[x] = y;
      set_element(x, x, y);
    } else {
      std::size_t old = st_.g[x];
      tvg_ -= std::abs(pg_[old] - P_.w[old]) + std::abs(pg_[y] - P_.w[y]);
      pg_[old] -= Q_.w[x];
      pg_[y] += Q_.w[x];
      tvg_ += std::abs(pg_[old] - P_.w[old]) + std::abs(pg_[y] - P_.w[y]);
      st_.g[x] = y;
      set_element(p_ + x, y, x);
    }
  }

  void set_element(std::size_t k, std::size_t a, std::size_t b) {
    ea_[k] = a;
    eb_[k] = b;
    rowmax_[k] = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k) continue;
      double old = dev_[i * n_ + k];
      double v = std::abs(P_.D(ea_[i], a) - Q_.D(eb_[i], b));
      dev_[i * n_ + k] = dev_[k * n_ + i] = v;
      rowmax_[k] = std::max(rowmax_[k], v);
      if (v >= rowmax_[i]) {
        rowmax_[i] = v;
      } else if (old == rowmax_[i]) {
        double m = 0.0;
        for (std::size_t j = 0; j < n_; ++j) m = std::max(m, dev_[i * n_ + j]);
        rowmax_[i] = m;
      }
    }
  }

  const Snapshot& P_;
  const Snapshot& Q_;
  std::size_t p_, q_, n_;
  State st_;
  std::vector<std::size_t> ea_, eb_;
  std::vector<double> dev_, rowmax_, pf_, pg_;
  double tvf_ = 0.0, tvg_ = 0.0;
};

struct Solved {
  double distortion = 0.0, gap = 0.0;
  Rel rel;
  double value() const { return distortion + gap; }
};

Solved evaluate(const Snapshot& P, const Snapshot& Q, Rel rel) {
  Solved s;
  s.rel = std::move(rel);
  s.distortion = local_distortion(P, Q, s.rel);
  s.gap = local_gap(P, Q, s.rel);
  return s;
}

Solved anneal(const Snapshot& P, const Snapshot& Q, const PmghOptions& o, std::uint64_t seed) {
  std::vector<State> inits = beam_candidates(P, Q);
  std::vector<std::pair<double, std::size_t>> ranked;
  {
    Annealer probe(P, Q);
    for (std::size_t i = 0; i < inits.size(); ++i) {
      probe.load(inits[i]);
      ranked.emplace_back(probe.energy(), i);
    }
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  const std::size_t restarts = std::max<std::size_t>(1, o.restarts);
  std::vector<Solved> results(restarts);
  auto job = [&](std::size_t r) {
    Annealer an(P, Q);
    const State& init = inits[ranked[r % ranked.size()].second];
    an.load(init);
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (r + 1));
    State best = an.run(rng, o.proposals, o.cooling, std::max<std::size_t>(1, o.cooling_every));
    Solved a = evaluate(P, Q, init.relation());
    Solved b = evaluate(P, Q, best.relation());
    results[r] = b.value() < a.value() ? std::move(b) : std::move(a);
  };
  std::size_t threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  threads = std::min(threads, restarts);
  if (threads <= 1) {
    for (std::size_t r = 0; r < restarts; ++r) job(r);
  } else {
    for (std::size_t start = 0; start < restarts; start += threads) {
      std::vector<std::thread> pool;
      for (std::size_t r = start; r < std::min(restarts, start + threads); ++r) pool.emplace_back(job, r);
      for (auto& t : pool) t.join();
    }
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r)
    if (results[r].value() < results[best].value()) best = r;
  return results[best];
}

// Depth-first search over every relation containing the base pair and
// covering both sides. Distortion never decreases as pairs are added, which
// bounds the search; the transport term is evaluated at the leaves.
class Exhaustive {
 public:
  Exhaustive(const Snapshot& P, const Snapshot& Q, std::size_t budget, Solved incumbent)
      : P_(P), Q_(Q), p_(P.size()), q_(Q.size()), budget_(budget), best_(std::move(incumbent)) {
    bound_ = std::min(best_.value(), 1.0);
    // every relation creates or destroys at least the total mass difference
    double mp = 0.0, mq = 0.0;
    for (double x : P.w) mp += x;
    for (double x : Q.w) mq += x;
    floor_ = std::abs(mp - mq);
    cov_a_.assign(p_, 0);
    cov_b_.assign(q_, 0);
    rel_.emplace_back(0, 0);
    cov_a_[0] = cov_b_[0] = 1;
  }

  Solved run() {
    visit(1, 0.0);
    return best_;
  }

 private:
  void visit(std::size_t k, double dist) {
    if (++nodes_ > budget_) throw BudgetExceeded("pmgh: exhaustive node budget exhausted");
    if (dist + floor_ >= bound_) return;
    if (k == p_ * q_) {
      for (std::size_t b = 0; b < q_; ++b)
        if (!cov_b_[b]) return;
      Solved s{dist, local_gap(P_, Q_, rel_), rel_};
      if (s.value() < bound_) {
        bound_ = s.value();
        best_ = std::move(s);
      }
      return;
    }
    const std::size_t a = k / q_, b = k % q_;
    double nd = dist;
    for (const auto& [x, y] : rel_) nd = std::max(nd, 0.5 * std::abs(P_.D(a, x) - Q_.D(b, y)));
    if (nd + floor_ < bound_) {
      rel_.emplace_back(a, b);
      ++cov_a_[a];
      ++cov_b_[b];
      visit(k + 1, nd);
      rel_.pop_back();
      --cov_a_[a];
      --cov_b_[b];
    }
    if (b == q_ - 1 && !cov_a_[a]) return;
    if (a == p_ - 1 && !cov_b_[b]) return;
    visit(k + 1, dist);
  }

  const Snapshot& P_;
  const Snapshot& Q_;
  std::size_t p_, q_, budget_, nodes_ = 0;
  Solved best_;
  double bound_, floor_ = 0.0;
  Rel rel_;
  std::vector<int> cov_a_, cov_b_;
};

Rel to_local(const PointedSpace& a, const PointedSpace& b, const Correspondence& corr,
             const std::vector<std::size_t>& ba, const std::vector<std::size_t>& bb) {
  std::vector<std::size_t> la(a.space.size(), SIZE_MAX), lb(b.space.size(), SIZE_MAX);
  for (std::size_t i = 0; i < ba.size(); ++i) la[ba[i]] = i;
  for (std::size_t j = 0; j < bb.size(); ++j) lb[bb[j]] = j;
  Rel rel;
  std::vector<char> ca(ba.size(), 0), cb(bb.size(), 0);
  bool has_base = false;
  for (const auto& [x, y] : corr.pairs) {
    if (x >= a.space.size() || y >= b.space.size()) throw ValidationError("correspondence index out of range");
    if (la[x] == SIZE_MAX || lb[y] == SIZE_MAX) continue;
    rel.emplace_back(la[x], lb[y]);
    ca[la[x]] = cb[lb[y]] = 1;
    if (x == a.base && y == b.base) has_base = true;
  }
  if (!has_base) throw ValidationError("correspondence lacks the basepoint pair");
  if (std::find(ca.begin(), ca.end(), 0) != ca.end() || std::find(cb.begin(), cb.end(), 0) != cb.end())
    throw ValidationError("correspondence does not cover both balls");
  return dedupe(std::move(rel));
}

Snapshot raw_snapshot(const PointedSpace& s, double R, std::vector<std::size_t>& ball) {
  ball = ordered_ball(s, R);
  return snapshot(s.space, ball, ball);
}

}  // namespace

double distortion(const PointedSpace& a, const PointedSpace& b, const Correspondence& corr, double R) {
  std::vector<std::size_t> ba, bb;
  Snapshot P = raw_snapshot(a, R, ba), Q = raw_snapshot(b, R, bb);
  return local_distortion(P, Q, to_local(a, b, corr, ba, bb));
}

double measure_gap(const PointedSpace& a, const PointedSpace& b, const Correspondence& corr, double R) {
  std::vector<std::size_t> ba, bb;
  Snapshot P = raw_snapshot(a, R, ba), Q = raw_snapshot(b, R, bb);
  return local_gap(P, Q, to_local(a, b, corr, ba, bb));
}

PmghEstimate pmgh_distance(const PointedSpace& a, const PointedSpace& b, const PmghOptions& o) {
  if (o.radii.empty()) throw ValidationError("pmgh: empty radius grid");
  for (double R : o.radii)
    if (!(R > 0.0)) throw ValidationError("pmgh: radii must be positive");
  if (o.max_ball_points < 2) throw ValidationError("pmgh: max_ball_points must be >= 2");

  PmghEstimate est;
  bool all_exact = true;
  for (std::size_t k = 0; k < o.radii.size(); ++k) {
    const double R = o.radii[k];
    PmghTerm term;
    term.radius = R;
    term.weight = std::ldexp(1.0, -static_cast<int>(k + 1));
    auto oa = ordered_ball(a, R), ob = ordered_ball(b, R);
    term.ball_a = oa.size();
    term.ball_b = ob.size();
    const bool small = oa.size() <= o.exhaustive_limit && ob.size() <= o.exhaustive_limit;
    if (o.mode == PmghMode::exhaustive && !small)
      throw BudgetExceeded("pmgh: ball too large for exhaustive mode");
    term.exhaustive = o.mode == PmghMode::exhaustive || (o.mode == PmghMode::automatic && small);

    NetChoice nets = term.exhaustive ? NetChoice{0.0, oa, ob} : choose_nets(a, oa, b, ob, R, o.max_ball_points);
    term.net_spacing = nets.spacing;
    Snapshot SA = snapshot(a.space, oa, nets.net_a), SB = snapshot(b.space, ob, nets.net_b);
    const int order = compare(SA, SB);
    const bool swapped = order > 0;
    const Snapshot& P = swapped ? SB : SA;
    const Snapshot& Q = swapped ? SA : SB;

    Solved best;
    if (order == 0) {
      for (std::size_t i = 0; i < P.size(); ++i) best.rel.emplace_back(i, i);
    } else {
      best = anneal(P, Q, o, o.seed + 7919 * k);
      if (term.exhaustive) {
        try {
          best = Exhaustive(P, Q, o.exhaustive_nodes, best).run();
        } catch (const BudgetExceeded&) {
          if (o.mode == PmghMode::exhaustive) throw;
          term.exhaustive = false;  // keep the annealed upper bound
        }
      }
    }
    term.distortion = best.distortion;
    term.measure_gap = best.gap;
    term.term = std::min(1.0, best.value());
    for (const auto& [x, y] : best.rel) {
      std::size_t u = P.pts[x], v = Q.pts[y];
      term.certificate.pairs.emplace_back(swapped ? v : u, swapped ? u : v);
    }
    std::sort(term.certificate.pairs.begin(), term.certificate.pairs.end());
    if (!term.exhaustive || term.net_spacing > 0.0) all_exact = false;
    est.value += term.weight * term.term;
    est.terms.push_back(std::move(term));
  }
  if (all_exact) est.lower_bound = est.value;
  return est;
}

std::string to_string(Trend t) {
  switch (t) {
    case Trend::decreasing: return "decreasing";
    case Trend::increasing: return "increasing";
    case Trend::constant: return "constant";
    case Trend::none: return "none";
  }
  return "?";
}

Trend classify_trend(const std::vector<double>& v) {
  constexpr double tol = 1e-12;
  if (v.empty()) return Trend::none;
  bool dec = true, inc = true, cst = true;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1] + tol) dec = false;
    if (v[i] < v[i - 1] - tol) inc = false;
    if (std::abs(v[i] - v[0]) > tol) cst = false;
  }
  if (cst) return Trend::constant;
  if (dec) return Trend::decreasing;
  if (inc) return Trend::increasing;
  return Trend::none;
}

ConvergenceTable convergence_diagnostic(const std::vector<PointedSpace>& seq, const PointedSpace& target,
                                        const PmghOptions& o) {
  ConvergenceTable t;
  for (const auto& s : seq) t.values.push_back(pmgh_distance(s, target, o).value);
  t.trend = classify_trend(t.values);
  return t;
}

}  // namespace mms
