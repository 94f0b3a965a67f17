#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mmslab/space.hpp"
#include "mmslab/transport.hpp"

namespace mms {

struct RenyiEnergy {
  /// -sum_{w(i)>0} rho(i)^{1-1/N'} w(i), with rho = mu / w.
  double energy = 0.0;
  /// Mass of mu on zero-weight points (excluded from the energy).
  double singular_mass = 0.0;
  /// m({rho > 0})
  double support_measure = 0.0;
};

RenyiEnergy renyi_energy(const FiniteSpace& space, const Measure& mu, double n_prime);

struct CdOptions {
  double K = 0.0;
  double N = 1.0;
  std::vector<double> t_grid{0.25, 0.5, 0.75};
  /// Empty selects {N, N+1, 2N}.
  std::vector<double> n_prime_grid;
  /// Verdict tolerance; unset selects 5 * resolution * diameter.
  std::optional<double> tolerance;
  /// Search every vertex-optimal plan (supports of at most 12 points) for one
  /// that satisfies the inequality.
  bool exhaustive = false;
  std::size_t geodesic_samples = 8;
};

struct CdRow {
  double t = 0.0, n_prime = 0.0;
  double lhs = 0.0, rhs = 0.0, slack = 0.0;
  double singular_mass = 0.0;
};

struct CdReport {
  enum class Verdict { holds, violated, inconclusive };
  double K = 0.0, N = 1.0;
  double tolerance = 0.0;
  std::vector<CdRow> rows;
  Verdict verdict = Verdict::inconclusive;
  /// Worst grid point (meaningful when rows is nonempty).
  CdRow worst;
  double transport_cost = 0.0;
  std::size_t plans_examined = 1;
  bool enumeration_complete = true;
  double geodesic_defect = 0.0;
  std::size_t flagged_paths = 0;
  std::string note;
};

std::string to_string(CdReport::Verdict v);

/// Evaluates the CD*(K,N) entropy inequality along the computed optimal
/// geodesic plan from mu0 to mu1 on every (t, N') grid point:
///   LHS = -sum rho_t^{1-1/N'} w,
///   RHS = -sum_{atoms} gamma_ij [sigma^{(1-t)}(d_ij) rho_0(i)^{-1/N'} + sigma^{(t)}(d_ij) rho_1(j)^{-1/N'}],
///   slack = RHS - LHS.
/// A "violated" verdict concerns the computed plan only; the condition asks
/// for existence of some optimal plan. Throws ValidationError when mu0 or mu1
/// charges a zero-weight point (no density).
CdReport cdstar_check(const FiniteSpace& space, const Measure& mu0, const Measure& mu1, const CdOptions& options);

struct ProlongRow {
  double t = 0.0;
  /// m(E_t) / m(B_R(x0)), E_t = {rho_t > 0}
  double ratio = 0.0;
  /// -sum rho_t^{1-1/N} w
  double entropy = 0.0;
  /// -m(E_t)^{1/N}, a lower bound for the entropy
  double jensen_bound = 0.0;
  /// -sum gamma sigma^{(1-t)}_{K,N}(d) rho_0^{-1/N}: the one-sided right-hand side
  double rhs = 0.0;
};

struct ProlongOptions {
  double K = 0.0;
  double N = 2.0;
  std::vector<double> t_grid{0.1, 0.3, 0.5};
  /// Times whose E_t are unioned for the coverage fraction; empty selects k/100, k = 1..99.
  std::vector<double> coverage_grid;
};

struct ProlongReport {
  std::size_t center = 0;
  double radius = 0.0;
  double ball_mass = 0.0;
  std::vector<ProlongRow> rows;
  /// m(B_R(x0) intersected with the union of E_t over the coverage grid) / m(B_R(x0))
  double coverage = 0.0;
};

/// Transports the normalized ball measure m|B_R(x0) onto the Dirac at x0 and
/// tracks how much of the ball is swept by interior points of the transport
/// geodesics.
ProlongReport prolongability_experiment(const FiniteSpace& space, std::size_t x0, double R,
                                        const ProlongOptions& options = {});

}  // namespace mms
