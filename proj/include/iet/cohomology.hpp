#pragma once

#include "iet/birkhoff.hpp"
#include "iet/roth.hpp"

namespace iet {

struct SeriesDiverging : std::runtime_error {
  explicit SeriesDiverging(const std::string& what)
      : std::runtime_error(what) {}
};

// Exact mean-zero cascade: starting from the primitive with interval means
// removed, repeatedly push one acceleration step forward and split off the
// new interval means. chi[l] is the Gamma component produced at level l+1...
struct Cascade {
  std::vector<Rational> mean0;             // interval means of the input
  std::vector<std::vector<Rational>> chi;  // chi[l-1] at level l, l = 1..L
  std::vector<PiecewiseFunc> remainder;    // remainder[l] on level l, 0..L
};
Cascade run_cascade(const AccelOrbit& accel, const PiecewiseFunc& big_phi,
                    std::size_t levels);

struct SolveOptions {
  std::size_t series_depth = 0;   // 0: deepest level with ||Q||_1 < 1e18
  std::size_t stable_level = 0;   // 0: deepest level with ||Q||_1 < 1e15
  double tile_budget = 4e5;       // cap on the total return-word length
  double sigma0 = 0.1;
  double ill_cond_tol = 1e-8;
  long psi_horizon = 10000;       // orbit length for the transfer samples
  std::size_t minmax_level = 0;   // 0: deepest level with ||Q||_1 < 1e9
  bool cross_check = true;
};

struct SolveReport {
  std::vector<double> chi;       // obstruction, stable components removed
  double chi_uncertainty = 0;    // vs. the depth-(L-1) result
  std::vector<double> term_norms;  // per-level series term sizes
  std::vector<double> decay;       // ||S(k)(Phi-chi)||_inf, k = 0..
  std::vector<double> decay_raw;   // ||S(k)Phi||_inf
  std::vector<double> log_q;       // ln||Q(k)||_1 alongside the decay rows
  double omega_hat = 0;            // fitted decay exponent
  std::vector<std::pair<long, double>> psi;  // (n, Psi(T^n x0)), Psi(x0) = 0
  double sup_bound = 0;            // observed sup |Psi| on the orbit
  Rational base_point;
  std::vector<double> chi_minmax;  // independent min-max cross-check
  double cross_distance = 0;       // distance of the two chis mod the stable space
  bool ill_conditioned = false;
  std::size_t depth_used = 0;
};

// Constructive solver for Psi - Psi o T = Phi - chi with Phi in BV^1_*
// given as an exact piecewise polynomial on the level-0 layout.
SolveReport solve_cohomological(const AccelOrbit& accel,
                                const PiecewiseFunc& big_phi,
                                const SolveOptions& opt = {});

struct HigherReport {
  PiecewiseFunc chi;           // piecewise polynomial obstruction, degree < r
  SolveReport base;            // report of the final constant-level solve
  std::vector<double> chi_derivative_gap;  // |D chi - chi_{r-1}| per interval
  // continuity probe of Psi: pairs (|x-y|, |Psi(x)-Psi(y)|) over close orbit
  // points, and the implied Lipschitz-type quotient.
  std::vector<std::pair<double, double>> continuity_pairs;
  double continuity_quotient = 0;
};

// Higher-smoothness solver, r in {2, 3}: recursively solves for the
// derivative, takes primitives and absorbs the residual into constants.
HigherReport solve_higher(const AccelOrbit& accel, const PiecewiseFunc& big_phi,
                          int r, const SolveOptions& opt = {});

// Validates membership in BV^r_*: continuity of Phi, ..., D^{r-1}Phi inside
// the intervals and exact zero mean of D^l Phi for 0 < l <= r.
void validate_bv_r(const PiecewiseFunc& big_phi, int r);

// Base point for transfer-function sampling: left endpoint of the shortest
// interval of the deepest usable level whose forward orbit avoids the
// interior top endpoints for `horizon` steps.
Rational pick_base_point(const AccelOrbit& accel, std::size_t level,
                         long horizon);

}  // namespace iet
