#pragma once

#include <Eigen/Dense>

#include "iet/accel.hpp"

namespace iet {

// S(k,l) acting on interval-wise constants: the transpose of Q(k,l).
IMat gamma_cocycle(const AccelOrbit& accel, std::size_t k, std::size_t l);

// ln ||Q(k,l)||_1 (sum norm), exact big-int norm, log in double.
double log_q_norm1(const AccelOrbit& accel, std::size_t k, std::size_t l);

// Least-squares slope of y against x over the second half of the samples.
double fit_tail_slope(const std::vector<double>& x,
                      const std::vector<double>& y);

struct ConditionA {
  std::vector<double> ratio;  // ratio[k-1] = ln||Z(k+1)||_1 / ln||Q(k)||_1
  double tail_sup = 0;        // sup over k in [K/2, K]
  bool consistent = false;    // tail_sup below threshold
};
ConditionA condition_a(const AccelOrbit& accel, double threshold = 0.25);

struct ConditionB {
  std::vector<double> theta_hat;  // theta_hat[k-1] at level k
  double tail_inf = 0;            // inf over k in [K/2, K]
  bool consistent = false;        // tail_inf above threshold
};
// lambda0: length vector at level 0 (any positive scale).
ConditionB condition_b(const AccelOrbit& accel,
                       const Eigen::VectorXd& lambda0,
                       double threshold = 0.05);

struct StableSpace {
  Eigen::MatrixXd basis;       // d x s, orthonormal; s may be 0
  Eigen::MatrixXd complement;  // d x (d-s), orthonormal
  std::vector<double> log_singular;  // ln(all singular values of tQ(0,L))
  double delta_angle = 0;      // sine of the angle between delta and the span
  std::size_t level = 0;
  bool empty = false;
};
// Finite-horizon stable space at level 0: right singular vectors of tQ(0,L)
// with singular value <= ||Q(L)||_1^{-sigma0}. delta: translation direction
// at level 0 (used for the containment check; pass the zero vector to skip).
StableSpace stable_space(const AccelOrbit& accel, std::size_t L, double sigma0,
                         const Eigen::VectorXd& delta);

struct CNormRow {
  std::size_t k = 0, l = 0;
  double log_inv_quotient = 0;  // ln ||(S_flat(k,l))^{-1}||
  double log_restricted = 0;    // ln ||S(k,l) restricted to the stable space||
  double log_q = 0;             // ln ||Q(l)||_1
  bool ill_conditioned = false;
};
struct ConditionC {
  std::vector<CNormRow> rows;
  double exp_inv_quotient = 0;  // fitted exponents vs ln||Q(l)||
  double exp_restricted = 0;
  bool consistent = false;
};
ConditionC condition_c(const AccelOrbit& accel,
                       const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                       const StableSpace& stable, double threshold = 0.25);

struct RothReport {
  ConditionA a;
  ConditionB b;
  ConditionC c;
  StableSpace stable;
  std::vector<double> balance_ratio;  // max/min length ratio per level
};
// Full battery at D = d-1 defaults. lambda0 in doubles (length-driven orbits
// use their own level-0 lengths).
RothReport roth_diagnostics(const AccelOrbit& accel,
                            const Eigen::VectorXd& lambda0,
                            double a_threshold = 0.25,
                            double b_threshold = 0.05,
                            double c_threshold = 0.25, double sigma0 = 0.1);

// Orthonormal basis of the hyperplane {v : <lambda0, v> = 0}.
Eigen::MatrixXd mean_zero_basis(const Eigen::VectorXd& lambda0);

// Orthonormal complement of an orthonormal d x s basis.
Eigen::MatrixXd orth_complement(const Eigen::MatrixXd& basis, int d);

}  // namespace iet
