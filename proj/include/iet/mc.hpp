#pragma once

#include <cstdint>
#include <random>

#include "iet/roth.hpp"

namespace iet {

// Deterministic experiment description: a fixed seed and iteration order
// reproduce identical outputs byte for byte.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string top = "ABCD";
  std::string bottom = "DCBA";
  std::size_t depth = 15;        // accelerated levels (D = d-1) for verdicts
  std::size_t zorich_depth = 20;  // D = 1 levels for exponent estimates
  std::size_t rauzy_cap = 20000;  // raw induction step budget per sample
  double a_threshold = 0.25;
  double b_threshold = 0.05;
  double c_threshold = 0.25;
  double sigma0 = 0.1;
};

// Uniform-on-the-simplex lengths snapped to exact rationals with a 2^64
// denominator (induction stays exact; ties are possible but measure-rare).
std::vector<Rational> sample_lengths(std::mt19937_64& rng, std::size_t d);

struct McSample {
  std::size_t index = 0;
  bool enough_depth = false;
  std::size_t blocks = 0;
  bool a_ok = false, b_ok = false, c_ok = false;
  double a_tail = 0, theta_tail = 0;
};
struct McReport {
  std::vector<McSample> samples;
  std::size_t completed = 0, shallow = 0;
  double frac_a = 0, frac_b = 0, frac_c = 0;
};
// Verdict fractions for the three finite-horizon conditions over random
// length data (full-measure probe).
McReport mc_full_measure(const ExperimentConfig& cfg);

struct LyapunovReport {
  std::vector<double> top;   // per completed sample
  std::vector<double> gap;   // top minus the mean-zero-restricted rate
  double top_mean = 0, top_stderr = 0;
  double gap_mean = 0, gap_stderr = 0;
  // pooled tail of the single-step norms: (N, log2 P(||Z||_inf > 2^N))
  std::vector<std::pair<int, double>> tail;
  double tail_slope = 0;  // fitted over N in [4, 10]
  std::size_t completed = 0, shallow = 0;
};
LyapunovReport mc_lyapunov(const ExperimentConfig& cfg);

struct Q47Row {
  std::size_t sample = 0;
  std::size_t k = 0;
  double log_z = 0;  // ln ||Z(k+1)||_inf
  double log_q = 0;  // ln ||Q(k)||_1
  double c_hat = 0;  // log_z / ln log_q
};
struct Q47Report {
  std::vector<Q47Row> rows;
  std::vector<double> tail_sup;  // per sample: sup of c_hat over k >= K/2
};
Q47Report probe_q47(const ExperimentConfig& cfg);

}  // namespace iet
