#include "iet/mc.hpp"

#include <cmath>

namespace iet {

std::vector<Rational> sample_lengths(std::mt19937_64& rng, std::size_t d) {
  // normalized exponentials, snapped to numerators over 2^64
  std::vector<double> u(d);
  double total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    // (0,1) uniform from the high 53 bits
    double x = ((rng() >> 11) + 0.5) * 0x1p-53;
    u[i] = -std::log(x);
    total += u[i];
  }
  const BigInt denom = BigInt(1) << 64;
  std::vector<BigInt> num(d);
  BigInt acc(0);
  std::size_t largest = 0;
  for (std::size_t i = 0; i < d; ++i) {
    double frac = u[i] / total;
    num[i] = BigInt(std::ldexp(frac, 64));
    if (num[i] < 1) num[i] = 1;
    acc += num[i];
    if (u[i] > u[largest]) largest = i;
  }
  num[largest] += denom - acc;  // exact unit total
  if (num[largest] < 1) throw std::logic_error("degenerate simplex sample");
  std::vector<Rational> lens(d);
  for (std::size_t i = 0; i < d; ++i) {
    lens[i] = Rational(num[i], denom);
    lens[i].canonicalize();
  }
  return lens;
}

namespace {
double mean_of(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return v.empty() ? 0 : s / v.size();
}
double stderr_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0;
  double m = mean_of(v), s = 0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / (v.size() - 1) / v.size());
}
}  // namespace

McReport mc_full_measure(const ExperimentConfig& cfg) {
  McReport rep;
  CombinatorialData base = CombinatorialData::from_rows(cfg.top, cfg.bottom);
  const int d = static_cast<int>(base.dim());
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::vector<Rational> lens = sample_lengths(rng, d);
    McSample row;
    row.index = s;
    Iem t(base, lens);
    CocycleOrbit orbit = iterate(t, cfg.rauzy_cap);
    try {
      AccelOrbit acc(orbit, d - 1);
      row.blocks = acc.block_count();
      if (row.blocks >= cfg.depth) {
        row.enough_depth = true;
        std::vector<IMat> blocks;
        for (std::size_t k = 1; k <= cfg.depth; ++k)
          blocks.push_back(acc.z_block(k));
        AccelOrbit view(base, std::move(blocks), d - 1);
        Eigen::VectorXd lambda0(d);
        for (int i = 0; i < d; ++i) lambda0(i) = lens[i].get_d();
        RothReport roth =
            roth_diagnostics(view, lambda0, cfg.a_threshold, cfg.b_threshold,
                             cfg.c_threshold, cfg.sigma0);
        row.a_ok = roth.a.consistent;
        row.b_ok = roth.b.consistent;
        row.c_ok = roth.c.consistent;
        row.a_tail = roth.a.tail_sup;
        row.theta_tail = roth.b.tail_inf;
      }
    } catch (const InsufficientOrbit&) {
    }
    if (row.enough_depth)
      ++rep.completed;
    else
      ++rep.shallow;
    rep.samples.push_back(row);
  }
  if (rep.completed > 0) {
    for (const auto& r : rep.samples) {
      if (!r.enough_depth) continue;
      rep.frac_a += r.a_ok ? 1 : 0;
      rep.frac_b += r.b_ok ? 1 : 0;
      rep.frac_c += r.c_ok ? 1 : 0;
    }
    rep.frac_a /= rep.completed;
    rep.frac_b /= rep.completed;
    rep.frac_c /= rep.completed;
  }
  return rep;
}

LyapunovReport mc_lyapunov(const ExperimentConfig& cfg) {
  LyapunovReport rep;
  CombinatorialData base = CombinatorialData::from_rows(cfg.top, cfg.bottom);
  const int d = static_cast<int>(base.dim());
  std::mt19937_64 rng(cfg.seed);
  std::vector<double> z_norms_log2;  // pooled single-step Zorich norms
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::vector<Rational> lens = sample_lengths(rng, d);
    Iem t(base, lens);
    CocycleOrbit orbit = iterate(t, cfg.rauzy_cap);
    try {
      AccelOrbit acc(orbit, 1);
      const std::size_t kmax = std::min(cfg.zorich_depth, acc.block_count());
      if (kmax < cfg.zorich_depth) {
        ++rep.shallow;
        continue;
      }
      ++rep.completed;
      for (std::size_t k = 1; k <= kmax; ++k)
        z_norms_log2.push_back(log_big(acc.z_block(k).sup_norm()) /
                               std::log(2.0));
      double top = log_big(acc.q_prefix(kmax).sum_norm()) / kmax;
      rep.top.push_back(top);
      Eigen::VectorXd lambda0(d);
      for (int i = 0; i < d; ++i) lambda0(i) = lens[i].get_d();
      Eigen::MatrixXd hyper = mean_zero_basis(lambda0);
      double scale = 0;
      Eigen::MatrixXd tq =
          to_eigen_scaled(acc.q_prefix(kmax).transposed(), &scale);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(tq * hyper);
      double second = (scale + std::log(svd.singularValues()(0))) / kmax;
      rep.gap.push_back(top - second);
    } catch (const InsufficientOrbit&) {
      ++rep.shallow;
    }
  }
  rep.top_mean = mean_of(rep.top);
  rep.top_stderr = stderr_of(rep.top);
  rep.gap_mean = mean_of(rep.gap);
  rep.gap_stderr = stderr_of(rep.gap);
  // pooled tail statistic
  const double total = static_cast<double>(z_norms_log2.size());
  std::vector<double> xs, ys;
  for (int n = 1; n <= 16; ++n) {
    double count = 0;
    for (double z : z_norms_log2)
      if (z > n) ++count;
    if (count == 0) break;
    double log2p = std::log2(count / total);
    rep.tail.push_back({n, log2p});
    if (n >= 4 && n <= 10) {
      xs.push_back(n);
      ys.push_back(log2p);
    }
  }
  if (xs.size() >= 2) {
    // plain least squares over the requested window
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    double n = static_cast<double>(xs.size());
    rep.tail_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return rep;
}

Q47Report probe_q47(const ExperimentConfig& cfg) {
  Q47Report rep;
  CombinatorialData base = CombinatorialData::from_rows(cfg.top, cfg.bottom);
  const int d = static_cast<int>(base.dim());
  std::mt19937_64 rng(cfg.seed);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    std::vector<Rational> lens = sample_lengths(rng, d);
    Iem t(base, lens);
    CocycleOrbit orbit = iterate(t, cfg.rauzy_cap);
    double sup = 0;
    bool any = false;
    try {
      AccelOrbit acc(orbit, d - 1);
      const std::size_t kmax = std::min(cfg.depth, acc.block_count());
      for (std::size_t k = 2; k + 1 <= kmax; ++k) {
        Q47Row row;
        row.sample = s;
        row.k = k;
        row.log_z = log_big(acc.z_block(k + 1).sup_norm());
        row.log_q = log_big(acc.q_prefix(k).sum_norm());
        if (row.log_q <= 1.0) continue;
        row.c_hat = row.log_z / std::log(row.log_q);
        rep.rows.push_back(row);
        if (k >= kmax / 2) {
          sup = std::max(sup, row.c_hat);
          any = true;
        }
      }
    } catch (const InsufficientOrbit&) {
    }
    if (any) rep.tail_sup.push_back(sup);
  }
  return rep;
}

}  // namespace iet
