#include "iet/cohomology.hpp"

#include <algorithm>
#include <cmath>

namespace iet {

namespace {

std::vector<Rational> snap(const std::vector<double>& v) {
  std::vector<Rational> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

std::size_t auto_level(const AccelOrbit& accel, double log_cap) {
  std::size_t lvl = 0;
  for (std::size_t k = 1; k <= accel.block_count(); ++k) {
    if (log_big(accel.q_prefix(k).sum_norm()) < log_cap)
      lvl = k;
    else
      break;
  }
  return lvl;
}

Eigen::VectorXd to_vec(const std::vector<Rational>& v) {
  Eigen::VectorXd r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r(i) = v[i].get_d();
  return r;
}

}  // namespace

void validate_bv_r(const PiecewiseFunc& big_phi, int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("r must be 1, 2 or 3");
  big_phi.check_tiling();
  PiecewiseFunc f = big_phi;
  for (int l = 0; l < r; ++l) {
    if (!f.continuous_within_intervals())
      throw std::invalid_argument(
          "derivative of order " + std::to_string(l) +
          " must be continuous inside every interval");
    f = f.derivative();
    if (!(f.integral() == 0))
      throw std::invalid_argument("derivative of order " + std::to_string(l + 1) +
                                  " must have zero mean");
  }
}

Cascade run_cascade(const AccelOrbit& accel, const PiecewiseFunc& big_phi,
                    std::size_t levels) {
  Cascade cas;
  cas.mean0 = big_phi.means();
  PiecewiseFunc cur = big_phi;
  std::vector<Rational> neg = cas.mean0;
  for (auto& v : neg) v = -v;
  cur.add_constants(neg);
  cas.remainder.push_back(cur);
  for (std::size_t l = 0; l < levels; ++l) {
    MeanZeroSplit split = project_mean_zero(accel, l, cas.remainder.back());
    // chi lands in the kernel of the level-(l+1) mass form
    Rational mass(0);
    const auto& lam = accel.lambda_level(l + 1);
    for (std::size_t id = 0; id < lam.size(); ++id)
      mass += lam[id] * split.gamma[id];
    if (mass != 0)
      throw std::logic_error("cascade Gamma component escaped the kernel");
    cas.chi.push_back(split.gamma);
    cas.remainder.push_back(std::move(split.remainder));
  }
  return cas;
}

Rational pick_base_point(const AccelOrbit& accel, std::size_t level,
                         long horizon) {
  Iem deep = accel.level_iem(level);
  Iem base = accel.level_iem(0);
  const int d = static_cast<int>(accel.dim());
  // candidates: left endpoints of the deepest level, shortest interval first
  std::vector<int> ids(d);
  for (int i = 0; i < d; ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return deep.length(a) < deep.length(b);
  });
  for (int id : ids) {
    Rational x = deep.left(0, id);
    if (x == 0) continue;  // endpoint of the whole interval
    bool clean = true;
    Rational y = x;
    for (long i = 0; i < horizon && clean; ++i) {
      for (int s = 0; s < d; ++s)
        if (base.combo().pos(0, s) > 0 && y == base.left(0, s)) {
          clean = false;
          break;
        }
      y = base.evaluate(y);
    }
    if (clean) return x;
  }
  // fall back to an interior midpoint
  return deep.left(0, ids[0]) + deep.length(ids[0]) / 2;
}

SolveReport solve_cohomological(const AccelOrbit& accel,
                                const PiecewiseFunc& big_phi,
                                const SolveOptions& opt) {
  validate_bv_r(big_phi, 1);
  if (!accel.length_driven())
    throw std::logic_error("solver needs a length-driven orbit");
  const int d = static_cast<int>(accel.dim());

  SolveReport rep;
  std::size_t L = opt.series_depth ? opt.series_depth
                                   : auto_level(accel, std::log(1e18));
  L = std::min(L, accel.block_count() > 0 ? accel.block_count() - 1
                                          : std::size_t(0));
  // materialization cost cap: the cascade walks every return word once
  {
    double cost = 0;
    std::size_t feasible = 0;
    for (std::size_t l = 1; l <= L; ++l) {
      cost += to_double(accel.z_block(l).sum_norm());
      if (cost > opt.tile_budget) break;
      feasible = l;
    }
    L = std::min(L, feasible);
  }
  if (L < 2) throw InsufficientOrbit("need at least two usable levels");
  rep.depth_used = L;

  Cascade cas = run_cascade(accel, big_phi, L);

  // finite-horizon stable space at level 0
  std::size_t stable_lvl = opt.stable_level
                               ? opt.stable_level
                               : std::min(accel.block_count(),
                                          auto_level(accel, std::log(1e15)));
  Eigen::VectorXd delta(d);
  {
    Iem t0 = accel.level_iem(0);
    for (int i = 0; i < d; ++i) delta(i) = t0.translation()[i].get_d();
  }
  StableSpace stable = stable_space(accel, stable_lvl, opt.sigma0, delta);
  const Eigen::MatrixXd& b0 = stable.basis;
  const Eigen::MatrixXd& c0 = stable.complement;

  // series terms: u_l solves the quotient cocycle against chi_l
  Eigen::VectorXd chi_acc = to_vec(cas.mean0);
  Eigen::VectorXd chi_prev_acc = chi_acc;
  for (std::size_t l = 1; l <= L; ++l) {
    double scale0l = 0;
    Eigen::MatrixXd tq0l =
        to_eigen_scaled(accel.q_prefix(l).transposed(), &scale0l);
    Eigen::MatrixXd bl, cl;
    if (b0.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(tq0l * b0);
      bl = Eigen::MatrixXd(qr.householderQ()).leftCols(b0.cols());
    } else {
      bl.resize(d, 0);
    }
    cl = orth_complement(bl, d);
    Eigen::MatrixXd mflat = cl.transpose() * tq0l * c0;
    Eigen::VectorXd rhs = cl.transpose() * to_vec(cas.chi[l - 1]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> solver(mflat);
    if (solver.rank() < mflat.cols()) {
      rep.ill_conditioned = true;
      break;
    }
    Eigen::VectorXd u = solver.solve(rhs);
    double resid = (mflat * u - rhs).norm();
    // undo the matrix scaling: true term is (tq0l*scale)^{-1}-sized
    Eigen::VectorXd term = c0 * (u * std::exp(-scale0l));
    // conditioning only matters while the term still moves the answer
    if (rhs.norm() > 0 && resid > opt.ill_cond_tol * rhs.norm() &&
        term.norm() > 1e-12 * (chi_acc.norm() + 1.0))
      rep.ill_conditioned = true;
    rep.term_norms.push_back(term.lpNorm<Eigen::Infinity>());
    if (l < L) chi_prev_acc += term;
    chi_acc += term;
  }

  // Cauchy test on the series tail
  if (rep.term_norms.size() >= 4) {
    double head = 0, tail = 0;
    for (std::size_t i = 0; i < rep.term_norms.size() / 2; ++i)
      head = std::max(head, rep.term_norms[i]);
    for (std::size_t i = rep.term_norms.size() / 2; i < rep.term_norms.size();
         ++i)
      tail = std::max(tail, rep.term_norms[i]);
    if (tail > head && tail > 1e-12)
      throw SeriesDiverging("series terms are not decaying");
  }

  // remove stable components and store
  auto strip = [&](Eigen::VectorXd v) {
    if (b0.cols() > 0) v -= b0 * (b0.transpose() * v);
    return v;
  };
  Eigen::VectorXd chi_hat = strip(chi_acc);
  Eigen::VectorXd chi_hat_prev = strip(chi_prev_acc);
  rep.chi.assign(chi_hat.data(), chi_hat.data() + d);
  rep.chi_uncertainty = (chi_hat - chi_hat_prev).lpNorm<Eigen::Infinity>();

  // decay of the materialized special sums, exact cascade on Phi - chi
  std::vector<Rational> chi_exact = snap(rep.chi);
  {
    PiecewiseFunc good = big_phi;
    std::vector<Rational> neg = chi_exact;
    for (auto& v : neg) v = -v;
    good.add_constants(neg);
    PiecewiseFunc raw = big_phi;
    rep.decay.push_back(good.sup_norm());
    rep.decay_raw.push_back(raw.sup_norm());
    rep.log_q.push_back(0.0);
    for (std::size_t k = 1; k <= L; ++k) {
      good = special_sum_step(accel, k - 1, good);
      raw = special_sum_step(accel, k - 1, raw);
      rep.decay.push_back(good.sup_norm());
      rep.decay_raw.push_back(raw.sup_norm());
      rep.log_q.push_back(log_big(accel.q_prefix(k).sum_norm()));
    }
    // fit only over the decaying range: past the accuracy floor of chi the
    // residual is re-amplified by the cocycle
    std::size_t kmin = 0;
    for (std::size_t k = 1; k < rep.decay.size(); ++k)
      if (rep.decay[k] < rep.decay[kmin]) kmin = k;
    std::vector<double> lx, ly;
    for (std::size_t k = 1; k <= kmin; ++k) {
      if (rep.decay[k] <= 0) break;
      lx.push_back(rep.log_q[k]);
      ly.push_back(std::log(rep.decay[k]));
    }
    rep.omega_hat = -fit_tail_slope(lx, ly);
  }

  // transfer function on the orbit of a clean base point
  rep.base_point = pick_base_point(accel, std::min(L, stable_lvl),
                                   std::min<long>(opt.psi_horizon, 2000));
  {
    Iem t0 = accel.level_iem(0);
    PiecewiseFunc good = big_phi;
    std::vector<Rational> neg = chi_exact;
    for (auto& v : neg) v = -v;
    good.add_constants(neg);
    Rational y = rep.base_point;
    Rational acc(0);
    const long stride = std::max<long>(1, opt.psi_horizon / 1000);
    for (long i = 0; i < opt.psi_horizon; ++i) {
      acc += good.eval(y);
      y = t0.evaluate(y);
      double psi_val = -acc.get_d();  // Psi(T^{n}x0) - Psi(x0) = -S_n
      rep.sup_bound = std::max(rep.sup_bound, std::fabs(psi_val));
      if ((i + 1) % stride == 0 || i + 1 == opt.psi_horizon)
        rep.psi.push_back({i + 1, psi_val});
    }
  }

  // independent cross-check: min-max fit of the Gamma action at one level
  if (opt.cross_check) {
    std::size_t km = opt.minmax_level ? opt.minmax_level
                                      : auto_level(accel, std::log(1e9));
    km = std::min(km, L);
    PiecewiseFunc sphi = special_sum_function(accel, 0, km, big_phi);
    IMat q0k = accel.q_prefix(km);
    std::vector<double> bvals;
    std::vector<int> bsyms;
    for (int sym = 0; sym < d; ++sym)
      for (const auto& p : sphi.pieces(sym)) {
        for (double frac : {0.0, 0.5, 0.999}) {
          double x = p.lo.get_d() +
                     frac * (p.hi.get_d() - p.lo.get_d());
          bvals.push_back(p.poly.eval_d(x));
          bsyms.push_back(sym);
        }
      }
    const std::size_t rows = bvals.size();
    Eigen::MatrixXd a(rows, c0.cols());
    Eigen::VectorXd b(rows);
    double qscale = 0;
    Eigen::MatrixXd tq = to_eigen_scaled(q0k.transposed(), &qscale);
    Eigen::MatrixXd tq_c0 = tq * c0;
    for (std::size_t r = 0; r < rows; ++r) {
      a.row(r) = tq_c0.row(bsyms[r]);
      b(r) = bvals[r] * std::exp(-qscale);
    }
    // Lawson iteration for the Chebyshev fit
    Eigen::VectorXd w = Eigen::VectorXd::Ones(rows);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(c0.cols());
    for (int it = 0; it < 40; ++it) {
      Eigen::MatrixXd aw = w.asDiagonal() * a;
      Eigen::VectorXd bw = w.asDiagonal() * b;
      u = aw.colPivHouseholderQr().solve(bw);
      Eigen::VectorXd r = (a * u - b).cwiseAbs();
      double rmax = r.maxCoeff();
      if (rmax <= 0) break;
      for (std::size_t i = 0; i < rows; ++i)
        w(i) = std::sqrt(w(i) * w(i) * (r(i) / rmax + 1e-12));
      w /= w.maxCoeff();
    }
    Eigen::VectorXd chi_mm = strip(c0 * u);
    rep.chi_minmax.assign(chi_mm.data(), chi_mm.data() + d);
    rep.cross_distance = (chi_mm - chi_hat).lpNorm<Eigen::Infinity>();
  }
  return rep;
}

HigherReport solve_higher(const AccelOrbit& accel, const PiecewiseFunc& big_phi,
                          int r, const SolveOptions& opt) {
  if (r < 2 || r > 3) throw std::invalid_argument("solve_higher needs r in {2,3}");
  validate_bv_r(big_phi, r);
  HigherReport rep;
  const int d = static_cast<int>(accel.dim());
  const Layout& lay = big_phi.layout();

  // obstruction of the derivative, one smoothness level down
  PiecewiseFunc dphi = big_phi.derivative();
  PiecewiseFunc chi_lower(lay);
  if (r == 2) {
    SolveReport base = solve_cohomological(accel, dphi, opt);
    chi_lower = PiecewiseFunc::constants(lay, snap(base.chi));
  } else {
    HigherReport lower = solve_higher(accel, dphi, r - 1, opt);
    chi_lower = lower.chi;
  }
  // the numerical lower obstruction carries a tiny mass defect; remove the
  // global constant so the residual is exactly mean-zero at the next level
  // (constants are re-absorbed by the final solve)
  {
    Rational mass = chi_lower.integral() / lay.total;
    std::vector<Rational> shift(lay.dim(), -mass);
    chi_lower.add_constants(shift);
  }

  // primitive of the lower obstruction with interval-mean-zero constants
  PiecewiseFunc chi0 = chi_lower.primitive_mean_zero();

  // absorb the residual into constants by solving at the bottom level
  PiecewiseFunc residual = big_phi - chi0;
  SolveReport base = solve_cohomological(accel, residual, opt);
  PiecewiseFunc chi = chi0;
  chi.add_constants(snap(base.chi));
  rep.chi = chi;

  // D chi should reproduce the lower obstruction exactly
  PiecewiseFunc gap = chi.derivative() - chi_lower;
  for (int sym = 0; sym < d; ++sym) {
    double g = 0;
    for (const auto& p : gap.pieces(sym))
      g = std::max({g, std::fabs(p.poly.eval_d(p.lo.get_d())),
                    std::fabs(p.poly.eval_d(p.hi.get_d()))});
    rep.chi_derivative_gap.push_back(g);
  }

  // continuity probe: Psi at nearby orbit points
  {
    Iem t0 = accel.level_iem(0);
    PiecewiseFunc good = big_phi - chi;
    Rational x0 = base.base_point;
    const long n = std::min<long>(opt.psi_horizon, 4000);
    std::vector<std::pair<Rational, double>> samples;
    Rational y = x0, acc(0);
    for (long i = 0; i < n; ++i) {
      samples.push_back({y, -acc.get_d()});
      acc += good.eval(y);
      y = t0.evaluate(y);
    }
    std::sort(samples.begin(), samples.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double quot = 0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
      double dx = Rational(samples[i].first - samples[i - 1].first).get_d();
      double dpsi = std::fabs(samples[i].second - samples[i - 1].second);
      if (dx > 0 && dx < 1e-3) {
        rep.continuity_pairs.push_back({dx, dpsi});
        quot = std::max(quot, dpsi / std::max(dx, 1e-12));
      }
    }
    rep.continuity_quotient = quot;
  }
  rep.base = std::move(base);
  return rep;
}

}  // namespace iet
