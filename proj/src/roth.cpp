#include "iet/roth.hpp"

#include <cmath>

namespace iet {

IMat gamma_cocycle(const AccelOrbit& accel, std::size_t k, std::size_t l) {
  return accel.q_product(k, l).transposed();
}

double log_q_norm1(const AccelOrbit& accel, std::size_t k, std::size_t l) {
  if (k == 0) return log_big(accel.q_prefix(l).sum_norm());
  return log_big(accel.q_product(k, l).sum_norm());
}

double fit_tail_slope(const std::vector<double>& x,
                      const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return 0;
  std::size_t from = n / 2;
  if (n - from < 2) from = 0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = from; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    ++m;
  }
  double denom = m * sxx - sx * sx;
  if (std::fabs(denom) < 1e-300) return 0;
  return (m * sxy - sx * sy) / denom;
}

ConditionA condition_a(const AccelOrbit& accel, double threshold) {
  ConditionA res;
  const std::size_t K = accel.block_count();
  for (std::size_t k = 1; k + 1 <= K; ++k) {
    double lz = log_big(accel.z_block(k + 1).sum_norm());
    double lq = log_big(accel.q_prefix(k).sum_norm());
    res.ratio.push_back(lz / lq);
  }
  if (res.ratio.empty()) return res;
  double sup = 0;
  for (std::size_t i = res.ratio.size() / 2; i < res.ratio.size(); ++i)
    sup = std::max(sup, res.ratio[i]);
  res.tail_sup = sup;
  res.consistent = sup < threshold;
  return res;
}

Eigen::MatrixXd mean_zero_basis(const Eigen::VectorXd& lambda0) {
  const int d = static_cast<int>(lambda0.size());
  Eigen::MatrixXd m(d, 1);
  m.col(0) = lambda0.normalized();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(d - 1);
}

Eigen::MatrixXd orth_complement(const Eigen::MatrixXd& basis, int d) {
  if (basis.cols() == 0) return Eigen::MatrixXd::Identity(d, d);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  Eigen::MatrixXd q = qr.householderQ();
  return q.rightCols(d - basis.cols());
}

ConditionB condition_b(const AccelOrbit& accel,
                       const Eigen::VectorXd& lambda0, double threshold) {
  ConditionB res;
  const std::size_t K = accel.block_count();
  const int d = static_cast<int>(accel.dim());
  Eigen::MatrixXd hyper = mean_zero_basis(lambda0);
  for (std::size_t k = 1; k <= K; ++k) {
    double log_scale = 0;
    Eigen::MatrixXd tq =
        to_eigen_scaled(accel.q_prefix(k).transposed(), &log_scale);
    double lq = log_big(accel.q_prefix(k).sum_norm());
    if (lq <= std::log(static_cast<double>(d)) + 1e-12) {
      res.theta_hat.push_back(0);  // degenerate: no growth yet
      continue;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(tq * hyper);
    double restr = svd.singularValues()(0);
    double log_restr = log_scale + std::log(restr);
    res.theta_hat.push_back(1.0 - log_restr / lq);
  }
  if (res.theta_hat.empty()) return res;
  double inf = res.theta_hat[res.theta_hat.size() / 2];
  for (std::size_t i = res.theta_hat.size() / 2; i < res.theta_hat.size(); ++i)
    inf = std::min(inf, res.theta_hat[i]);
  res.tail_inf = inf;
  res.consistent = inf > threshold;
  return res;
}

StableSpace stable_space(const AccelOrbit& accel, std::size_t L, double sigma0,
                         const Eigen::VectorXd& delta) {
  StableSpace st;
  st.level = L;
  const int d = static_cast<int>(accel.dim());
  double log_scale = 0;
  Eigen::MatrixXd tq =
      to_eigen_scaled(accel.q_prefix(L).transposed(), &log_scale);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      tq, Eigen::ComputeFullU | Eigen::ComputeFullV);
  double lq = log_big(accel.q_prefix(L).sum_norm());
  std::vector<int> keep;
  for (int i = 0; i < d; ++i) {
    double ls = log_scale + std::log(svd.singularValues()(i));
    st.log_singular.push_back(ls);
    if (ls <= -sigma0 * lq) keep.push_back(i);
  }
  st.basis.resize(d, static_cast<int>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j)
    st.basis.col(static_cast<int>(j)) = svd.matrixV().col(keep[j]);
  st.complement = orth_complement(st.basis, d);
  st.empty = keep.empty();
  if (delta.size() == d && delta.norm() > 0) {
    Eigen::VectorXd dn = delta.normalized();
    if (st.basis.cols() > 0) {
      Eigen::VectorXd resid = dn - st.basis * (st.basis.transpose() * dn);
      st.delta_angle = resid.norm();
    } else {
      st.delta_angle = 1.0;
    }
  }
  return st;
}

ConditionC condition_c(
    const AccelOrbit& accel,
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    const StableSpace& stable, double threshold) {
  ConditionC res;
  const int d = static_cast<int>(accel.dim());
  std::vector<double> lx_inv, ly_inv, lx_res, ly_res;
  for (auto [k, l] : pairs) {
    CNormRow row;
    row.k = k;
    row.l = l;
    row.log_q = log_q_norm1(accel, 0, l);
    // push the level-0 stable basis forward and re-orthonormalize
    double sk_scale = 0, skl_scale = 0;
    Eigen::MatrixXd tq0k =
        to_eigen_scaled(accel.q_prefix(k).transposed(), &sk_scale);
    Eigen::MatrixXd tqkl =
        to_eigen_scaled(accel.q_product(k, l).transposed(), &skl_scale);
    double s0l_scale = 0;
    Eigen::MatrixXd tq0l =
        to_eigen_scaled(accel.q_prefix(l).transposed(), &s0l_scale);
    Eigen::MatrixXd bk, bl;
    if (stable.basis.cols() > 0) {
      Eigen::HouseholderQR<Eigen::MatrixXd> qrk(tq0k * stable.basis);
      bk = Eigen::MatrixXd(qrk.householderQ())
               .leftCols(stable.basis.cols());
      Eigen::HouseholderQR<Eigen::MatrixXd> qrl(tq0l * stable.basis);
      bl = Eigen::MatrixXd(qrl.householderQ())
               .leftCols(stable.basis.cols());
    } else {
      bk.resize(d, 0);
      bl.resize(d, 0);
    }
    Eigen::MatrixXd ck = orth_complement(bk, d), cl = orth_complement(bl, d);
    Eigen::MatrixXd mflat = cl.transpose() * tqkl * ck;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(mflat);
    const auto& sv = svd.singularValues();
    double smin = sv(sv.size() - 1), smax = sv(0);
    row.ill_conditioned = smin <= smax * 1e-13;
    row.log_inv_quotient = -(skl_scale + std::log(smin));
    if (bk.cols() > 0) {
      Eigen::JacobiSVD<Eigen::MatrixXd> svr(tqkl * bk);
      row.log_restricted = skl_scale + std::log(svr.singularValues()(0));
    } else {
      row.log_restricted = 0;
    }
    res.rows.push_back(row);
    if (l > k) {
      lx_inv.push_back(row.log_q);
      ly_inv.push_back(row.log_inv_quotient);
      lx_res.push_back(row.log_q);
      ly_res.push_back(row.log_restricted);
    }
  }
  res.exp_inv_quotient = fit_tail_slope(lx_inv, ly_inv);
  res.exp_restricted = fit_tail_slope(lx_res, ly_res);
  res.consistent = res.exp_inv_quotient < threshold &&
                   res.exp_restricted < threshold;
  return res;
}

RothReport roth_diagnostics(const AccelOrbit& accel,
                            const Eigen::VectorXd& lambda0, double a_threshold,
                            double b_threshold, double c_threshold,
                            double sigma0) {
  RothReport rep;
  const std::size_t K = accel.block_count();
  rep.a = condition_a(accel, a_threshold);
  rep.b = condition_b(accel, lambda0, b_threshold);
  // delta at level 0 for the containment check
  const int d = static_cast<int>(accel.dim());
  Eigen::VectorXd delta = Eigen::VectorXd::Zero(d);
  {
    IMat om = accel.combo_level(0).omega();
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        delta(a) += to_double(om(a, b)) * lambda0(b);
  }
  rep.stable = stable_space(accel, K, sigma0, delta);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t l = 1; l <= K; ++l) pairs.push_back({0, l});
  rep.c = condition_c(accel, pairs, rep.stable, c_threshold);
  if (accel.length_driven()) {
    for (std::size_t k = 0; k <= K; ++k) {
      const auto& lam = accel.lambda_level(k);
      Rational mx = lam[0], mn = lam[0];
      for (const auto& x : lam) {
        if (x > mx) mx = x;
        if (x < mn) mn = x;
      }
      rep.balance_ratio.push_back(Rational(mx / mn).get_d());
    }
  }
  return rep;
}

}  // namespace iet
