#include "iet/families.hpp"

#include <cmath>
#include <random>

namespace iet {
namespace family_a {

CombinatorialData base() { return CombinatorialData::from_rows("ABCD", "DCBA"); }

std::string loop_names(long n) {
  std::string s = "DDCDAA";
  s.append(static_cast<std::size_t>(n), 'B');
  s += "A";
  return s;
}

IMat loop_matrix(long n) {
  CocycleOrbit orbit = path_by_names(base(), loop_names(n));
  if (!(orbit.combo_at(orbit.size()) == base()))
    throw std::logic_error("loop does not close");
  return orbit.v_product(0, orbit.size());
}

IMat m_matrix(long n) {
  return int_mat_from_rows({{1, 1, 1, 1},
                            {n, n + 1, 0, 0},
                            {0, 0, 2, 1},
                            {n + 1, n + 2, 2, 2}});
}

std::vector<BigInt> char_poly_closed(long n) {
  return {BigInt(1), BigInt(-(n + 6)), BigInt(3 * n + 10), BigInt(-(n + 6)),
          BigInt(1)};  // constant term first
}

EigenData eigen_data(long n) {
  EigenData e;
  if (n == 0) e.degenerate = true;
  const double disc = std::sqrt(static_cast<double>(n) * n + 4.0);
  e.u_plus = (n + 6 + disc) / 2;
  e.u_minus = (n + 6 - disc) / 2;
  auto split = [](double u, double& big, double& small) {
    double s = std::sqrt(u * u - 4.0);
    big = (u + s) / 2;
    small = (u - s) / 2;
  };
  split(e.u_plus, e.lam_u_plus, e.lam_s_plus);
  split(e.u_minus, e.lam_u_minus, e.lam_s_minus);
  auto vec_for = [](double lam) {
    Eigen::Vector4d v;
    v << (lam - 1) * (lam * lam - 4 * lam + 2),
        lam * lam * lam - 4 * lam * lam + 3 * lam - 1, lam * (lam - 1),
        (lam - 1) * (lam - 1);
    return v;
  };
  Eigen::Matrix4d m = to_eigen(m_matrix(n));
  const double lams[4] = {e.lam_u_plus, e.lam_u_minus, e.lam_s_minus,
                          e.lam_s_plus};
  double worst_t = 0, worst_m = 0;
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector4d v = vec_for(lams[i]);
    e.vectors.row(i) = v.transpose();
    worst_t = std::max(worst_t,
                       (m.transpose() * v - lams[i] * v).norm() / v.norm());
    worst_m = std::max(worst_m, (m * v - lams[i] * v).norm() / v.norm());
  }
  e.formula_matches_transpose = worst_t <= worst_m;
  e.residual = std::min(worst_t, worst_m);
  return e;
}

ConeReport cone_checks(long n, long samples, unsigned long seed) {
  ConeReport rep;
  rep.samples = samples;
  const double g = (std::sqrt(5.0) + 3) / 2;
  const double s5 = std::sqrt(5.0);
  const double gamma1 = (10 - 3 * s5) / 3;
  auto update = [&](double xu, double xs, double yu, double ys, double out[4]) {
    // coordinates (x_u^+, x_s^+, x_u^-, x_s^-) in the limit basis
    out[0] = (n + 3) * xu + xs + g * yu + (1 / g) * ys;
    out[1] = -xu;
    out[2] = xu / s5 + g * yu;
    out[3] = -xu / s5 + yu / g;
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  rep.cone1_min_slack = 1e300;
  rep.cone2_min_slack = 1e300;
  for (long i = 0; i < samples; ++i) {
    // first cone: x_u^+ dominates the absolute values of the rest
    double xu = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double xs = uni(rng) * xu, yu = uni(rng) * xu, ys = uni(rng) * xu;
    double out[4];
    update(xu, xs, yu, ys, out);
    double lhs = out[0];
    double rhs = std::max({(n - 1) * std::fabs(out[1]),
                           (n - 1) * std::fabs(out[3]),
                           gamma1 * std::fabs(out[2]),
                           (n - 1) * xu});
    rep.cone1_min_slack = std::min(rep.cone1_min_slack, lhs - rhs);
    if (lhs < rhs) ++rep.cone1_violations;

    // second cone: max(|x_u^+|,|x_u^-|) dominates max(|x_s^+|,|x_s^-|)
    double xu2 = uni(rng), yu2 = uni(rng);
    double cap = std::max(std::fabs(xu2), std::fabs(yu2));
    double xs2 = uni(rng) * cap, ys2 = uni(rng) * cap;
    update(xu2, xs2, yu2, ys2, out);
    double lhs2 = std::max(std::fabs(out[0]), std::fabs(out[2]));
    double rhs2 = (g - 1 / s5) *
                  std::max({std::fabs(out[1]), std::fabs(out[3]),
                            std::fabs(xu2), std::fabs(yu2)});
    rep.cone2_min_slack = std::min(rep.cone2_min_slack, lhs2 - rhs2);
    if (lhs2 < rhs2) ++rep.cone2_violations;
  }
  return rep;
}

std::vector<Rational> lengths_from_loops(const std::vector<long>& ns) {
  IMat q = IMat::identity(4);
  for (long n : ns) q = q * m_matrix(n);
  std::vector<Rational> lens(4);
  BigInt total(0);
  for (int i = 0; i < 4; ++i) {
    BigInt row(0);
    for (int j = 0; j < 4; ++j) row += q(i, j);
    lens[i] = Rational(row);
    total += row;
  }
  for (auto& l : lens) l /= Rational(total);
  return lens;
}

std::vector<IMat> zorich_blocks(const std::vector<BigInt>& ns) {
  // Window structure of the concatenated loop path under the D = 3 rule:
  //   [D D C D A A] [B^n1 A D D] [C D A A] [B^n2 A D D] [C D A A] ...
  // The B-run self-loops at a fixed vertex, so its product is I + n E_{B,A}.
  auto v = [](int w, int l) {
    IMat m = IMat::identity(4);
    m(w, l) = 1;
    return m;
  };
  const int A = 0, B = 1, C = 2, D = 3;
  const IMat w0 = v(D, A) * v(D, B) * v(C, D) * v(D, C) * v(A, D) * v(A, C);
  const IMat f = v(A, B) * v(D, A) * v(D, B);  // closes the loop, opens the next
  const IMat y = v(C, D) * v(D, C) * v(A, D) * v(A, C);
  std::vector<IMat> blocks{w0};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    IMat run = IMat::identity(4);
    run(B, A) = ns[i];
    blocks.push_back(run * f);
    if (i + 1 < ns.size()) blocks.push_back(y);
  }
  return blocks;
}

FamilyDiagnostics diagnostics(const std::vector<BigInt>& ns) {
  // exact path when the arrow count stays reasonable
  BigInt arrows(0);
  for (const auto& n : ns) arrows += n + 7;
  AccelOrbit accel = [&]() {
    if (arrows < 2000000) {
      std::string names;
      for (const auto& n : ns) names += loop_names(n.get_si());
      // the final block runs into the next loop; complete and witness it
      names += "DDC";
      return AccelOrbit(path_by_names(base(), names), 3);
    }
    return AccelOrbit(base(), zorich_blocks(ns), 3);
  }();
  // length direction estimate from the deepest prefix row mix
  IMat q = accel.q_prefix(accel.block_count());
  Eigen::VectorXd lambda0(4);
  for (int i = 0; i < 4; ++i) {
    double row = 0;
    for (int j = 0; j < 4; ++j)
      row += Rational(q(i, j), q.sum_norm()).get_d();
    lambda0(i) = row;
  }
  lambda0 /= lambda0.sum();
  RothReport roth = roth_diagnostics(accel, lambda0);
  return FamilyDiagnostics{std::move(accel), std::move(roth)};
}

}  // namespace family_a

namespace family_b {

CombinatorialData base() { return family_a::base(); }

std::string loop0_names(long m, long n, long p) {
  std::string s(static_cast<std::size_t>(3 * m + 1), 'D');
  s += "B";
  s.append(static_cast<std::size_t>(n), 'C');
  s += "BD";
  s.append(static_cast<std::size_t>(p), 'C');
  s += "D";
  return s;
}

std::string loop1_names(long m, long n, long p) {
  std::string s(static_cast<std::size_t>(3 * m + 1), 'A');
  s += "C";
  s.append(static_cast<std::size_t>(n), 'B');
  s += "CA";
  s.append(static_cast<std::size_t>(p), 'B');
  s += "A";
  return s;
}

IMat z0_matrix(const BigInt& m, const BigInt& n, const BigInt& p) {
  IMat z(4);
  BigInt one(1), two(2);
  z(0, 0) = 1;
  z(1, 1) = 2;
  z(1, 2) = p + 2;
  z(1, 3) = p + 1;
  z(2, 1) = n;
  z(2, 2) = (n + 1) * (p + 1);
  z(2, 3) = p * (n + 1);
  z(3, 0) = m + 1;
  z(3, 1) = m * (n + 2) + 1;
  z(3, 2) = m * (n + 2) * (p + 1) + m + 1;
  z(3, 3) = p * m * (n + 2) + m + 1;
  return z;
}

IMat z1_matrix(const BigInt& m, const BigInt& n, const BigInt& p) {
  IMat z(4);
  z(0, 0) = p * m * (n + 2) + m + 1;
  z(0, 1) = m * (n + 2) * (p + 1) + m + 1;
  z(0, 2) = m * (n + 2) + 1;
  z(0, 3) = m + 1;
  z(1, 0) = p * (n + 1);
  z(1, 1) = (n + 1) * (p + 1);
  z(1, 2) = n;
  z(2, 0) = p + 1;
  z(2, 1) = p + 2;
  z(2, 2) = 2;
  z(3, 3) = 1;
  return z;
}

Parameters parameters(long n0, std::size_t K) {
  Parameters par;
  BigInt b0(n0);
  par.m.resize(K);
  par.n.resize(K);
  par.p.resize(K);
  auto sq = [](const BigInt& x) { return x * x; };
  for (std::size_t k = 0; k < K; ++k) {
    long l = static_cast<long>(k);
    if (k == 0) {
      par.m[0] = 0;
      par.n[0] = b0;
    } else if (k == 1) {
      par.m[1] = b0 * b0 * b0;
    }
    if (k >= 1) par.n[k] = sq(b0 + 3 * l - 2) * sq(b0 + 3 * l - 1);
    if (k >= 2) par.m[k] = sq(b0 + 3 * l - 4) * sq(b0 + 3 * l - 3);
    par.p[k] = sq(b0 + 3 * l) * sq(b0 + 3 * l + 1);
  }
  return par;
}

BigInt c_value(long n0, long k) {
  if (k < -2) throw std::invalid_argument("c_value index");
  if (k == -2) return 1;
  BigInt ratio(1);
  for (long j = 1; j <= k; ++j) ratio *= (n0 + j);
  BigInt b0(n0);
  return b0 * b0 * b0 * ratio * ratio / (k == -1 ? b0 * b0 : BigInt(1));
}

Certificate certificate(long n0, std::size_t K) {
  Certificate cert;
  cert.K = K;
  cert.n0 = n0;
  Parameters par = parameters(n0, K);
  const Eigen::Vector4d u_a(0.5, 0, 0, 0.5);
  const Eigen::Vector4d u_d(0, 0, 1, 0);
  IMat q = IMat::identity(4);
  std::vector<Eigen::Vector4d> dirs_a, dirs_d;
  for (std::size_t k = 1; k <= K; ++k) {
    const auto& m = par.m[k - 1];
    const auto& n = par.n[k - 1];
    const auto& p = par.p[k - 1];
    IMat z = (k - 1) % 2 == 0 ? z0_matrix(m, n, p) : z1_matrix(m, n, p);
    cert.growth_exponent.push_back(
        log_big(z.sup_norm()) /
        std::log(static_cast<double>(n0 + 3 * (k - 1))));
    q = q * z;
    cert.q.push_back(q);
    auto column_dir = [&](int col) {
      Eigen::Vector4d v;
      BigInt norm = q.col_sum(col);
      for (int i = 0; i < 4; ++i)
        v(i) = Rational(q(i, col), norm).get_d();
      return v;
    };
    Eigen::Vector4d ea = column_dir(0), ed = column_dir(3);
    dirs_a.push_back(ea);
    dirs_d.push_back(ed);
    cert.dist_to_uA.push_back((ea - u_a).lpNorm<1>());
    cert.dist_to_uD.push_back((ed - u_d).lpNorm<1>());
  }
  for (std::size_t l = 1; 2 * l <= K; ++l) {
    double drift = (dirs_d[2 * l - 1] - dirs_d[2 * l - 2]).lpNorm<1>();
    cert.drift.push_back(drift);
    double scale = static_cast<double>(n0 + 6 * static_cast<long>(l));
    cert.drift_scale.push_back(drift * scale * scale);
  }
  if (!dirs_a.empty())
    cert.cluster_separation = (dirs_a.back() - dirs_d.back()).lpNorm<1>();
  return cert;
}

AccelOrbit accelerated_path(long n0, std::size_t K) {
  Parameters par = parameters(n0, K);
  std::string names;
  for (std::size_t k = 0; k < K; ++k) {
    long m = par.m[k].get_si();
    long n = par.n[k].get_si();
    long p = par.p[k].get_si();
    names += (k % 2 == 0) ? loop0_names(m, n, p) : loop1_names(m, n, p);
  }
  // one extra arrow witnesses the maximality of the final block
  names += (K % 2 == 0) ? "D" : "A";
  CocycleOrbit orbit = path_by_names(base(), names);
  return AccelOrbit(orbit, 3);
}

AccelOrbit accelerated_blocks(long n0, std::size_t K) {
  Parameters par = parameters(n0, K);
  std::vector<IMat> blocks;
  for (std::size_t k = 0; k < K; ++k)
    blocks.push_back(k % 2 == 0
                         ? z0_matrix(par.m[k], par.n[k], par.p[k])
                         : z1_matrix(par.m[k], par.n[k], par.p[k]));
  return AccelOrbit(base(), std::move(blocks), 3);
}

RothReport diagnostics(long n0, std::size_t K) {
  AccelOrbit accel = accelerated_blocks(n0, K);
  IMat q = accel.q_prefix(K);
  Eigen::VectorXd lambda0(4);
  for (int i = 0; i < 4; ++i) {
    double row = 0;
    for (int j = 0; j < 4; ++j)
      row += Rational(q(i, j), q.sum_norm()).get_d();
    lambda0(i) = row;
  }
  lambda0 /= lambda0.sum();
  return roth_diagnostics(accel, lambda0);
}

}  // namespace family_b
}  // namespace iet
