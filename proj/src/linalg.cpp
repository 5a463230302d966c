#include "iet/linalg.hpp"

namespace iet {

BigInt det_exact(const IMat& m) {
  const std::size_t d = m.dim();
  if (d == 0) return 1;
  // Bareiss fraction-free elimination on a working copy.
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) a[i][j] = m(i, j);
  BigInt prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[d - 1][d - 1] : BigInt(-a[d - 1][d - 1]);
}

std::vector<BigInt> char_poly(const IMat& m) {
  const std::size_t d = m.dim();
  // Evaluate p(x) = det(x I - M) at x = 0..d, then interpolate exactly.
  std::vector<Rational> xs(d + 1), ys(d + 1);
  for (std::size_t k = 0; k <= d; ++k) {
    IMat a(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        a(i, j) = (i == j ? BigInt(static_cast<long>(k)) - m(i, j)
                          : BigInt(-m(i, j)));
    xs[k] = Rational(static_cast<long>(k));
    ys[k] = Rational(det_exact(a));
  }
  // Newton divided differences, then expand.
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = d; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<Rational> poly{coef[d]};
  for (std::size_t i = d; i-- > 0;) {
    // poly <- poly * (x - xs[i]) + coef[i]
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= xs[i] * poly[j];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }
  std::vector<BigInt> out(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    if (poly[j].get_den() != 1)
      throw std::logic_error("char_poly: non-integer coefficient");
    out[j] = poly[j].get_num();
  }
  return out;
}

Eigen::MatrixXd to_eigen(const IMat& m) {
  const std::size_t d = m.dim();
  Eigen::MatrixXd r(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r(i, j) = to_double(m(i, j));
  return r;
}

Eigen::MatrixXd to_eigen_scaled(const IMat& m, double* log_scale) {
  const std::size_t d = m.dim();
  BigInt top = m.sup_norm();
  if (top == 0) {
    if (log_scale) *log_scale = 0.0;
    return Eigen::MatrixXd::Zero(d, d);
  }
  const double ls = log_big(top);
  if (log_scale) *log_scale = ls;
  Eigen::MatrixXd r(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational q(m(i, j), top);
      r(i, j) = q.get_d();
    }
  return r;
}

IMat int_mat_from_rows(const std::vector<std::vector<long>>& rows) {
  IMat m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    assert(rows[i].size() == rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace iet
