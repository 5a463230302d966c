#include "iet/piecewise.hpp"

#include <algorithm>
#include <cmath>

namespace iet {

Rational Poly::eval(const Rational& x) const {
  Rational v(0);
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

double Poly::eval_d(double x) const {
  double v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i].get_d();
  return v;
}

Poly Poly::derivative() const {
  if (c.size() <= 1) return Poly();
  std::vector<Rational> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i)
    d[i - 1] = c[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::antiderivative() const {
  std::vector<Rational> a(c.size() + 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    a[i + 1] = c[i] / Rational(static_cast<long>(i + 1));
  return Poly(std::move(a));
}

Rational Poly::integral(const Rational& lo, const Rational& hi) const {
  Poly a = antiderivative();
  return a.eval(hi) - a.eval(lo);
}

Poly Poly::shifted(const Rational& s) const {
  // q(x) = p(x + s) via Horner on the coefficient list
  std::vector<Rational> q;
  for (std::size_t i = c.size(); i-- > 0;) {
    // q <- q * (x + s) + c[i]
    std::vector<Rational> nq(q.size() + 1, Rational(0));
    for (std::size_t j = 0; j < q.size(); ++j) {
      nq[j + 1] += q[j];
      nq[j] += s * q[j];
    }
    if (nq.empty()) nq.assign(1, Rational(0));
    nq[0] += c[i];
    q = std::move(nq);
  }
  return Poly(std::move(q));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) r[i] += c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
  return Poly(std::move(r));
}

Poly Poly::scaled(const Rational& f) const {
  std::vector<Rational> r(c);
  for (auto& x : r) x *= f;
  return Poly(std::move(r));
}

Layout Layout::of(const Iem& iem) {
  Layout lay;
  const std::size_t d = iem.dim();
  lay.left.resize(d);
  lay.len.resize(d);
  lay.order.resize(d);
  for (std::size_t id = 0; id < d; ++id) {
    lay.left[id] = iem.left(0, static_cast<int>(id));
    lay.len[id] = iem.length(static_cast<int>(id));
  }
  for (std::size_t p = 0; p < d; ++p)
    lay.order[p] = iem.combo().at(0, static_cast<int>(p));
  lay.total = iem.total();
  return lay;
}

int Layout::locate(const Rational& x) const {
  if (x < 0 || x >= total) throw std::domain_error("point outside layout");
  for (int id : order) {
    if (x < left[id] + len[id]) return id;
  }
  return order.back();
}

PiecewiseFunc::PiecewiseFunc(Layout lay)
    : lay_(std::move(lay)), pieces_(lay_.dim()) {}

PiecewiseFunc PiecewiseFunc::zero(const Layout& lay) {
  PiecewiseFunc f(lay);
  for (std::size_t id = 0; id < lay.dim(); ++id)
    f.append(static_cast<int>(id),
             Piece{lay.left[id], lay.left[id] + lay.len[id], Poly()});
  return f;
}

PiecewiseFunc PiecewiseFunc::constants(const Layout& lay,
                                       const std::vector<Rational>& v) {
  PiecewiseFunc f(lay);
  for (std::size_t id = 0; id < lay.dim(); ++id)
    f.append(static_cast<int>(id), Piece{lay.left[id], lay.left[id] + lay.len[id],
                                         Poly::constant(v[id])});
  return f;
}

std::size_t PiecewiseFunc::piece_count() const {
  std::size_t n = 0;
  for (const auto& ps : pieces_) n += ps.size();
  return n;
}

int PiecewiseFunc::max_degree() const {
  int deg = -1;
  for (const auto& ps : pieces_)
    for (const auto& p : ps) deg = std::max(deg, p.poly.degree());
  return deg;
}

void PiecewiseFunc::append(int sym, Piece p) {
  if (!(p.lo < p.hi)) throw std::invalid_argument("empty piece");
  auto& ps = pieces_[sym];
  if (!ps.empty() && ps.back().hi != p.lo)
    throw std::invalid_argument("pieces must tile left to right");
  if (ps.empty() && p.lo != lay_.left[sym])
    throw std::invalid_argument("first piece must start the interval");
  ps.push_back(std::move(p));
}

void PiecewiseFunc::check_tiling() const {
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    const auto& ps = pieces_[id];
    if (ps.empty()) throw std::logic_error("interval with no pieces");
    if (ps.front().lo != lay_.left[id] ||
        ps.back().hi != lay_.left[id] + lay_.len[id])
      throw std::logic_error("pieces do not tile the interval");
    for (std::size_t i = 1; i < ps.size(); ++i)
      if (ps[i - 1].hi != ps[i].lo)
        throw std::logic_error("pieces do not tile the interval");
  }
}

const Piece& PiecewiseFunc::piece_at(const Rational& x) const {
  int sym = lay_.locate(x);
  const auto& ps = pieces_[sym];
  std::size_t lo = 0, hi = ps.size();
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (x < ps[mid].lo)
      hi = mid;
    else
      lo = mid;
  }
  return ps[lo];
}

Rational PiecewiseFunc::eval(const Rational& x) const {
  return piece_at(x).poly.eval(x);
}

double PiecewiseFunc::eval_d(double x) const {
  // double-only path for plots; exact callers use eval()
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    double l = lay_.left[id].get_d(), r = l + lay_.len[id].get_d();
    if (x >= l && x < r) {
      for (const auto& p : pieces_[id])
        if (x < p.hi.get_d() || &p == &pieces_[id].back())
          return p.poly.eval_d(x);
    }
  }
  throw std::domain_error("point outside layout");
}

Rational PiecewiseFunc::integral_on(int sym) const {
  Rational s(0);
  for (const auto& p : pieces_[sym]) s += p.poly.integral(p.lo, p.hi);
  return s;
}

Rational PiecewiseFunc::integral() const {
  Rational s(0);
  for (std::size_t id = 0; id < lay_.dim(); ++id)
    s += integral_on(static_cast<int>(id));
  return s;
}

std::vector<Rational> PiecewiseFunc::means() const {
  std::vector<Rational> m(lay_.dim());
  for (std::size_t id = 0; id < lay_.dim(); ++id)
    m[id] = integral_on(static_cast<int>(id)) / lay_.len[id];
  return m;
}

void PiecewiseFunc::add_constants(const std::vector<Rational>& v) {
  for (std::size_t id = 0; id < lay_.dim(); ++id)
    for (auto& p : pieces_[id]) {
      if (p.poly.c.empty()) p.poly.c.assign(1, Rational(0));
      p.poly.c[0] += v[id];
    }
}

PiecewiseFunc PiecewiseFunc::derivative() const {
  PiecewiseFunc f(lay_);
  for (std::size_t id = 0; id < lay_.dim(); ++id)
    for (const auto& p : pieces_[id])
      f.append(static_cast<int>(id), Piece{p.lo, p.hi, p.poly.derivative()});
  return f;
}

PiecewiseFunc PiecewiseFunc::primitive_mean_zero() const {
  PiecewiseFunc f(lay_);
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    Rational acc(0);  // running value at piece left ends
    std::vector<Piece> prim;
    for (const auto& p : pieces_[id]) {
      Poly a = p.poly.antiderivative();
      Poly q = a;  // a(x) - a(lo) + acc
      Rational c0 = acc - a.eval(p.lo);
      if (q.c.empty()) q.c.assign(1, Rational(0));
      q.c[0] += c0;
      acc = q.eval(p.hi);
      prim.push_back(Piece{p.lo, p.hi, std::move(q)});
    }
    // subtract the interval mean
    Rational mean(0);
    for (const auto& p : prim) mean += p.poly.integral(p.lo, p.hi);
    mean /= lay_.len[id];
    for (auto& p : prim) {
      if (p.poly.c.empty()) p.poly.c.assign(1, Rational(0));
      p.poly.c[0] -= mean;
      f.append(static_cast<int>(id), std::move(p));
    }
  }
  return f;
}

namespace {
Rational poly_variation_exact(const Poly& p, const Rational& lo,
                              const Rational& hi) {
  const int deg = p.degree();
  if (deg <= 0) return Rational(0);
  if (deg == 1) {
    Rational v = p.eval(hi) - p.eval(lo);
    return v >= 0 ? v : Rational(-v);
  }
  if (deg == 2) {
    // single critical point of the parabola
    Rational crit = -p.c[1] / (2 * p.c[2]);
    auto absr = [](Rational v) { return v >= 0 ? v : Rational(-v); };
    if (crit > lo && crit < hi)
      return absr(p.eval(crit) - p.eval(lo)) + absr(p.eval(hi) - p.eval(crit));
    return absr(p.eval(hi) - p.eval(lo));
  }
  throw std::logic_error("exact variation only for degree <= 2");
}

double poly_variation_double(const Poly& p, double lo, double hi) {
  const int deg = p.degree();
  if (deg <= 0) return 0.0;
  std::vector<double> knots{lo, hi};
  Poly dp = p.derivative();
  if (dp.degree() == 1) {
    double r = -dp.c[0].get_d() / dp.c[1].get_d();
    if (r > lo && r < hi) knots.insert(knots.begin() + 1, r);
  } else if (dp.degree() == 2) {
    double a = dp.c[2].get_d(), b = dp.c[1].get_d(), cc = dp.c[0].get_d();
    double disc = b * b - 4 * a * cc;
    if (disc >= 0) {
      double r1 = (-b - std::sqrt(disc)) / (2 * a);
      double r2 = (-b + std::sqrt(disc)) / (2 * a);
      for (double r : {std::min(r1, r2), std::max(r1, r2)})
        if (r > lo && r < hi) knots.insert(knots.end() - 1, r);
    }
  }
  double var = 0;
  for (std::size_t i = 1; i < knots.size(); ++i)
    var += std::fabs(p.eval_d(knots[i]) - p.eval_d(knots[i - 1]));
  return var;
}
}  // namespace

Rational PiecewiseFunc::variation_exact() const {
  if (max_degree() > 2)
    throw std::logic_error("exact variation needs degree <= 2");
  Rational var(0);
  auto absr = [](Rational v) { return v >= 0 ? v : Rational(-v); };
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    const auto& ps = pieces_[id];
    for (std::size_t i = 0; i < ps.size(); ++i) {
      var += poly_variation_exact(ps[i].poly, ps[i].lo, ps[i].hi);
      if (i > 0)
        var += absr(ps[i].poly.eval(ps[i].lo) - ps[i - 1].poly.eval(ps[i].lo));
    }
  }
  return var;
}

double PiecewiseFunc::variation() const {
  if (max_degree() <= 2) return variation_exact().get_d();
  double var = 0;
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    const auto& ps = pieces_[id];
    for (std::size_t i = 0; i < ps.size(); ++i) {
      var += poly_variation_double(ps[i].poly, ps[i].lo.get_d(),
                                   ps[i].hi.get_d());
      if (i > 0)
        var += std::fabs(ps[i].poly.eval_d(ps[i].lo.get_d()) -
                         ps[i - 1].poly.eval_d(ps[i].lo.get_d()));
    }
  }
  return var;
}

double PiecewiseFunc::sup_norm() const {
  double sup = 0;
  for (std::size_t id = 0; id < lay_.dim(); ++id)
    for (const auto& p : pieces_[id]) {
      double lo = p.lo.get_d(), hi = p.hi.get_d();
      std::vector<double> knots{lo, hi};
      Poly dp = p.poly.derivative();
      if (dp.degree() == 1) {
        double r = -dp.c[0].get_d() / dp.c[1].get_d();
        if (r > lo && r < hi) knots.push_back(r);
      } else if (dp.degree() == 2) {
        double a = dp.c[2].get_d(), b = dp.c[1].get_d(), cc = dp.c[0].get_d();
        double disc = b * b - 4 * a * cc;
        if (disc >= 0 && a != 0) {
          for (double r : {(-b - std::sqrt(disc)) / (2 * a),
                           (-b + std::sqrt(disc)) / (2 * a)})
            if (r > lo && r < hi) knots.push_back(r);
        }
      }
      for (double x : knots) sup = std::max(sup, std::fabs(p.poly.eval_d(x)));
    }
  return sup;
}

bool PiecewiseFunc::continuous_within_intervals() const {
  for (std::size_t id = 0; id < lay_.dim(); ++id) {
    const auto& ps = pieces_[id];
    for (std::size_t i = 1; i < ps.size(); ++i)
      if (ps[i].poly.eval(ps[i].lo) != ps[i - 1].poly.eval(ps[i].lo))
        return false;
  }
  return true;
}

namespace {
PiecewiseFunc merge_op(const PiecewiseFunc& a, const PiecewiseFunc& b,
                       bool subtract) {
  if (a.layout().left != b.layout().left || a.layout().len != b.layout().len)
    throw std::invalid_argument("layout mismatch");
  PiecewiseFunc f(a.layout());
  for (std::size_t id = 0; id < a.layout().dim(); ++id) {
    const auto& pa = a.pieces(static_cast<int>(id));
    const auto& pb = b.pieces(static_cast<int>(id));
    std::size_t i = 0, j = 0;
    Rational lo = a.layout().left[id];
    const Rational end = lo + a.layout().len[id];
    while (lo < end) {
      while (i < pa.size() && pa[i].hi <= lo) ++i;
      while (j < pb.size() && pb[j].hi <= lo) ++j;
      Rational hi = pa[i].hi < pb[j].hi ? pa[i].hi : pb[j].hi;
      Poly q = subtract ? pa[i].poly - pb[j].poly : pa[i].poly + pb[j].poly;
      f.append(static_cast<int>(id), Piece{lo, hi, std::move(q)});
      lo = hi;
    }
  }
  return f;
}
}  // namespace

PiecewiseFunc PiecewiseFunc::operator+(const PiecewiseFunc& o) const {
  return merge_op(*this, o, false);
}

PiecewiseFunc PiecewiseFunc::operator-(const PiecewiseFunc& o) const {
  return merge_op(*this, o, true);
}

}  // namespace iet
