#pragma once

#include "iet/iem.hpp"

namespace iet {

// Polynomial with exact rational coefficients in the absolute coordinate.
struct Poly {
  std::vector<Rational> c;  // value = sum c[i] x^i

  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static Poly constant(const Rational& v) { return Poly({v}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int degree() const { return c.empty() ? -1 : static_cast<int>(c.size()) - 1; }

  Rational eval(const Rational& x) const;
  double eval_d(double x) const;

  Poly derivative() const;
  Poly antiderivative() const;          // constant term zero
  Rational integral(const Rational& lo, const Rational& hi) const;
  Poly shifted(const Rational& s) const;  // x -> value at (x + s)

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly scaled(const Rational& f) const;
};

struct Piece {
  Rational lo, hi;  // half-open [lo, hi)
  Poly poly;
};

// Interval layout of one induction level: left endpoints and lengths of the
// top-row intervals, by symbol id.
struct Layout {
  std::vector<Rational> left, len;
  std::vector<int> order;  // symbol ids in top position order
  Rational total;

  static Layout of(const Iem& iem);
  std::size_t dim() const { return left.size(); }
  int locate(const Rational& x) const;  // symbol whose interval contains x
};

// Piecewise polynomial on the disjoint union of a layout's intervals.
// Pieces tile each interval exactly; discontinuities are allowed at piece
// boundaries (the function is taken right-continuous; the value on [lo,hi)
// comes from that piece).
class PiecewiseFunc {
 public:
  PiecewiseFunc() = default;
  explicit PiecewiseFunc(Layout lay);

  static PiecewiseFunc zero(const Layout& lay);
  static PiecewiseFunc constants(const Layout& lay,
                                 const std::vector<Rational>& per_symbol);

  const Layout& layout() const { return lay_; }
  const std::vector<Piece>& pieces(int sym) const { return pieces_[sym]; }
  std::size_t piece_count() const;
  int max_degree() const;

  // Append a piece to symbol sym; pieces must be added left to right and
  // tile the interval by the time the function is used.
  void append(int sym, Piece p);
  // Validates exact tiling of every interval.
  void check_tiling() const;

  Rational eval(const Rational& x) const;
  double eval_d(double x) const;

  Rational integral_on(int sym) const;
  Rational integral() const;
  std::vector<Rational> means() const;

  void add_constants(const std::vector<Rational>& per_symbol);
  PiecewiseFunc derivative() const;
  // Primitive with mean zero on every interval.
  PiecewiseFunc primitive_mean_zero() const;

  // Variation summed over intervals, jumps at interval endpoints excluded
  // (jumps at interior piece breakpoints included).
  double variation() const;
  Rational variation_exact() const;  // requires max_degree() <= 2

  double sup_norm() const;

  bool continuous_within_intervals() const;  // exact check

  // Pointwise sum/difference; layouts must agree. Breakpoints are merged.
  PiecewiseFunc operator+(const PiecewiseFunc& o) const;
  PiecewiseFunc operator-(const PiecewiseFunc& o) const;

  // Piece containing x (by the half-open convention).
  const Piece& piece_at(const Rational& x) const;

 private:
  Layout lay_;
  std::vector<std::vector<Piece>> pieces_;
};

}  // namespace iet
