#pragma once

#include "iet/accel.hpp"
#include "iet/piecewise.hpp"

namespace iet {

// Return-word tiling of one acceleration step: offsets[beta][i] is the
// absolute position of (T^(k))^i(left endpoint of beta's level-(k+1)
// interval) for 0 <= i < Q_beta(k,k+1). The windows
// [offset, offset + len_{k+1}(beta)) tile the level-k domain.
struct ReturnTiles {
  std::vector<std::vector<Rational>> offsets;
};
ReturnTiles return_tiles(const AccelOrbit& accel, std::size_t k);

// Materialized special Birkhoff sum over one acceleration step:
// phi lives on the level-k layout, the result on the level-(k+1) layout.
PiecewiseFunc special_sum_step(const AccelOrbit& accel, std::size_t k,
                               const PiecewiseFunc& phi);

// Materialized S(k,l)phi by composing steps.
PiecewiseFunc special_sum_function(const AccelOrbit& accel, std::size_t k,
                                   std::size_t l, const PiecewiseFunc& phi);

// Pointwise S(k,l)(phi)(x): iterates T^(k) exactly Q_beta(k,l) times.
Rational special_birkhoff_sum(const AccelOrbit& accel, std::size_t k,
                              std::size_t l, const PiecewiseFunc& phi,
                              const Rational& x);

// Direct Birkhoff sum oracle: sum of phi over x, Tx, ..., T^{N-1}x.
Rational birkhoff_sum_direct(const Iem& iem, const PiecewiseFunc& phi,
                             const Rational& x, long n);

// One term of the reduction of a Birkhoff sum to special sums: the special
// sums S(level) are applied at base_point, T^(level) base_point, ...,
// (T^(level))^{count-1} base_point.
struct BirkhoffTerm {
  std::size_t level = 0;
  long count = 0;
  Rational base_point;
  BigInt count_bound;  // max column sum of Z(level+1), when available
};
struct BirkhoffDecomposition {
  std::vector<BirkhoffTerm> terms;
  std::size_t top_level = 0;
};
// Decompose S_N phi(x) into special sums along the acceleration levels.
// Pre: x is the point of {x, Tx, ..., T^{N-1}x} closest to 0 (the count
// bounds are only guaranteed then); use the two-sided variant otherwise.
BirkhoffDecomposition decompose_birkhoff(const AccelOrbit& accel,
                                         const Rational& x, long n);

// Evaluate the decomposition against a function (exact). For interval-wise
// constants the special sums act through the transposed Q matrices.
Rational evaluate_decomposition(const AccelOrbit& accel,
                                const BirkhoffDecomposition& dec,
                                const PiecewiseFunc& phi);

// General x: cut the orbit segment at its minimal point and decompose the
// two halves, the backward one along the inverse map's own acceleration.
// `bwd` must accelerate an orbit of the inverse of `fwd`'s base map.
struct TwoSidedBirkhoff {
  long pivot_index = 0;  // minimal point is T^{pivot_index}(x)
  Rational pivot;
  BirkhoffDecomposition forward;   // budget n - pivot_index from the pivot
  BirkhoffDecomposition backward;  // budget pivot_index + 1 under T^{-1}
};
TwoSidedBirkhoff decompose_birkhoff_two_sided(const AccelOrbit& fwd,
                                              const AccelOrbit& bwd,
                                              const Rational& x, long n);

// S_n phi(x) = forward + backward - phi(pivot), all exact.
Rational evaluate_two_sided(const AccelOrbit& fwd, const AccelOrbit& bwd,
                            const TwoSidedBirkhoff& dec,
                            const PiecewiseFunc& phi);

// Re-cut a piecewise function onto another layout of the same domain
// (pointwise identical values).
PiecewiseFunc recut_to_layout(const Layout& lay, const PiecewiseFunc& f);

// Split S(k,k+1)phi into its interval means (a Gamma vector at level k+1)
// and the remainder with mean zero on every interval.
struct MeanZeroSplit {
  PiecewiseFunc remainder;
  std::vector<Rational> gamma;
};
MeanZeroSplit project_mean_zero(const AccelOrbit& accel, std::size_t k,
                                const PiecewiseFunc& phi);

}  // namespace iet
