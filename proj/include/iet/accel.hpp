#pragma once

#include "iet/rauzy.hpp"

namespace iet {

struct InsufficientOrbit : std::runtime_error {
  explicit InsufficientOrbit(const std::string& what)
      : std::runtime_error(what) {}
};

// D-accelerated view of a Rauzy-Veech orbit: consecutive arrows are grouped
// into maximal blocks whose names use at most D distinct symbols; appending
// the following arrow would exceed D. Block k (1-based) spans arrows
// breaks[k-1]+1 .. breaks[k] and carries the matrix Z(k).
class AccelOrbit {
 public:
  AccelOrbit(CocycleOrbit orbit, int D);

  // Matrix-only view from precomputed block matrices (no underlying arrow
  // path): supports the norm/cocycle diagnostics but not level dynamics.
  AccelOrbit(CombinatorialData base, std::vector<IMat> blocks, int D);

  bool synthetic() const { return synthetic_; }

  int D() const { return D_; }
  std::size_t dim() const { return orbit_.base().dim(); }
  const CocycleOrbit& orbit() const { return orbit_; }
  bool length_driven() const { return orbit_.length_driven(); }

  // Number of complete blocks K; levels run k = 0..K.
  std::size_t block_count() const { return breaks_.size() - 1; }
  std::size_t breakpoint(std::size_t k) const { return breaks_.at(k); }
  const std::vector<std::size_t>& breakpoints() const { return breaks_; }

  // Z(k), 1 <= k <= K.
  const IMat& z_block(std::size_t k) const { return z_.at(k - 1); }
  // Q(k,l) = Z(k+1)...Z(l); Q(k,k) = I. Exact big-integer product.
  IMat q_product(std::size_t k, std::size_t l) const;
  // Memoized prefix Q(0,k).
  const IMat& q_prefix(std::size_t k) const;

  const CombinatorialData& combo_level(std::size_t k) const {
    if (synthetic_ && k > 0)
      throw std::logic_error("synthetic orbit has no level combinatorics");
    return orbit_.combo_at(synthetic_ ? 0 : breaks_.at(k));
  }
  const std::vector<Rational>& lambda_level(std::size_t k) const {
    if (synthetic_) throw std::logic_error("synthetic orbit has no lengths");
    return orbit_.lambda_at(breaks_.at(k));
  }
  // The induced i.e.m. T^(k) acting on [0, total_k).
  Iem level_iem(std::size_t k) const;

  // Distinct winner names of block k (1-based), as symbol ids.
  std::vector<int> block_names(std::size_t k) const;

 private:
  CocycleOrbit orbit_;
  int D_;
  bool synthetic_ = false;
  std::vector<std::size_t> breaks_;
  std::vector<IMat> z_;
  mutable std::vector<IMat> q_prefix_;  // built on demand, single-writer
};

// Group an orbit into D-blocks. Throws InsufficientOrbit when not even one
// complete (witnessed-maximal) block exists.
AccelOrbit accelerate(const CocycleOrbit& orbit, int D);

struct PositivityReport {
  std::size_t k = 0, l = 0;
  bool all_positive = false;
};
// Checks Q(k, k+2d-3) (k+2 for d=2) for strictly positive entries.
PositivityReport check_positivity(const AccelOrbit& accel, std::size_t k);

// Simulates the first return of T^(k) to the level-l domain for one sample
// point in each level-l interval and counts visits to the level-k intervals.
// The counts must reproduce the columns of Q(k,l).
std::vector<std::vector<BigInt>> return_words(const AccelOrbit& accel,
                                              std::size_t k, std::size_t l);

// Exact balance check: Max lambda^(k) * ||Q(k)||_1 >= lambda*  >=
// Min lambda^(k) * ||Q(k)||_1 at a given level.
bool balance_holds(const AccelOrbit& accel, std::size_t k);

}  // namespace iet
