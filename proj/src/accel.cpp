#include "iet/accel.hpp"

#include <set>

namespace iet {

AccelOrbit::AccelOrbit(CocycleOrbit orbit, int D)
    : orbit_(std::move(orbit)), D_(D) {
  const int d = static_cast<int>(orbit_.base().dim());
  if (D_ < 1 || D_ >= d)
    throw std::invalid_argument("acceleration parameter D must satisfy 1 <= D < d");
  breaks_.push_back(0);
  const auto& steps = orbit_.steps();
  std::set<int> names;
  std::size_t block_start = 0;
  for (std::size_t n = 0; n < steps.size(); ++n) {
    std::set<int> cand = names;
    cand.insert(steps[n].winner);
    if (static_cast<int>(cand.size()) > D_) {
      // arrow n+1 (1-based) would exceed D: block ends at n (1-based count n)
      breaks_.push_back(n);
      z_.push_back(orbit_.v_product(block_start, n));
      block_start = n;
      names.clear();
      names.insert(steps[n].winner);
    } else {
      names = std::move(cand);
    }
  }
  if (z_.empty())
    throw InsufficientOrbit("orbit too short for one complete block");
  // invariant: each block maximal (witnessed by the next arrow)
  for (std::size_t k = 1; k < breaks_.size(); ++k) {
    std::set<int> blk;
    for (std::size_t n = breaks_[k - 1]; n < breaks_[k]; ++n)
      blk.insert(steps[n].winner);
    blk.insert(steps[breaks_[k]].winner);
    if (static_cast<int>(blk.size()) <= D_)
      throw std::logic_error("acceleration produced a non-maximal block");
  }
}

AccelOrbit::AccelOrbit(CombinatorialData base, std::vector<IMat> blocks,
                       int D)
    : orbit_(std::move(base), {}), D_(D), synthetic_(true) {
  const int d = static_cast<int>(orbit_.base().dim());
  if (D_ < 1 || D_ >= d)
    throw std::invalid_argument("acceleration parameter D must satisfy 1 <= D < d");
  if (blocks.empty()) throw InsufficientOrbit("no blocks provided");
  z_ = std::move(blocks);
  breaks_.resize(z_.size() + 1, 0);
  for (std::size_t k = 0; k < z_.size(); ++k) breaks_[k + 1] = k + 1;
}

IMat AccelOrbit::q_product(std::size_t k, std::size_t l) const {
  if (k > l || l > block_count()) throw std::out_of_range("q_product range");
  IMat q = IMat::identity(dim());
  for (std::size_t j = k + 1; j <= l; ++j) q = q * z_block(j);
  return q;
}

const IMat& AccelOrbit::q_prefix(std::size_t k) const {
  if (k > block_count()) throw std::out_of_range("q_prefix range");
  if (q_prefix_.empty()) {
    q_prefix_.reserve(block_count() + 1);
    q_prefix_.push_back(IMat::identity(dim()));
    for (std::size_t j = 1; j <= block_count(); ++j)
      q_prefix_.push_back(q_prefix_[j - 1] * z_block(j));
  }
  return q_prefix_[k];
}

Iem AccelOrbit::level_iem(std::size_t k) const {
  if (!length_driven())
    throw std::logic_error("level_iem requires a length-driven orbit");
  return Iem(combo_level(k), lambda_level(k));
}

std::vector<int> AccelOrbit::block_names(std::size_t k) const {
  if (k < 1 || k > block_count()) throw std::out_of_range("block index");
  std::set<int> names;
  for (std::size_t n = breaks_[k - 1]; n < breaks_[k]; ++n)
    names.insert(orbit_.steps()[n].winner);
  return {names.begin(), names.end()};
}

AccelOrbit accelerate(const CocycleOrbit& orbit, int D) {
  return AccelOrbit(orbit, D);
}

PositivityReport check_positivity(const AccelOrbit& accel, std::size_t k) {
  const std::size_t d = accel.dim();
  const std::size_t gap = d == 2 ? 2 : 2 * d - 3;
  PositivityReport rep;
  rep.k = k;
  rep.l = k + gap;
  if (rep.l > accel.block_count())
    throw std::out_of_range("positivity window exceeds orbit depth");
  rep.all_positive = accel.q_product(k, rep.l).all_positive();
  return rep;
}

std::vector<std::vector<BigInt>> return_words(const AccelOrbit& accel,
                                              std::size_t k, std::size_t l) {
  if (k > l || l > accel.block_count())
    throw std::out_of_range("return_words range");
  const std::size_t d = accel.dim();
  Iem tk = accel.level_iem(k);
  Iem tl = accel.level_iem(l);
  const Rational& total_l = tl.total();
  std::vector<std::vector<BigInt>> counts(d, std::vector<BigInt>(d, 0));
  for (std::size_t beta = 0; beta < d; ++beta) {
    Rational x = tl.left(0, static_cast<int>(beta));
    // visit counts of the level-k intervals until first return to I^(l)
    Rational y = x;
    while (true) {
      int alpha = tk.locate(0, y);
      counts[beta][alpha] += 1;
      y = tk.evaluate(y);
      if (y < total_l) break;
    }
  }
  return counts;
}

bool balance_holds(const AccelOrbit& accel, std::size_t k) {
  const auto& lam0 = accel.lambda_level(0);
  const auto& lam = accel.lambda_level(k);
  Rational total(0);
  for (const auto& x : lam0) total += x;
  Rational mx = lam[0], mn = lam[0];
  for (const auto& x : lam) {
    if (x > mx) mx = x;
    if (x < mn) mn = x;
  }
  BigInt qn = accel.q_prefix(k).sum_norm();
  return mx * qn >= total && total >= mn * qn;
}

}  // namespace iet
