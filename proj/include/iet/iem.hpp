#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "iet/combinatorics.hpp"
#include "iet/exact.hpp"

namespace iet {

// A connexion witness: T^m(left endpoint of alpha's top interval) equals the
// left endpoint of beta's top interval, with beta not leftmost on top.
struct Connexion {
  int alpha = -1;
  int beta = -1;
  long m = 0;
};

struct ConnexionHalt : std::runtime_error {
  ConnexionHalt(Connexion c, std::size_t step)
      : std::runtime_error("connexion reached during induction"),
        witness(c),
        at_step(step) {}
  Connexion witness;
  std::size_t at_step;  // number of induction steps completed before the halt
};

// Interval exchange map: admissible combinatorial data plus exact positive
// lengths. Immutable after construction.
class Iem {
 public:
  Iem(CombinatorialData combo, std::vector<Rational> lengths,
      bool assume_rationally_independent = false);

  const CombinatorialData& combo() const { return combo_; }
  std::size_t dim() const { return combo_.dim(); }
  const std::vector<Rational>& lengths() const { return lengths_; }
  const Rational& length(int id) const { return lengths_[id]; }
  const Rational& total() const { return total_; }
  bool rationally_independent_flag() const { return rat_indep_; }

  const IMat& omega() const { return omega_; }
  // Translation vector: omega * lengths.
  const std::vector<Rational>& translation() const { return delta_; }

  // Left endpoint of the interval of `id` in row eps layout.
  const Rational& left(int eps, int id) const {
    return eps == 0 ? left0_[id] : left1_[id];
  }

  // Symbol whose row-eps interval contains x. Domain error outside [0,total).
  int locate(int eps, const Rational& x) const;

  Rational evaluate(const Rational& x) const;          // T(x)
  Rational evaluate_inverse(const Rational& x) const;  // T^{-1}(x)

  Iem inverse() const;  // swap the two rows

  struct ConnexionSearch {
    std::optional<Connexion> found;
    long horizon = 0;  // steps actually explored
    bool certified_by_independence = false;
  };
  // Exhaustive singularity-orbit search in exact arithmetic up to max_steps.
  // Smallest m wins; ties broken by alphabet order of alpha then beta. If the
  // lengths were declared rationally independent, returns immediately with a
  // no-connexion certificate.
  ConnexionSearch find_connexion(long max_steps = 10000) const;

 private:
  CombinatorialData combo_;
  std::vector<Rational> lengths_;
  Rational total_;
  IMat omega_;
  std::vector<Rational> delta_;
  std::vector<Rational> left0_, left1_;
  bool rat_indep_ = false;
};

}  // namespace iet
