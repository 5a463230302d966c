#pragma once

#include <map>
#include <string>
#include <vector>

#include "iet/linalg.hpp"

namespace iet {

// Combinatorial data of an interval exchange: an ordered alphabet of d >= 2
// symbols plus the two bijections onto {1..d} giving the meeting order of
// the intervals before and after the map. Positions are stored 0-based.
class CombinatorialData {
 public:
  CombinatorialData() = default;
  CombinatorialData(std::vector<std::string> alphabet, std::vector<int> pos0,
                    std::vector<int> pos1);

  // Convenience: build from position-row strings, e.g. top "ABCD",
  // bottom "DCBA" (single-letter symbols, top row read left to right).
  static CombinatorialData from_rows(const std::string& top,
                                     const std::string& bottom);

  std::size_t dim() const { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& symbol(int id) const { return alphabet_[id]; }
  int id_of(const std::string& symbol) const;

  // 0-based position of a symbol in row eps.
  int pos(int eps, int id) const { return eps == 0 ? pos0_[id] : pos1_[id]; }
  // Symbol id occupying 0-based position p in row eps.
  int at(int eps, int p) const { return eps == 0 ? inv0_[p] : inv1_[p]; }

  // alpha_eps: symbol in last position of row eps.
  int last(int eps) const { return at(eps, static_cast<int>(dim()) - 1); }
  // symbol in first position of row eps.
  int first(int eps) const { return at(eps, 0); }

  bool is_admissible() const;

  // Antisymmetric matrix with the +1 / -1 / 0 sign rule on position pairs.
  IMat omega() const;

  // Swap the two rows (conjugates the map to its inverse).
  CombinatorialData involution() const;

  // Rename symbols through a bijection old-name -> new-name.
  CombinatorialData renamed(const std::map<std::string, std::string>&) const;

  // The permutation pi1 o pi0^{-1} as a vector: entry p (0-based top
  // position) is the 0-based bottom position of the same symbol. This is the
  // renaming-invariant key used by reduced Rauzy diagrams.
  std::vector<int> reduced_key() const;

  bool operator==(const CombinatorialData& o) const {
    return alphabet_ == o.alphabet_ && pos0_ == o.pos0_ && pos1_ == o.pos1_;
  }
  bool operator<(const CombinatorialData& o) const {
    if (pos0_ != o.pos0_) return pos0_ < o.pos0_;
    return pos1_ < o.pos1_;
  }

  // "ABCD/DCBA"-style display (multi-char symbols joined with dots).
  std::string rows_string() const;

 private:
  void rebuild_inverse();
  std::vector<std::string> alphabet_;
  std::vector<int> pos0_, pos1_;  // symbol id -> 0-based position
  std::vector<int> inv0_, inv1_;  // 0-based position -> symbol id
};

}  // namespace iet
