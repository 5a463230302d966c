#pragma once

#include <map>
#include <optional>

#include "iet/iem.hpp"

namespace iet {

// One arrow of a Rauzy diagram. `winner` is the arrow's name (the symbol in
// last position of row `type` at the source), `loser` the secondary name.
// The elementary matrix is V = I + E_{winner,loser}.
struct RauzyArrow {
  CombinatorialData source;
  CombinatorialData target;
  int type = 0;  // eps
  int winner = -1;
  int loser = -1;

  IMat v_matrix() const {
    IMat v = IMat::identity(source.dim());
    v(winner, loser) = 1;
    return v;
  }
};

// Combinatorial Rauzy operation R_eps on admissible data.
CombinatorialData rauzy_move(const CombinatorialData& c, int eps);

// The basic induction step on an i.e.m. Throws ConnexionHalt when the two
// candidate lengths are equal.
std::pair<Iem, RauzyArrow> rauzy_step(const Iem& iem);

struct DiagramArrow {
  int src = 0, dst = 0;
  int type = 0;
  int winner = -1, loser = -1;
};

struct RauzyDiagram {
  std::vector<CombinatorialData> vertices;
  std::vector<DiagramArrow> arrows;  // two per vertex, in vertex order

  int index_of(const CombinatorialData& c) const;
  // in/out degree 2 with one arrow of each type at every vertex
  bool degrees_ok() const;
  // vertex set closed under swapping the two rows
  bool involution_closed() const;
};

// Breadth-first closure of a base vertex under both Rauzy operations.
RauzyDiagram build_diagram(const CombinatorialData& base);

// Quotient of a diagram by the renaming-invariant key pi1 o pi0^{-1}.
struct ReducedDiagram {
  std::vector<std::vector<int>> vertices;  // reduced keys
  std::vector<DiagramArrow> arrows;        // winner/loser refer to a sample lift
};
ReducedDiagram reduce_diagram(const RauzyDiagram& full);

struct NameNotAvailable : std::runtime_error {
  NameNotAvailable(std::size_t index, std::string name)
      : std::runtime_error("requested arrow name not available at step " +
                           std::to_string(index) + ": " + name),
        at_index(index) {}
  std::size_t at_index;
};

struct OrbitStep {
  int type = 0;
  int winner = -1;
  int loser = -1;
};

// A finite piece of a Rauzy-Veech induction orbit. Length-driven orbits also
// carry the exact length vectors at every step; path-driven ones only the
// combinatorial path and matrices.
class CocycleOrbit {
 public:
  CocycleOrbit(CombinatorialData base, std::vector<Rational> base_lengths)
      : base_(std::move(base)) {
    combos_.push_back(base_);
    if (!base_lengths.empty()) lambdas_.push_back(std::move(base_lengths));
  }

  const CombinatorialData& base() const { return base_; }
  std::size_t size() const { return steps_.size(); }  // number of arrows
  bool length_driven() const { return !lambdas_.empty(); }

  const std::vector<OrbitStep>& steps() const { return steps_; }
  const CombinatorialData& combo_at(std::size_t n) const { return combos_[n]; }
  const std::vector<Rational>& lambda_at(std::size_t n) const {
    return lambdas_[n];
  }

  // Concatenation of arrow names (single-letter alphabets only).
  std::string name_string() const;

  // Product V^(from+1) ... V^(to) of elementary matrices, exact.
  IMat v_product(std::size_t from, std::size_t to) const;

  bool halted() const { return halt_.has_value(); }
  const Connexion& halt_witness() const { return halt_->witness; }

  void push(const RauzyArrow& a, const std::vector<Rational>* new_lengths);
  void mark_halt(ConnexionHalt h) { halt_ = std::move(h); }

 private:
  CombinatorialData base_;
  std::vector<OrbitStep> steps_;
  std::vector<CombinatorialData> combos_;     // size() + 1 entries
  std::vector<std::vector<Rational>> lambdas_;  // size() + 1 when length-driven
  std::optional<ConnexionHalt> halt_;
};

// Run the requested number of basic steps in exact arithmetic. A connexion
// halt is recorded on the returned (partial) orbit, not thrown.
CocycleOrbit iterate(const Iem& iem, std::size_t steps);

// Follow a sequence of arrow names from a base vertex (no lengths).
CocycleOrbit path_by_names(const CombinatorialData& base,
                           const std::vector<std::string>& names);

// Same, names given as a single string of one-letter symbols.
CocycleOrbit path_by_names(const CombinatorialData& base,
                           const std::string& names);

}  // namespace iet
