#pragma once

#include "iet/rauzy.hpp"

namespace iet {

struct InvalidSuspension : std::runtime_error {
  explicit InvalidSuspension(const std::string& what)
      : std::runtime_error(what) {}
};

// Suspension data over an i.e.m.: heights tau with zeta = lambda + i tau.
// Carries the partial sums along both rows, the translation complex vector
// and the return heights h = -Omega tau, all exact.
struct SuspensionData {
  Iem iem;
  std::vector<Rational> tau;
  // partial sums xi^eps_alpha = sum over symbols up to alpha in row eps
  std::vector<Rational> xi_re[2], xi_im[2];
  std::vector<Rational> h;  // -Omega tau, all positive
  Rational area;            // sum lambda_alpha h_alpha

  const Rational& common_im() const {  // Im xi^0 at the top-last symbol
    return xi_im[0][iem.combo().last(0)];
  }
};

// Computes the derived quantities and checks the suspension inequalities
// exactly; throws InvalidSuspension naming the violated inequality.
SuspensionData validate_suspension(const Iem& iem, std::vector<Rational> tau);

// Combinatorial boundary data of the suspended surface.
struct SurfaceSummary {
  int d = 0;
  std::vector<int> cycle_half_lengths;  // n_C per cycle (cycle length 2 n_C)
  int nu = 0;                           // number of marked points
  int genus = 0;
  std::vector<int> singularity_orders;  // n_C - 1, sorted descending
};
SurfaceSummary surface_summary(const CombinatorialData& combo);

// One basic induction step on suspension data (throws ConnexionHalt on the
// equality case); the result is validated.
SuspensionData suspension_step(const SuspensionData& susp);

// The inverse of the basic step; requires a nonzero common imaginary part.
SuspensionData suspension_step_inverse(const SuspensionData& susp);

// Membership in the polyhedral cells realizing the accelerated dynamics as
// a first-return map: 0, 1, or -1 for the boundary/outside case.
int zorich_cell(const SuspensionData& susp);

// Exact Teichmuller flow: lambda -> c lambda, tau -> tau / c with a positive
// rational scale c (time t = 2 ln c).
SuspensionData teichmuller_flow(const SuspensionData& susp, const Rational& c);

// Double-time convenience: scales by the dyadic rational nearest to e^{t/2}.
SuspensionData teichmuller_flow_time(const SuspensionData& susp, double t);

// Full same-type run of basic steps (one Zorich step) followed by the exact
// rational rescale restoring the post-step total length. Returns the number
// of basic steps taken as well.
std::pair<SuspensionData, std::size_t> normalized_step(
    const SuspensionData& susp);

// Canonical involution on suspensions: rows swapped, tau negated; h is
// unchanged and validity is preserved.
SuspensionData suspension_involution(const SuspensionData& susp);

}  // namespace iet
