#pragma once

#include "iet/roth.hpp"

namespace iet {

// The genus-two loop family on the reversal diagram: loop names
// D^2 C D A^2 B^n A, with explicit matrices and eigen-structure.
namespace family_a {

CombinatorialData base();              // ABCD / DCBA
std::string loop_names(long n);        // D^2 C D A^2 B^n A
IMat loop_matrix(long n);              // exact path product
IMat m_matrix(long n);                 // the closed-form matrix
std::vector<BigInt> char_poly_closed(long n);  // X^4-(n+6)X^3+(3n+10)X^2-...

struct EigenData {
  bool degenerate = false;  // n = 0
  double u_plus = 0, u_minus = 0;          // lambda + 1/lambda values
  double lam_u_plus = 0, lam_u_minus = 0;  // expanding eigenvalues
  double lam_s_plus = 0, lam_s_minus = 0;  // contracting eigenvalues
  // eigenvectors of the transposed matrix, rows ordered
  // (u+, u-, s-, s+); the convention that matched the residual test.
  Eigen::Matrix4d vectors;
  bool formula_matches_transpose = true;
  double residual = 0;  // worst |tM v - lambda v| / |v|
};
EigenData eigen_data(long n);

// Coordinate update in the limit basis and the two cone-contraction
// estimates; counts violations over random samples.
struct ConeReport {
  long samples = 0;
  long cone1_violations = 0;
  long cone2_violations = 0;
  double cone1_min_slack = 0;  // min of lhs - rhs over the sample
  double cone2_min_slack = 0;
};
ConeReport cone_checks(long n, long samples, unsigned long seed);

// Length vector following the loop pattern for `loops` rounds: the exact
// row mix of the loop-matrix product, normalized; induction from these
// lengths follows the family path through the given depth.
std::vector<Rational> lengths_from_loops(const std::vector<long>& ns);

// The D = 3 acceleration blocks of the concatenated loop path in closed
// form: a transient window, then per loop a window capped by the B-run
// (closed form in n) alternating with a fixed window.
std::vector<IMat> zorich_blocks(const std::vector<BigInt>& ns);

// Path-driven (exact) or block-built (for huge parameters) orbit of the
// loop family plus diagnostics.
struct FamilyDiagnostics {
  AccelOrbit accel;
  RothReport roth;
};
FamilyDiagnostics diagnostics(const std::vector<BigInt>& ns);

}  // namespace family_a

// The non-uniquely-ergodic family: alternating loops gamma_0, gamma_1 with
// the factorial parameter recursion.
namespace family_b {

CombinatorialData base();  // ABCD / DCBA
std::string loop0_names(long m, long n, long p);  // D^{3m+1} B C^n B D C^p D
std::string loop1_names(long m, long n, long p);  // A^{3m+1} C B^n C A B^p A
IMat z0_matrix(const BigInt& m, const BigInt& n, const BigInt& p);
IMat z1_matrix(const BigInt& m, const BigInt& n, const BigInt& p);

struct Parameters {
  std::vector<BigInt> m, n, p;  // m[k], n[k], p[k] for k = 0..K-1
};
Parameters parameters(long n0, std::size_t K);

BigInt c_value(long n0, long k);  // n0^3 [ (n0+k)! / n0! ]^2, k >= -2

struct Certificate {
  std::size_t K = 0;
  long n0 = 0;
  std::vector<IMat> q;  // Q(k), k = 1..K (alternating products)
  // normalized columns and their limit targets
  std::vector<double> dist_to_uA;  // per k: l1 distance of e_A(k)/|.| to uA
  std::vector<double> dist_to_uD;  // per k: l1 distance of e_D(k)/|.| to uD
  double cluster_separation = 0;   // l1 distance of the two final directions
  std::vector<double> drift;       // per l: |e_D(2l)/|.| - e_D(2l-1)/|.| |_1
  std::vector<double> drift_scale;  // (n0+6l)^2 * drift
  std::vector<double> growth_exponent;  // ln||Z(k)||_inf / ln(n0+3k)
};
Certificate certificate(long n0, std::size_t K);

// Path-driven accelerated orbit of the alternating-loop path with K loops
// (small parameters only; the path has sum-of-parameters many arrows).
AccelOrbit accelerated_path(long n0, std::size_t K);

// Block-built accelerated view from the closed-form Z matrices (any depth).
AccelOrbit accelerated_blocks(long n0, std::size_t K);

// Diagnostics of the family path at depth K (block-built).
RothReport diagnostics(long n0, std::size_t K);

}  // namespace family_b

}  // namespace iet
