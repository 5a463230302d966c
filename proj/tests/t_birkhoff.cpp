#include <doctest.h>

#include <random>

#include "iet/birkhoff.hpp"
#include "iet/roth.hpp"

using namespace iet;

namespace {

std::vector<Rational> random_lengths(std::mt19937_64& rng, int d) {
  std::vector<Rational> lens;
  for (int i = 0; i < d; ++i) {
    unsigned long num = (rng() & 0xffffffffUL) | 1UL;
    Rational l(BigInt(num), BigInt(1UL) << 32);
    l.canonicalize();
    lens.push_back(l);
  }
  return lens;
}

AccelOrbit surviving_orbit(std::mt19937_64& rng, const std::string& top,
                           const std::string& bottom, std::size_t steps,
                           std::size_t min_blocks) {
  const int d = static_cast<int>(top.size());
  for (int trial = 0; trial < 50; ++trial) {
    Iem t(CombinatorialData::from_rows(top, bottom), random_lengths(rng, d));
    CocycleOrbit orbit = iterate(t, steps);
    if (orbit.halted()) continue;
    try {
      AccelOrbit acc(orbit, d - 1);
      if (acc.block_count() >= min_blocks) return acc;
    } catch (const InsufficientOrbit&) {
    }
  }
  throw std::runtime_error("no surviving orbit found");
}

// piecewise-linear test function with a breakpoint inside each interval
PiecewiseFunc sample_pwl(const Layout& lay, std::mt19937_64& rng) {
  PiecewiseFunc f(lay);
  for (std::size_t id = 0; id < lay.dim(); ++id) {
    Rational mid = lay.left[id] + lay.len[id] / 2;
    Rational a(static_cast<long>(rng() % 19) - 9, 7);
    Rational b(static_cast<long>(rng() % 19) - 9, 5);
    a.canonicalize();
    b.canonicalize();
    f.append(static_cast<int>(id),
             Piece{lay.left[id], mid, Poly({a, b})});
    Rational c(static_cast<long>(rng() % 19) - 9, 3);
    c.canonicalize();
    f.append(static_cast<int>(id),
             Piece{mid, lay.left[id] + lay.len[id], Poly({c, -b})});
  }
  f.check_tiling();
  return f;
}

Rational random_point(std::mt19937_64& rng, const Rational& total) {
  Rational x(BigInt(rng() & 0xffffffffUL), BigInt(1UL) << 32);
  x.canonicalize();
  while (x >= total) x /= 2;
  return x;
}

}  // namespace

TEST_CASE("piecewise basics: primitive, derivative, variation") {
  Layout lay;
  lay.left = {Rational(0), Rational(1, 2)};
  lay.len = {Rational(1, 2), Rational(1, 2)};
  lay.order = {0, 1};
  lay.total = Rational(1);
  PiecewiseFunc f(lay);
  f.append(0, Piece{Rational(0), Rational(1, 2), Poly({Rational(0), Rational(2)})});
  f.append(1, Piece{Rational(1, 2), Rational(1), Poly({Rational(1)})});
  f.check_tiling();
  CHECK(f.eval(Rational(1, 4)) == Rational(1, 2));
  CHECK(f.integral() == Rational(1, 4) + Rational(1, 2));
  PiecewiseFunc p = f.primitive_mean_zero();
  for (int id = 0; id < 2; ++id) CHECK(p.integral_on(id) == 0);
  PiecewiseFunc back = p.derivative();
  CHECK(back.eval(Rational(1, 8)) == f.eval(Rational(1, 8)));
  CHECK(f.variation_exact() == Rational(1));  // slope-2 ramp over [0,1/2]
}

TEST_CASE("special sums: operator laws on random instances") {
  std::mt19937_64 rng(5151);
  for (int inst = 0; inst < 20; ++inst) {
    const bool d4 = inst % 2 == 0;
    AccelOrbit acc = d4 ? surviving_orbit(rng, "ABCD", "DCBA", 260, 5)
                        : surviving_orbit(rng, "ABC", "CBA", 260, 5);
    Iem t0 = acc.level_iem(0);
    Layout lay = Layout::of(t0);
    PiecewiseFunc phi = sample_pwl(lay, rng);

    // composed materialization S(0,2) = S(1,2) o S(0,1)
    PiecewiseFunc s02 = special_sum_function(acc, 0, 2, phi);
    PiecewiseFunc s12 = special_sum_step(acc, 1, special_sum_step(acc, 0, phi));
    Iem t2 = acc.level_iem(2);
    Rational x = random_point(rng, t2.total());
    CHECK(s02.eval(x) == s12.eval(x));

    // pointwise S(k,m) equals composition through an intermediate level
    Rational direct = special_birkhoff_sum(acc, 0, 2, phi, x);
    CHECK(direct == s02.eval(x));

    // integral conservation
    CHECK(s02.integral() == phi.integral());

    // variation contraction (exact, degree <= 2)
    CHECK(s02.variation_exact() <= phi.variation_exact());

    // degree preservation
    CHECK(s02.max_degree() <= phi.max_degree());
  }
}

TEST_CASE("Gamma action of special sums is the transposed Q") {
  std::mt19937_64 rng(6006);
  AccelOrbit acc = surviving_orbit(rng, "ABCD", "DCBA", 260, 4);
  Iem t0 = acc.level_iem(0);
  Layout lay = Layout::of(t0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Rational> v;
    for (int i = 0; i < 4; ++i) {
      Rational c(static_cast<long>(rng() % 41) - 20, 11);
      c.canonicalize();
      v.push_back(c);
    }
    PiecewiseFunc phi = PiecewiseFunc::constants(lay, v);
    std::size_t l = 1 + rep % 3;
    PiecewiseFunc pushed = special_sum_function(acc, 0, l, phi);
    IMat tq = gamma_cocycle(acc, 0, l);
    Iem tl = acc.level_iem(l);
    for (int beta = 0; beta < 4; ++beta) {
      Rational expect(0);
      for (int a = 0; a < 4; ++a)
        expect += Rational(acc.q_product(0, l)(a, beta)) * v[a];
      Rational at = pushed.eval(tl.left(0, beta));
      CHECK(at == expect);
    }
    // the mass form is transported exactly
    Rational i_l(0), i_0(0);
    const auto& lam_l = acc.lambda_level(l);
    const auto& lam_0 = acc.lambda_level(0);
    for (int beta = 0; beta < 4; ++beta)
      i_l += lam_l[beta] * pushed.eval(tl.left(0, beta));
    for (int a = 0; a < 4; ++a) i_0 += lam_0[a] * v[a];
    CHECK(i_l == i_0);
  }
}

TEST_CASE("phi identically one counts return times") {
  std::mt19937_64 rng(7331);
  AccelOrbit acc = surviving_orbit(rng, "ABC", "CBA", 220, 4);
  Layout lay = Layout::of(acc.level_iem(0));
  PiecewiseFunc one = PiecewiseFunc::constants(
      lay, std::vector<Rational>(3, Rational(1)));
  Iem t2 = acc.level_iem(2);
  for (int beta = 0; beta < 3; ++beta) {
    Rational s = special_birkhoff_sum(acc, 0, 2, one, t2.left(0, beta));
    CHECK(s == Rational(acc.q_product(0, 2).col_sum(beta)));
  }
}

TEST_CASE("mean-zero projection step") {
  std::mt19937_64 rng(999);
  AccelOrbit acc = surviving_orbit(rng, "ABCD", "DCBA", 260, 4);
  Layout lay = Layout::of(acc.level_iem(0));

  // constants in the kernel of the mass form push to chi = tZ v, remainder 0
  const auto& lam = acc.lambda_level(0);
  std::vector<Rational> v{lam[1], -lam[0], lam[3], -lam[2]};
  PiecewiseFunc phi = PiecewiseFunc::constants(lay, v);
  MeanZeroSplit split = project_mean_zero(acc, 0, phi);
  for (int id = 0; id < 4; ++id) {
    Rational expect(0);
    for (int a = 0; a < 4; ++a)
      expect += Rational(acc.z_block(1)(a, id)) * v[a];
    CHECK(split.gamma[id] == expect);
    for (const auto& p : split.remainder.pieces(id))
      CHECK(p.poly.eval(p.lo) == 0);
  }

  // general input: remainder has exact zero mean on every interval and the
  // projected Gamma part annihilates the level-1 mass form
  PiecewiseFunc psi = sample_pwl(lay, rng);
  std::vector<Rational> m0 = psi.means();
  for (auto& c : m0) c = -c;
  psi.add_constants(m0);
  MeanZeroSplit s2 = project_mean_zero(acc, 0, psi);
  Rational mass(0);
  const auto& lam1 = acc.lambda_level(1);
  for (int id = 0; id < 4; ++id) {
    CHECK(s2.remainder.integral_on(id) == 0);
    mass += lam1[id] * s2.gamma[id];
  }
  CHECK(mass == 0);
  // sup bound of the projected remainder by the total variation
  CHECK(s2.remainder.sup_norm() <= psi.variation() * (1 + 1e-9) + 1e-12);
}

TEST_CASE("Birkhoff sum decomposition reproduces direct sums exactly") {
  std::mt19937_64 rng(24601);
  int done = 0;
  for (int inst = 0; inst < 40 && done < 8; ++inst) {
    const bool d4 = inst % 2 == 0;
    AccelOrbit acc = d4 ? surviving_orbit(rng, "ABCD", "DCBA", 300, 6)
                        : surviving_orbit(rng, "ABC", "CBA", 300, 6);
    Iem t0 = acc.level_iem(0);
    CocycleOrbit rev = iterate(t0.inverse(), 300);
    AccelOrbit bwd(rev, static_cast<int>(acc.dim()) - 1);
    Layout lay = Layout::of(t0);
    std::vector<Rational> v;
    for (std::size_t i = 0; i < acc.dim(); ++i) {
      Rational c(static_cast<long>(rng() % 21) - 10, 13);
      c.canonicalize();
      v.push_back(c);
    }
    PiecewiseFunc phi = PiecewiseFunc::constants(lay, v);
    Rational x = random_point(rng, t0.total());
    long n = static_cast<long>(rng() % 9000) + 1000;
    TwoSidedBirkhoff dec;
    try {
      dec = decompose_birkhoff_two_sided(acc, bwd, x, n);
    } catch (const InsufficientOrbit&) {
      continue;
    }
    CHECK(evaluate_two_sided(acc, bwd, dec, phi) ==
          birkhoff_sum_direct(t0, phi, x, n));
    for (const auto& term : dec.forward.terms)
      CHECK(BigInt(term.count) < term.count_bound);
    for (const auto& term : dec.backward.terms)
      CHECK(BigInt(term.count) < term.count_bound);
    ++done;
  }
  CHECK(done >= 4);
}

TEST_CASE("decomposition of a single summand") {
  std::mt19937_64 rng(8080);
  AccelOrbit acc = surviving_orbit(rng, "ABC", "CBA", 220, 4);
  Iem t0 = acc.level_iem(0);
  Rational x = t0.total() * Rational(9, 10);
  BirkhoffDecomposition dec = decompose_birkhoff(acc, x, 1);
  REQUIRE(dec.terms.size() == 1);
  CHECK(dec.terms[0].level == 0);
  CHECK(dec.terms[0].count == 1);
  CHECK(dec.terms[0].base_point == x);
}
