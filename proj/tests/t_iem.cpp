#include <doctest.h>

#include <random>

#include "iet/iem.hpp"

using namespace iet;

namespace {
Iem make_iem(const std::string& top, const std::string& bottom,
             const std::vector<std::string>& lens) {
  std::vector<Rational> l;
  for (const auto& s : lens) l.push_back(parse_rational(s));
  return Iem(CombinatorialData::from_rows(top, bottom), l);
}
}  // namespace

TEST_CASE("omega sign rule, d=2 and full reversal") {
  Iem t2 = make_iem("AB", "BA", {"3/5", "2/5"});
  CHECK(t2.omega()(0, 1) == 1);
  CHECK(t2.omega()(1, 0) == -1);
  CHECK(t2.omega()(0, 0) == 0);

  // Full reversal: +1 strictly above the diagonal, -1 below. Cross-check
  // against a direct enumeration of the sign rule over all ordered pairs.
  CombinatorialData rev = CombinatorialData::from_rows("ABCD", "DCBA");
  IMat om = rev.omega();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int expect = 0;
      bool plus = rev.pos(0, b) > rev.pos(0, a) && rev.pos(1, b) < rev.pos(1, a);
      bool minus = rev.pos(0, b) < rev.pos(0, a) && rev.pos(1, b) > rev.pos(1, a);
      if (plus) expect = 1;
      if (minus) expect = -1;
      CHECK(om(a, b) == expect);
      CHECK(om(a, b) + om(b, a) == 0);
      if (a < b) CHECK(om(a, b) == 1);
    }
}

TEST_CASE("evaluate and layout") {
  Iem t = make_iem("AB", "BA", {"3/5", "2/5"});
  CHECK(t.evaluate(Rational(0)) == parse_rational("2/5"));
  // interval starts map to the other row's starts
  for (int id = 0; id < 2; ++id)
    CHECK(t.evaluate(t.left(0, id)) == t.left(1, id));
  CHECK_THROWS_AS(t.evaluate(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(t.evaluate(Rational(-1)), std::domain_error);
}

TEST_CASE("partition property and measure preservation at desk scale") {
  Iem t = make_iem("ABCD", "DCBA", {"5/17", "3/17", "7/17", "2/17"});
  for (int eps = 0; eps < 2; ++eps) {
    Rational acc(0);
    for (std::size_t p = 0; p < 4; ++p) {
      int id = t.combo().at(eps, static_cast<int>(p));
      CHECK(t.left(eps, id) == acc);
      acc += t.length(id);
    }
    CHECK(acc == t.total());
  }
  // image of each top interval is the bottom interval of the same symbol
  for (int id = 0; id < 4; ++id)
    CHECK(t.evaluate(t.left(0, id)) == t.left(1, id));
}

TEST_CASE("inverse is an involution with negated omega and delta") {
  Iem t = make_iem("ABCD", "DCBA", {"5/17", "3/17", "7/17", "2/17"});
  Iem ti = t.inverse();
  CHECK(ti.inverse().combo() == t.combo());
  for (int a = 0; a < 4; ++a) {
    CHECK(ti.translation()[a] == -t.translation()[a]);
    for (int b = 0; b < 4; ++b) CHECK(ti.omega()(a, b) == -t.omega()(a, b));
  }
  // round-trip on 100 random rational points
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 100; ++i) {
    unsigned long num = rng() % 10000;
    Rational x(static_cast<long>(num), 10000);
    x.canonicalize();
    if (x >= t.total()) continue;
    CHECK(ti.evaluate(t.evaluate(x)) == x);
    CHECK(t.evaluate(ti.evaluate(x)) == x);
  }
}

TEST_CASE("connexion search") {
  // equal halves: the two singularity orbits meet after one step
  Iem half = make_iem("AB", "BA", {"1/2", "1/2"});
  auto res = half.find_connexion(10);
  REQUIRE(res.found.has_value());
  CHECK(res.found->m == 1);

  // Fibonacci truncation of the golden rotation: no connexion within 1000
  Iem fib = make_iem("AB", "BA", {"2584/4181", "1597/4181"});
  auto res2 = fib.find_connexion(1000);
  CHECK_FALSE(res2.found.has_value());
  CHECK(res2.horizon == 1000);

  // declared rationally independent: certificate without iteration
  Iem flagged(CombinatorialData::from_rows("AB", "BA"),
              {parse_rational("1/2"), parse_rational("1/2")}, true);
  auto res3 = flagged.find_connexion(10);
  CHECK(res3.certified_by_independence);
  CHECK_FALSE(res3.found.has_value());
}
