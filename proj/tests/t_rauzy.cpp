#include <doctest.h>

#include <random>
#include <set>

#include "iet/rauzy.hpp"

using namespace iet;

namespace {
Iem make_iem(const std::string& top, const std::string& bottom,
             const std::vector<std::string>& lens) {
  std::vector<Rational> l;
  for (const auto& s : lens) l.push_back(parse_rational(s));
  return Iem(CombinatorialData::from_rows(top, bottom), l);
}
}  // namespace

TEST_CASE("basic step, d=2") {
  Iem t = make_iem("AB", "BA", {"3/5", "2/5"});
  auto [next, arrow] = rauzy_step(t);
  CHECK(arrow.type == 1);  // alpha_1 = A carries the longer interval
  CHECK(t.combo().symbol(arrow.winner) == "A");
  CHECK(t.combo().symbol(arrow.loser) == "B");
  CHECK(next.length(0) == parse_rational("1/5"));
  CHECK(next.length(1) == parse_rational("2/5"));
  CHECK(next.combo() == t.combo());  // d=2: both moves are loops
  IMat v = arrow.v_matrix();
  CHECK(v(0, 1) == 1);
  CHECK(det_exact(v) == 1);
  // lambda recovery: old lengths = V * new lengths
  auto rec = QMat(2);
  CHECK(Rational(v(0, 0)) * next.length(0) + Rational(v(0, 1)) * next.length(1) ==
        t.length(0));
}

TEST_CASE("basic step halts on the equality case") {
  Iem t = make_iem("AB", "BA", {"1/2", "1/2"});
  CHECK_THROWS_AS(rauzy_step(t), ConnexionHalt);
}

TEST_CASE("basic step, d=4 type 0 three-case rule") {
  // lambda_D > lambda_A: type 0, top row fixed, bottom recomputed
  Iem t = make_iem("ABCD", "DCBA", {"1/10", "2/10", "3/10", "4/10"});
  auto [next, arrow] = rauzy_step(t);
  CHECK(arrow.type == 0);
  CHECK(t.combo().symbol(arrow.winner) == "D");
  CHECK(t.combo().symbol(arrow.loser) == "A");
  // top row unchanged, bottom D<A<C<B per the displacement rule
  CHECK(next.combo().rows_string() == "ABCD/DACB");
  // new data admissible and present in the diagram built from the base
  CHECK(next.combo().is_admissible());
  RauzyDiagram dia = build_diagram(t.combo());
  CHECK(dia.index_of(next.combo()) >= 0);
}

TEST_CASE("diagram d=2: one vertex, two loops") {
  RauzyDiagram dia = build_diagram(CombinatorialData::from_rows("AB", "BA"));
  CHECK(dia.vertices.size() == 1);
  CHECK(dia.arrows.size() == 2);
  CHECK(dia.degrees_ok());
  CHECK(dia.involution_closed());
}

TEST_CASE("diagram d=4 reversal: 7 vertices, regular degrees, involution") {
  RauzyDiagram dia = build_diagram(CombinatorialData::from_rows("ABCD", "DCBA"));
  CHECK(dia.vertices.size() == 7);
  CHECK(dia.arrows.size() == 14);
  CHECK(dia.degrees_ok());
  CHECK(dia.involution_closed());
  // reduced diagram of this component is isomorphic (covering degree 1)
  CHECK(reduce_diagram(dia).vertices.size() == 7);
}

TEST_CASE("second d=4 family: reduced diagram is a degree-2 quotient") {
  // A base from the other d=4 Rauzy class.
  RauzyDiagram dia = build_diagram(CombinatorialData::from_rows("ABCD", "BCDA"));
  CHECK(dia.degrees_ok());
  CHECK(dia.involution_closed());
  CHECK(dia.vertices.size() == 12);
  CHECK(reduce_diagram(dia).vertices.size() * 2 == dia.vertices.size());
}

TEST_CASE("path by names: named loop products") {
  CombinatorialData base = CombinatorialData::from_rows("ABCD", "DCBA");
  // D^2 C D A^2 B^n A with n=1
  CocycleOrbit orbit = path_by_names(base, std::string("DDCDAABA"));
  IMat prod = orbit.v_product(0, orbit.size());
  IMat expect = int_mat_from_rows(
      {{1, 1, 1, 1}, {1, 2, 0, 0}, {0, 0, 2, 1}, {2, 3, 2, 2}});
  CHECK(prod == expect);
  // loop closes at the base vertex
  CHECK(orbit.combo_at(orbit.size()) == base);

  // D^{3m+1} B C^n B D C^p D at (m,n,p) = (0,1,1)
  CocycleOrbit orbit2 = path_by_names(base, std::string("DBCBDCD"));
  IMat expect2 = int_mat_from_rows(
      {{1, 0, 0, 0}, {0, 2, 3, 2}, {0, 1, 4, 2}, {1, 1, 1, 1}});
  CHECK(orbit2.v_product(0, orbit2.size()) == expect2);
  CHECK(orbit2.combo_at(orbit2.size()) == base);

  // empty name list: identity orbit
  CocycleOrbit empty = path_by_names(base, std::string(""));
  CHECK(empty.size() == 0);
  CHECK(empty.v_product(0, 0) == IMat::identity(4));

  CHECK_THROWS_AS(path_by_names(base, std::string("C")), NameNotAvailable);
}

TEST_CASE("iterate: rational data halts, lambda recovery exact") {
  Iem fib = make_iem("AB", "BA", {"233/377", "144/377"});
  CocycleOrbit orbit = iterate(fib, 100000);
  CHECK(orbit.halted());
  CHECK(orbit.size() < 100000);
  // lambda^{n-1} = V^{(n)} lambda^{(n)} and total lengths strictly decrease
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const auto& prev = orbit.lambda_at(n);
    const auto& next = orbit.lambda_at(n + 1);
    const auto& st = orbit.steps()[n];
    for (std::size_t i = 0; i < 2; ++i) {
      Rational expect = next[i];
      if (static_cast<int>(i) == st.winner) expect += next[st.loser];
      CHECK(prev[i] == expect);
    }
  }
}

TEST_CASE("iterate: all names occur on long non-halted prefixes") {
  std::mt19937_64 rng(777);
  int tested = 0;
  for (int trial = 0; trial < 20 && tested < 3; ++trial) {
    std::vector<Rational> lens;
    for (int i = 0; i < 4; ++i) {
      unsigned long num = (rng() & 0xffffffffUL) | 1UL;
      Rational l(BigInt(num), BigInt(1UL) << 32);
      l.canonicalize();
      lens.push_back(l);
    }
    Iem t(CombinatorialData::from_rows("ABCD", "DCBA"), lens);
    CocycleOrbit orbit = iterate(t, 500);
    if (orbit.halted()) continue;
    ++tested;
    std::set<int> seen;
    for (const auto& st : orbit.steps()) seen.insert(st.winner);
    CHECK(seen.size() == 4);
  }
  CHECK(tested >= 1);
}

TEST_CASE("iterate steps=0 gives the empty orbit") {
  Iem t = make_iem("AB", "BA", {"3/5", "2/5"});
  CocycleOrbit orbit = iterate(t, 0);
  CHECK(orbit.size() == 0);
  CHECK(orbit.lambda_at(0) == t.lengths());
}

TEST_CASE("path-driven and length-driven orbits agree") {
  Iem t = make_iem("ABCD", "DCBA",
                   {"355467/1048576", "113321/1048576", "277199/1048576",
                    "255001/1048576"});
  CocycleOrbit lo = iterate(t, 40);
  REQUIRE(!lo.halted());
  std::vector<std::string> names;
  for (const auto& st : lo.steps()) names.push_back(t.combo().symbol(st.winner));
  CocycleOrbit po = path_by_names(t.combo(), names);
  CHECK(po.v_product(0, po.size()) == lo.v_product(0, lo.size()));
}
