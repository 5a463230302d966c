#include "iet/rauzy.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace iet {

CombinatorialData rauzy_move(const CombinatorialData& c, int eps) {
  const int d = static_cast<int>(c.dim());
  const int winner = c.last(eps);
  const int other = 1 - eps;
  const int pw = c.pos(other, winner);
  std::vector<int> pos_keep(d), pos_move(d);
  for (int id = 0; id < d; ++id) {
    pos_keep[id] = c.pos(eps, id);
    const int p = c.pos(other, id);
    if (p <= pw)
      pos_move[id] = p;
    else if (p < d - 1)
      pos_move[id] = p + 1;
    else
      pos_move[id] = pw + 1;
  }
  if (eps == 0)
    return CombinatorialData(c.alphabet(), pos_keep, pos_move);
  return CombinatorialData(c.alphabet(), pos_move, pos_keep);
}

std::pair<Iem, RauzyArrow> rauzy_step(const Iem& iem) {
  const CombinatorialData& c = iem.combo();
  const int a0 = c.last(0);
  const int a1 = c.last(1);
  const Rational& l0 = iem.length(a0);
  const Rational& l1 = iem.length(a1);
  if (l0 == l1) throw ConnexionHalt(Connexion{a0, a1, 1}, 0);
  const int eps = l0 > l1 ? 0 : 1;
  const int winner = eps == 0 ? a0 : a1;
  const int loser = eps == 0 ? a1 : a0;
  std::vector<Rational> lengths = iem.lengths();
  lengths[winner] -= lengths[loser];
  RauzyArrow arrow;
  arrow.source = c;
  arrow.target = rauzy_move(c, eps);
  arrow.type = eps;
  arrow.winner = winner;
  arrow.loser = loser;
  if (!arrow.target.is_admissible())
    throw std::logic_error("rauzy step produced inadmissible data");
  return {Iem(arrow.target, std::move(lengths),
              iem.rationally_independent_flag()),
          arrow};
}

int RauzyDiagram::index_of(const CombinatorialData& c) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == c) return static_cast<int>(i);
  return -1;
}

bool RauzyDiagram::degrees_ok() const {
  const std::size_t n = vertices.size();
  std::vector<std::array<int, 2>> out(n, {0, 0}), in(n, {0, 0});
  for (const auto& a : arrows) {
    ++out[a.src][a.type];
    ++in[a.dst][a.type];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (out[i][0] != 1 || out[i][1] != 1 || in[i][0] != 1 || in[i][1] != 1)
      return false;
  return true;
}

bool RauzyDiagram::involution_closed() const {
  // Swapping the two rows inverts the renaming-invariant key pi1 o pi0^{-1};
  // the diagram is involution-symmetric iff its key set is closed under
  // permutation inversion.
  std::set<std::vector<int>> keys;
  for (const auto& v : vertices) keys.insert(v.reduced_key());
  for (const auto& k : keys) {
    std::vector<int> inv(k.size());
    for (std::size_t p = 0; p < k.size(); ++p) inv[k[p]] = static_cast<int>(p);
    if (!keys.count(inv)) return false;
  }
  return true;
}

RauzyDiagram build_diagram(const CombinatorialData& base) {
  if (!base.is_admissible())
    throw std::invalid_argument("base combinatorial data not admissible");
  RauzyDiagram dia;
  std::map<CombinatorialData, int> index;
  std::deque<int> todo;
  dia.vertices.push_back(base);
  index[base] = 0;
  todo.push_back(0);
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop_front();
    for (int eps = 0; eps < 2; ++eps) {
      CombinatorialData src = dia.vertices[cur];
      CombinatorialData dst = rauzy_move(src, eps);
      auto [it, inserted] =
          index.try_emplace(dst, static_cast<int>(dia.vertices.size()));
      if (inserted) {
        dia.vertices.push_back(dst);
        todo.push_back(it->second);
      }
      DiagramArrow a;
      a.src = cur;
      a.dst = it->second;
      a.type = eps;
      a.winner = src.last(eps);
      a.loser = src.last(1 - eps);
      dia.arrows.push_back(a);
    }
  }
  return dia;
}

ReducedDiagram reduce_diagram(const RauzyDiagram& full) {
  ReducedDiagram red;
  std::map<std::vector<int>, int> index;
  std::vector<int> project(full.vertices.size());
  for (std::size_t i = 0; i < full.vertices.size(); ++i) {
    auto key = full.vertices[i].reduced_key();
    auto [it, inserted] =
        index.try_emplace(key, static_cast<int>(red.vertices.size()));
    if (inserted) red.vertices.push_back(key);
    project[i] = it->second;
  }
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& a : full.arrows) {
    DiagramArrow r = a;
    r.src = project[a.src];
    r.dst = project[a.dst];
    if (seen.insert({r.src, r.dst, r.type}).second) red.arrows.push_back(r);
  }
  return red;
}

std::string CocycleOrbit::name_string() const {
  std::string s;
  for (const auto& st : steps_) s += base_.symbol(st.winner);
  return s;
}

IMat CocycleOrbit::v_product(std::size_t from, std::size_t to) const {
  if (from > to || to > steps_.size())
    throw std::out_of_range("v_product range");
  IMat q = IMat::identity(base_.dim());
  for (std::size_t n = from; n < to; ++n)
    q.add_col(steps_[n].winner, steps_[n].loser);
  return q;
}

void CocycleOrbit::push(const RauzyArrow& a,
                        const std::vector<Rational>* new_lengths) {
  steps_.push_back(OrbitStep{a.type, a.winner, a.loser});
  combos_.push_back(a.target);
  if (new_lengths) lambdas_.push_back(*new_lengths);
}

CocycleOrbit iterate(const Iem& iem, std::size_t steps) {
  CocycleOrbit orbit(iem.combo(), iem.lengths());
  Iem cur = iem;
  for (std::size_t n = 0; n < steps; ++n) {
    try {
      auto [next, arrow] = rauzy_step(cur);
      orbit.push(arrow, &next.lengths());
      cur = std::move(next);
    } catch (ConnexionHalt& halt) {
      orbit.mark_halt(ConnexionHalt(halt.witness, n));
      break;
    }
  }
  return orbit;
}

namespace {
CocycleOrbit follow_names(const CombinatorialData& base,
                          const std::vector<std::string>& names) {
  if (!base.is_admissible())
    throw std::invalid_argument("base combinatorial data not admissible");
  CocycleOrbit orbit(base, {});
  CombinatorialData cur = base;
  for (std::size_t n = 0; n < names.size(); ++n) {
    int eps;
    if (base.symbol(cur.last(0)) == names[n])
      eps = 0;
    else if (base.symbol(cur.last(1)) == names[n])
      eps = 1;
    else
      throw NameNotAvailable(n, names[n]);
    RauzyArrow a;
    a.source = cur;
    a.target = rauzy_move(cur, eps);
    a.type = eps;
    a.winner = cur.last(eps);
    a.loser = cur.last(1 - eps);
    orbit.push(a, nullptr);
    cur = a.target;
  }
  return orbit;
}
}  // namespace

CocycleOrbit path_by_names(const CombinatorialData& base,
                           const std::vector<std::string>& names) {
  return follow_names(base, names);
}

CocycleOrbit path_by_names(const CombinatorialData& base,
                           const std::string& names) {
  std::vector<std::string> v;
  v.reserve(names.size());
  for (char c : names) v.emplace_back(1, c);
  return follow_names(base, v);
}

}  // namespace iet
