#include "iet/suspension.hpp"

#include <algorithm>
#include <cmath>

namespace iet {

SuspensionData validate_suspension(const Iem& iem, std::vector<Rational> tau) {
  const int d = static_cast<int>(iem.dim());
  if (static_cast<int>(tau.size()) != d)
    throw std::invalid_argument("tau size mismatch");
  SuspensionData s{iem, std::move(tau), {}, {}, {}, Rational(0)};
  for (int eps = 0; eps < 2; ++eps) {
    s.xi_re[eps].assign(d, Rational(0));
    s.xi_im[eps].assign(d, Rational(0));
    Rational re(0), im(0);
    for (int p = 0; p < d; ++p) {
      int id = iem.combo().at(eps, p);
      re += iem.length(id);
      im += s.tau[id];
      s.xi_re[eps][id] = re;
      s.xi_im[eps][id] = im;
    }
  }
  const int a0 = iem.combo().last(0), a1 = iem.combo().last(1);
  if (s.xi_im[0][a0] != s.xi_im[1][a1])
    throw std::logic_error("row sums of tau disagree");
  for (int id = 0; id < d; ++id) {
    if (id != a0 && !(s.xi_im[0][id] > 0))
      throw InvalidSuspension("Im xi^0 not positive at symbol " +
                              iem.combo().symbol(id));
    if (id != a1 && !(s.xi_im[1][id] < 0))
      throw InvalidSuspension("Im xi^1 not negative at symbol " +
                              iem.combo().symbol(id));
  }
  // h = -Omega tau
  s.h.assign(d, Rational(0));
  const IMat& om = iem.omega();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (om(a, b) == 1)
        s.h[a] -= s.tau[b];
      else if (om(a, b) == -1)
        s.h[a] += s.tau[b];
    }
  for (int id = 0; id < d; ++id)
    if (!(s.h[id] > 0))
      throw InvalidSuspension("height not positive at symbol " +
                              iem.combo().symbol(id));
  // common imaginary part sits between the two heights
  if (!(s.xi_im[0][a0] >= -s.h[a1] && s.xi_im[0][a0] <= s.h[a0]))
    throw std::logic_error("common imaginary part outside its bracket");
  s.area = 0;
  for (int id = 0; id < d; ++id) s.area += iem.length(id) * s.h[id];
  return s;
}

SurfaceSummary surface_summary(const CombinatorialData& combo) {
  if (!combo.is_admissible())
    throw std::invalid_argument("combinatorial data not admissible");
  const int d = static_cast<int>(combo.dim());
  // boundary marks (alpha, side) with side 0 = L, 1 = R; identified pairs
  // share a class id.
  const int a0 = combo.last(0), a1 = combo.last(1);
  const int f0 = combo.first(0), f1 = combo.first(1);
  auto mark = [&](int id, int side) { return 2 * id + side; };
  std::vector<int> cls(2 * d);
  for (int m = 0; m < 2 * d; ++m) cls[m] = m;
  // (a0, R) = (a1, R), (f0, L) = (f1, L)
  cls[mark(a1, 1)] = cls[mark(a0, 1)];
  cls[mark(f1, 0)] = cls[mark(f0, 0)];
  // sigma on marks: (alpha,R) -> (next top symbol, L); (alpha,L) ->
  // (previous bottom symbol, R); on merged classes the representative with
  // an applicable rule is used.
  auto sigma = [&](int m) {
    int id = m / 2, side = m % 2;
    if (side == 1) {
      int alpha = id;
      if (combo.pos(0, alpha) == d - 1) alpha = (id == a0 ? a1 : a0);
      int beta = combo.at(0, combo.pos(0, alpha) + 1);
      return cls[mark(beta, 0)];
    }
    int alpha = id;
    if (combo.pos(1, alpha) == 0) alpha = (id == f1 ? f0 : f1);
    int beta = combo.at(1, combo.pos(1, alpha) - 1);
    return cls[mark(beta, 1)];
  };
  // cycles over class representatives
  std::vector<int> reps;
  for (int m = 0; m < 2 * d; ++m)
    if (cls[m] == m) reps.push_back(m);
  SurfaceSummary sum;
  sum.d = d;
  std::vector<bool> seen(2 * d, false);
  for (int r : reps) {
    if (seen[r]) continue;
    int len = 0, cur = r;
    do {
      seen[cur] = true;
      cur = sigma(cur);
      ++len;
    } while (cur != r);
    if (len % 2 != 0) throw std::logic_error("odd boundary cycle");
    sum.cycle_half_lengths.push_back(len / 2);
  }
  sum.nu = static_cast<int>(sum.cycle_half_lengths.size());
  int total_half = 0, orders = 0;
  for (int n : sum.cycle_half_lengths) {
    total_half += n;
    orders += n - 1;
    sum.singularity_orders.push_back(n - 1);
  }
  std::sort(sum.singularity_orders.rbegin(), sum.singularity_orders.rend());
  if (total_half != d - 1)
    throw std::logic_error("cycle half-lengths do not sum to d-1");
  if (orders % 2 != 0) throw std::logic_error("odd total singularity order");
  sum.genus = orders / 2 + 1;
  if (d != 2 * sum.genus + sum.nu - 1)
    throw std::logic_error("genus bookkeeping failed");
  return sum;
}

SuspensionData suspension_step(const SuspensionData& susp) {
  const Iem& t = susp.iem;
  const int a0 = t.combo().last(0), a1 = t.combo().last(1);
  if (t.length(a0) == t.length(a1))
    throw ConnexionHalt(Connexion{a0, a1, 1}, 0);
  const int eps = t.length(a0) > t.length(a1) ? 0 : 1;
  const int winner = eps == 0 ? a0 : a1;
  const int loser = eps == 0 ? a1 : a0;
  std::vector<Rational> lengths = t.lengths();
  std::vector<Rational> tau = susp.tau;
  lengths[winner] -= lengths[loser];
  tau[winner] -= tau[loser];
  CombinatorialData target = rauzy_move(t.combo(), eps);
  return validate_suspension(Iem(target, std::move(lengths)), std::move(tau));
}

SuspensionData suspension_step_inverse(const SuspensionData& susp) {
  const Iem& t = susp.iem;
  const int d = static_cast<int>(t.dim());
  const Rational& common = susp.common_im();
  if (common == 0)
    throw InvalidSuspension("inverse step undefined at zero common part");
  const int eps = common < 0 ? 0 : 1;
  // undo R_eps: the forward loser sits right after the winner in the other
  // row; move it back to the end.
  const int other = 1 - eps;
  const int winner = t.combo().last(eps);
  const int pw = t.combo().pos(other, winner);
  if (pw + 1 >= d) throw std::logic_error("no displaced symbol to restore");
  const int loser = t.combo().at(other, pw + 1);
  std::vector<int> pos_keep(d), pos_move(d);
  for (int id = 0; id < d; ++id) {
    pos_keep[id] = t.combo().pos(eps, id);
    int p = t.combo().pos(other, id);
    if (p <= pw)
      pos_move[id] = p;
    else if (id == loser)
      pos_move[id] = d - 1;
    else
      pos_move[id] = p - 1;
  }
  CombinatorialData source =
      eps == 0 ? CombinatorialData(t.combo().alphabet(), pos_keep, pos_move)
               : CombinatorialData(t.combo().alphabet(), pos_move, pos_keep);
  std::vector<Rational> lengths = t.lengths();
  std::vector<Rational> tau = susp.tau;
  lengths[winner] += lengths[loser];
  tau[winner] += tau[loser];
  return validate_suspension(Iem(source, std::move(lengths)), std::move(tau));
}

int zorich_cell(const SuspensionData& susp) {
  const Iem& t = susp.iem;
  const int a0 = t.combo().last(0), a1 = t.combo().last(1);
  const Rational& common = susp.common_im();
  if (t.length(a0) > t.length(a1) && common > 0) return 0;
  if (t.length(a1) > t.length(a0) && common < 0) return 1;
  return -1;
}

SuspensionData teichmuller_flow(const SuspensionData& susp,
                                const Rational& c) {
  if (!(c > 0)) throw std::invalid_argument("scale must be positive");
  std::vector<Rational> lengths = susp.iem.lengths();
  std::vector<Rational> tau = susp.tau;
  for (auto& l : lengths) l *= c;
  for (auto& v : tau) v /= c;
  return validate_suspension(Iem(susp.iem.combo(), std::move(lengths)),
                             std::move(tau));
}

SuspensionData teichmuller_flow_time(const SuspensionData& susp, double t) {
  return teichmuller_flow(susp, Rational(std::exp(t / 2)));
}

namespace {
Rational hat_total(const Iem& t) {
  // total length after one basic step: lambda^* minus the loser's length
  const int a0 = t.combo().last(0), a1 = t.combo().last(1);
  if (t.length(a0) == t.length(a1))
    throw ConnexionHalt(Connexion{a0, a1, 1}, 0);
  const int loser = t.length(a0) > t.length(a1) ? a1 : a0;
  return t.total() - t.length(loser);
}
}  // namespace

std::pair<SuspensionData, std::size_t> normalized_step(
    const SuspensionData& susp) {
  const Iem& t = susp.iem;
  const int a0 = t.combo().last(0), a1 = t.combo().last(1);
  if (t.length(a0) == t.length(a1))
    throw ConnexionHalt(Connexion{a0, a1, 1}, 0);
  const Rational before = hat_total(t);
  const int type = t.length(a0) > t.length(a1) ? 0 : 1;
  SuspensionData cur = susp;
  std::size_t steps = 0;
  while (true) {
    const int b0 = cur.iem.combo().last(0), b1 = cur.iem.combo().last(1);
    if (cur.iem.length(b0) == cur.iem.length(b1))
      throw ConnexionHalt(Connexion{b0, b1, 1}, steps);
    int ty = cur.iem.length(b0) > cur.iem.length(b1) ? 0 : 1;
    if (steps > 0 && ty != type) break;
    cur = suspension_step(cur);
    ++steps;
  }
  const Rational after = hat_total(cur.iem);
  return {teichmuller_flow(cur, before / after), steps};
}

SuspensionData suspension_involution(const SuspensionData& susp) {
  std::vector<Rational> tau = susp.tau;
  for (auto& v : tau) v = -v;
  return validate_suspension(susp.iem.inverse(), std::move(tau));
}

}  // namespace iet
