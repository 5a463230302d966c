#include "iet/birkhoff.hpp"

#include <algorithm>

namespace iet {

ReturnTiles return_tiles(const AccelOrbit& accel, std::size_t k) {
  if (k + 1 > accel.block_count()) throw std::out_of_range("tile level");
  const std::size_t d = accel.dim();
  Iem tk = accel.level_iem(k);
  Iem tnext = accel.level_iem(k + 1);
  const IMat& z = accel.z_block(k + 1);
  ReturnTiles tiles;
  tiles.offsets.resize(d);
  for (std::size_t beta = 0; beta < d; ++beta) {
    BigInt q = z.col_sum(beta);
    if (!q.fits_ulong_p() || q > 50000000)
      throw std::runtime_error("return word too long to materialize");
    unsigned long count = q.get_ui();
    Rational y = tnext.left(0, static_cast<int>(beta));
    tiles.offsets[beta].reserve(count);
    for (unsigned long i = 0; i < count; ++i) {
      tiles.offsets[beta].push_back(y);
      y = tk.evaluate(y);
    }
    // first return lands back in the level-(k+1) domain
    if (!(y < tnext.total()))
      throw std::logic_error("return word did not close up");
  }
  return tiles;
}

PiecewiseFunc special_sum_step(const AccelOrbit& accel, std::size_t k,
                               const PiecewiseFunc& phi) {
  const std::size_t d = accel.dim();
  Iem tnext = accel.level_iem(k + 1);
  Layout dst = Layout::of(tnext);
  ReturnTiles tiles = return_tiles(accel, k);
  PiecewiseFunc out(dst);
  for (std::size_t beta = 0; beta < d; ++beta) {
    const Rational width = dst.len[beta];
    const Rational left = dst.left[beta];
    // collect window-relative breakpoints from every tile
    std::vector<Rational> cuts{Rational(0), width};
    for (const Rational& t : tiles.offsets[beta]) {
      int sym = phi.layout().locate(t);
      for (const auto& p : phi.pieces(sym)) {
        if (p.lo > t && p.lo < t + width) cuts.push_back(p.lo - t);
        if (p.hi > t && p.hi < t + width) cuts.push_back(p.hi - t);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      const Rational& a = cuts[s];
      const Rational& b = cuts[s + 1];
      Poly sum;
      for (const Rational& t : tiles.offsets[beta]) {
        const Piece& src = phi.piece_at(t + a);
        // source coordinate = destination coordinate + (t - left)
        sum = sum + src.poly.shifted(t - left);
      }
      out.append(static_cast<int>(beta), Piece{left + a, left + b, sum});
    }
  }
  out.check_tiling();
  return out;
}

PiecewiseFunc special_sum_function(const AccelOrbit& accel, std::size_t k,
                                   std::size_t l, const PiecewiseFunc& phi) {
  if (k > l || l > accel.block_count())
    throw std::out_of_range("special sum range");
  PiecewiseFunc cur = phi;
  for (std::size_t j = k; j < l; ++j) cur = special_sum_step(accel, j, cur);
  return cur;
}

Rational special_birkhoff_sum(const AccelOrbit& accel, std::size_t k,
                              std::size_t l, const PiecewiseFunc& phi,
                              const Rational& x) {
  if (k > l || l > accel.block_count())
    throw std::out_of_range("special sum range");
  Iem tk = accel.level_iem(k);
  Iem tl = accel.level_iem(l);
  if (!(x >= 0 && x < tl.total()))
    throw std::domain_error("point outside the level-l domain");
  int beta = tl.locate(0, x);
  BigInt q = accel.q_product(k, l).col_sum(beta);
  if (!q.fits_ulong_p())
    throw std::runtime_error("return time too large for pointwise evaluation");
  unsigned long count = q.get_ui();
  Rational acc(0), y = x;
  for (unsigned long i = 0; i < count; ++i) {
    acc += phi.eval(y);
    y = tk.evaluate(y);
  }
  return acc;
}

Rational birkhoff_sum_direct(const Iem& iem, const PiecewiseFunc& phi,
                             const Rational& x, long n) {
  Rational acc(0), y = x;
  for (long i = 0; i < n; ++i) {
    acc += phi.eval(y);
    y = iem.evaluate(y);
  }
  return acc;
}

BirkhoffDecomposition decompose_birkhoff(const AccelOrbit& accel,
                                         const Rational& x, long n) {
  if (n < 1) throw std::invalid_argument("need at least one summand");
  if (!accel.length_driven())
    throw std::logic_error("decomposition needs a length-driven orbit");
  const std::size_t K = accel.block_count();
  // deepest level whose domain still contains x
  std::size_t top = 0;
  for (std::size_t k = 1; k <= K; ++k) {
    Rational tot(0);
    for (const auto& v : accel.lambda_level(k)) tot += v;
    if (x < tot)
      top = k;
    else
      break;
  }
  if (top == K)
    throw InsufficientOrbit(
        "orbit not deep enough to certify the decomposition bounds");
  BirkhoffDecomposition dec;
  dec.top_level = top;
  Rational y = x;
  long remaining = n;
  for (std::size_t lvl = top + 1; lvl-- > 0;) {
    Iem tl = accel.level_iem(lvl);
    BirkhoffTerm term;
    term.level = lvl;
    term.base_point = y;
    term.count = 0;
    if (lvl + 1 <= K) term.count_bound = accel.z_block(lvl + 1).max_col_sum();
    // one application of T^(lvl) costs the return time of the current
    // interval, which is the column sum of Q(0,lvl)
    const IMat& q0l = accel.q_prefix(lvl);
    while (remaining > 0) {
      int beta = tl.locate(0, y);
      BigInt cost = lvl == 0 ? BigInt(1) : q0l.col_sum(beta);
      if (cost > remaining) break;
      remaining -= cost.get_si();
      y = tl.evaluate(y);
      ++term.count;
    }
    if (term.count > 0) dec.terms.push_back(term);
    if (remaining == 0) break;
  }
  if (remaining != 0)
    throw std::logic_error("decomposition failed to exhaust the sum");
  return dec;
}

Rational evaluate_decomposition(const AccelOrbit& accel,
                                const BirkhoffDecomposition& dec,
                                const PiecewiseFunc& phi) {
  Rational acc(0);
  // interval-wise constants act through the transposed Q matrices
  bool constant = phi.max_degree() <= 0;
  for (std::size_t id = 0; constant && id < accel.dim(); ++id)
    if (phi.pieces(static_cast<int>(id)).size() != 1) constant = false;
  std::vector<std::vector<Rational>> tq_phi;  // per level when constant
  if (constant) {
    tq_phi.resize(dec.top_level + 1);
    std::vector<Rational> v(accel.dim());
    for (std::size_t id = 0; id < accel.dim(); ++id)
      v[id] = phi.pieces(static_cast<int>(id)).front().poly.eval(Rational(0));
    for (std::size_t lvl = 0; lvl <= dec.top_level; ++lvl) {
      const IMat& q = accel.q_prefix(lvl);
      std::vector<Rational> w(accel.dim(), Rational(0));
      for (std::size_t b = 0; b < accel.dim(); ++b)
        for (std::size_t a = 0; a < accel.dim(); ++a)
          w[b] += Rational(q(a, b)) * v[a];
      tq_phi[lvl] = std::move(w);
    }
  }
  for (const auto& term : dec.terms) {
    Iem tl = accel.level_iem(term.level);
    Rational y = term.base_point;
    for (long i = 0; i < term.count; ++i) {
      if (constant) {
        acc += tq_phi[term.level][tl.locate(0, y)];
      } else {
        acc += special_birkhoff_sum(accel, 0, term.level, phi, y);
      }
      y = tl.evaluate(y);
    }
  }
  return acc;
}

PiecewiseFunc recut_to_layout(const Layout& lay, const PiecewiseFunc& f) {
  if (!(lay.total == f.layout().total))
    throw std::invalid_argument("layouts cover different domains");
  PiecewiseFunc out(lay);
  for (std::size_t id = 0; id < lay.dim(); ++id) {
    Rational lo = lay.left[id];
    const Rational end = lo + lay.len[id];
    while (lo < end) {
      const Piece& src = f.piece_at(lo);
      Rational hi = src.hi < end ? src.hi : end;
      out.append(static_cast<int>(id), Piece{lo, hi, src.poly});
      lo = hi;
    }
  }
  out.check_tiling();
  return out;
}

TwoSidedBirkhoff decompose_birkhoff_two_sided(const AccelOrbit& fwd,
                                              const AccelOrbit& bwd,
                                              const Rational& x, long n) {
  if (n < 1) throw std::invalid_argument("need at least one summand");
  Iem t0 = fwd.level_iem(0);
  TwoSidedBirkhoff dec;
  // locate the minimal point of the segment
  Rational y = x, best = x;
  long best_i = 0;
  for (long i = 1; i < n; ++i) {
    y = t0.evaluate(y);
    if (y < best) {
      best = y;
      best_i = i;
    }
  }
  dec.pivot_index = best_i;
  dec.pivot = best;
  dec.forward = decompose_birkhoff(fwd, best, n - best_i);
  dec.backward = decompose_birkhoff(bwd, best, best_i + 1);
  return dec;
}

Rational evaluate_two_sided(const AccelOrbit& fwd, const AccelOrbit& bwd,
                            const TwoSidedBirkhoff& dec,
                            const PiecewiseFunc& phi) {
  Rational total = evaluate_decomposition(fwd, dec.forward, phi);
  PiecewiseFunc phi_b = recut_to_layout(Layout::of(bwd.level_iem(0)), phi);
  total += evaluate_decomposition(bwd, dec.backward, phi_b);
  total -= phi.eval(dec.pivot);
  return total;
}

MeanZeroSplit project_mean_zero(const AccelOrbit& accel, std::size_t k,
                                const PiecewiseFunc& phi) {
  PiecewiseFunc pushed = special_sum_step(accel, k, phi);
  MeanZeroSplit split{PiecewiseFunc(pushed.layout()), pushed.means()};
  std::vector<Rational> neg = split.gamma;
  for (auto& v : neg) v = -v;
  pushed.add_constants(neg);
  split.remainder = std::move(pushed);
  return split;
}

}  // namespace iet
