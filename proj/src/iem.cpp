#include "iet/iem.hpp"

namespace iet {

Iem::Iem(CombinatorialData combo, std::vector<Rational> lengths,
         bool assume_rationally_independent)
    : combo_(std::move(combo)),
      lengths_(std::move(lengths)),
      rat_indep_(assume_rationally_independent) {
  const std::size_t d = combo_.dim();
  if (lengths_.size() != d)
    throw std::invalid_argument("length vector size mismatch");
  for (const auto& l : lengths_)
    if (!(l > 0)) throw std::invalid_argument("lengths must be positive");
  total_ = 0;
  for (const auto& l : lengths_) total_ += l;
  omega_ = combo_.omega();
  delta_.assign(d, Rational(0));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      if (omega_(a, b) == 1)
        delta_[a] += lengths_[b];
      else if (omega_(a, b) == -1)
        delta_[a] -= lengths_[b];
    }
  left0_.assign(d, Rational(0));
  left1_.assign(d, Rational(0));
  Rational acc0(0), acc1(0);
  for (std::size_t p = 0; p < d; ++p) {
    int a0 = combo_.at(0, static_cast<int>(p));
    int a1 = combo_.at(1, static_cast<int>(p));
    left0_[a0] = acc0;
    left1_[a1] = acc1;
    acc0 += lengths_[a0];
    acc1 += lengths_[a1];
  }
}

int Iem::locate(int eps, const Rational& x) const {
  if (x < 0 || x >= total_)
    throw std::domain_error("point outside the interval");
  const int d = static_cast<int>(dim());
  Rational acc(0);
  for (int p = 0; p < d; ++p) {
    int id = combo_.at(eps, p);
    acc += lengths_[id];
    if (x < acc) return id;
  }
  return combo_.at(eps, d - 1);  // unreachable for x < total
}

Rational Iem::evaluate(const Rational& x) const {
  int id = locate(0, x);
  return x + delta_[id];
}

Rational Iem::evaluate_inverse(const Rational& x) const {
  int id = locate(1, x);
  return x - delta_[id];
}

Iem Iem::inverse() const {
  return Iem(combo_.involution(), lengths_, rat_indep_);
}

Iem::ConnexionSearch Iem::find_connexion(long max_steps) const {
  ConnexionSearch res;
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (rat_indep_) {
    res.certified_by_independence = true;
    return res;
  }
  const int d = static_cast<int>(dim());
  // Orbit starting points: all top left endpoints; targets: top left
  // endpoints with positive top position.
  std::vector<Rational> pts(d);
  for (int id = 0; id < d; ++id) pts[id] = left0_[id];
  for (long m = 1; m <= max_steps; ++m) {
    for (int alpha = 0; alpha < d; ++alpha) pts[alpha] = evaluate(pts[alpha]);
    for (int alpha = 0; alpha < d; ++alpha)
      for (int beta = 0; beta < d; ++beta) {
        if (combo_.pos(0, beta) == 0) continue;
        if (pts[alpha] == left0_[beta]) {
          res.found = Connexion{alpha, beta, m};
          res.horizon = m;
          return res;
        }
      }
  }
  res.horizon = max_steps;
  return res;
}

}  // namespace iet
