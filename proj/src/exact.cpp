#include "iet/exact.hpp"

namespace iet {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

double log_big(const BigInt& z) {
  if (z <= 0) throw std::domain_error("log_big: nonpositive argument");
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_big(const Rational& r) {
  if (r <= 0) throw std::domain_error("log_big: nonpositive argument");
  return log_big(BigInt(r.get_num())) - log_big(BigInt(r.get_den()));
}

}  // namespace iet
