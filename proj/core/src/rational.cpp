#include "tourney/rational.hpp"

#include <stdexcept>

namespace tourney {

std::string to_fraction_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [](const std::string& s) {
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    return z;
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Lottery::Lottery(std::vector<Rational> weights) : weights_(std::move(weights)) {
  Rational total = 0;
  for (const Rational& w : weights_) {
    if (sgn(w) < 0) throw std::invalid_argument("Lottery: negative weight");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("Lottery: weights sum to " + to_fraction_string(total));
}

ChoiceSet Lottery::support() const {
  Mask m = 0;
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (sgn(weights_[x]) > 0) m |= bit(x);
  }
  return ChoiceSet(weights_.size(), m);
}

}  // namespace tourney
