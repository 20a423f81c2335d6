#include "saddlecert/rational.hpp"

#include <cctype>
#include <ostream>

namespace saddlecert {

Rational Rational::from_string(std::string_view s) {
  std::string t(s);
  // strip whitespace
  t.erase(0, t.find_first_not_of(" \t"));
  if (!t.empty()) t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) throw std::invalid_argument("Rational: empty string");

  auto dot = t.find('.');
  if (dot != std::string::npos) {
    if (t.find('/') != std::string::npos)
      throw std::invalid_argument("Rational: mixed decimal and fraction: " + t);
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("Rational: bad decimal: " + t);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("Rational: bad decimal: " + t);
    mpz_class den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(mpq_class(num, den));
  }

  mpq_class q;
  if (q.set_str(t, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse: " + t);
  if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator: " + t);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace saddlecert
