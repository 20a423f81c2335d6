#include "saddlecert/sturm.hpp"

#include <stdexcept>

namespace saddlecert {

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  seq_.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return;  // constant p: chain is just {p}
  seq_.push_back(std::move(d));
  while (true) {
    const UniPoly& a = seq_[seq_.size() - 2];
    const UniPoly& b = seq_.back();
    UniPoly r = UniPoly::divmod(a, b).second;
    if (r.is_zero()) break;
    seq_.push_back(-r);
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int count = 0;
  int prev = 0;
  for (const UniPoly& q : seq_) {
    int s = q.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: requires lo < hi");
  if (p.degree() == 0) return 0;
  SturmChain chain(p.square_free_part());
  return chain.variations_at(lo) - chain.variations_at(hi);
}

int sturm_root_count_open(const UniPoly& p, const Rational& lo, const Rational& hi) {
  int n = sturm_root_count(p, lo, hi);
  if (p.eval(hi).is_zero()) --n;
  return n;
}

bool descartes_all_roots_nonneg(const std::vector<int>& signs) {
  size_t m = 0;
  while (m < signs.size() && signs[m] == 0) ++m;
  if (m == signs.size())
    throw std::invalid_argument("descartes_all_roots_nonneg: all-zero sequence");
  int prev = 0;
  for (size_t k = m; k < signs.size(); ++k) {
    if (signs[k] == 0)
      throw std::domain_error(
          "descartes_all_roots_nonneg: zero among high-order coefficients; "
          "sufficient condition does not apply");
    if (prev != 0 && signs[k] == prev) return false;
    prev = signs[k];
  }
  return true;
}

}  // namespace saddlecert
