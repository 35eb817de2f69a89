#include "platcalc/laurent.hpp"

#include <cstdlib>

namespace platcalc {

LaurentPolynomial::LaurentPolynomial(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPolynomial LaurentPolynomial::monomial(long long coeff, int exponent) {
  LaurentPolynomial p;
  if (coeff != 0) p.terms_[exponent] = coeff;
  return p;
}

void LaurentPolynomial::add_term(int exponent, long long coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    terms_[exponent] = coeff;
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (&o == this) {
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  out += o;
  return out;
}

void LaurentPolynomial::mul_monomial(long long coeff, int exponent) {
  std::map<int, long long> out;
  if (coeff != 0)
    for (const auto& [e, c] : terms_) out[e + exponent] = c * coeff;
  terms_ = std::move(out);
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    int e = it->first;
    long long c = it->second;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    long long mag = std::llabs(c);
    if (mag != 1 || e == 0) {
      out += std::to_string(mag);
      if (e != 0) out += "*";
    }
    if (e != 0) {
      out += "A";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial loop_value() {
  LaurentPolynomial d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  return d;
}

}  // namespace platcalc
