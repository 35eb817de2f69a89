#pragma once

#include <map>
#include <string>

namespace platcalc {

// Laurent polynomial in the single variable A with integer coefficients.
// The zero polynomial stores no terms; coefficients are never zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(long long constant);
  static LaurentPolynomial monomial(long long coeff, int exponent);

  bool zero() const { return terms_.empty(); }
  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPolynomial& o) const { return terms_ != o.terms_; }
  // Total order on term maps, used to keep multisets of polynomials canonical.
  bool operator<(const LaurentPolynomial& o) const { return terms_ < o.terms_; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator+(const LaurentPolynomial& o) const;

  void add_term(int exponent, long long coeff);
  // Multiply in place by coeff*A^exponent.
  void mul_monomial(long long coeff, int exponent);

  const std::map<int, long long>& terms() const { return terms_; }

  // Text form: "c*A^e" terms with exponents descending, joined by " + " or
  // " - ", unit coefficients and zero exponents elided: "-A^4 - A^-4", "1".
  std::string str() const;

 private:
  std::map<int, long long> terms_;
};

// Value of a closed loop in the bracket state sum: -A^2 - A^-2.
LaurentPolynomial loop_value();

}  // namespace platcalc
