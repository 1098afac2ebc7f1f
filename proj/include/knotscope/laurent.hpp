#pragma once

#include <map>
#include <string>

#include "knotscope/bigint.hpp"

namespace knotscope {

// Integer Laurent polynomial in one variable t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);                   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& c, int degree);
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return terms_.empty(); }
  // Undefined on the zero polynomial.
  int min_degree() const { return terms_.begin()->first; }
  int max_degree() const { return terms_.rbegin()->first; }
  BigInt coeff(int degree) const;
  const std::map<int, BigInt>& terms() const noexcept { return terms_; }

  LaurentPoly shifted(int k) const;
  BigInt evaluate_at_unit(int t) const;  // t = 1 or -1

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Quotient of an exact division; throws InvalidArgument if a remainder is left.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

 private:
  void add_term(int degree, const BigInt& c);
  std::map<int, BigInt> terms_;
};

std::string to_string(const LaurentPoly& p);

// Equal up to multiplication by a unit +-t^k.
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace knotscope
