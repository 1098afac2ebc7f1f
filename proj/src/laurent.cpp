#include "knotscope/laurent.hpp"

#include "knotscope/error.hpp"

namespace knotscope {

LaurentPoly::LaurentPoly(const BigInt& c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, int degree) {
  LaurentPoly p;
  p.add_term(degree, c);
  return p;
}

void LaurentPoly::add_term(int degree, const BigInt& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(degree, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt LaurentPoly::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d + k, c);
  return out;
}

BigInt LaurentPoly::evaluate_at_unit(int t) const {
  if (t != 1 && t != -1) throw Error(ErrorCode::InvalidArgument, "evaluation point must be 1 or -1");
  BigInt sum = 0;
  for (const auto& [d, c] : terms_) sum += (t == -1 && d % 2 != 0) ? BigInt(-c) : c;
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [d1, c1] : terms_)
    for (const auto& [d2, c2] : o.terms_) out.add_term(d1 + d2, c1 * c2);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  LaurentPoly rem = *this;
  LaurentPoly quot;
  const int lead_deg = divisor.max_degree();
  const BigInt& lead = divisor.terms_.rbegin()->second;
  const int span = lead_deg - divisor.min_degree();
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < span) break;
    const BigInt& top = rem.terms_.rbegin()->second;
    if (top % lead != 0) break;
    auto step = monomial(top / lead, rem.max_degree() - lead_deg);
    quot += step;
    rem -= step * divisor;
  }
  if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division is not exact");
  return quot;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [d, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1 || d == 0) out += mag.str();
    if (d != 0) {
      if (mag != 1) out += "*";
      out += "t";
      if (d != 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const auto shifted = b.shifted(a.min_degree() - b.min_degree());
  return shifted == a || -shifted == a;
}

}  // namespace knotscope
