#include "knotscope/floer.hpp"

#include <cstdlib>
#include <string>

#include "knotscope/error.hpp"

namespace knotscope {

namespace {

BigInt magnitude(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

void require_positive_genus(const AlexanderPolynomial& a) {
  if (a.g < 1) throw Error(ErrorCode::PreconditionFailed, "genus must be at least 1");
}

}  // namespace

BigInt torsion_t(const AlexanderPolynomial& a, int s) {
  BigInt t = 0;
  for (int j = 1; s + j <= a.g; ++j)
    if (s + j >= -a.g) t += j * a.a(s + j);
  return t;
}

int delta_exp(int tau, int s) {
  const int x = std::abs(tau) - std::abs(s);
  return x <= 0 ? 0 : (x + 1) / 2;
}

BigInt rank_b(const AlexanderPolynomial& a, int tau, int s) {
  if (s <= 0) throw Error(ErrorCode::PreconditionFailed, "s must be positive");
  BigInt b = delta_exp(tau, s) - torsion_t(a, s);
  if ((s - tau) % 2 != 0) b = -b;
  if (b < 0)
    throw Error(ErrorCode::NegativeRank,
                "b_" + std::to_string(s) + " = " + b.str() + " for tau = " + std::to_string(tau));
  return b;
}

HFPlusDescriptor hf_plus_descriptor(const AlexanderPolynomial& a, int tau, int s) {
  return HFPlusDescriptor{s, rank_b(a, tau, s), delta_exp(tau, s)};
}

std::string_view to_string(AgCase c) noexcept {
  switch (c) {
    case AgCase::TauIsG:
      return "tau=g";
    case AgCase::TauIsGMinusOne:
      return "tau=g-1";
    case AgCase::Otherwise:
      return "otherwise";
  }
  return "otherwise";
}

AgBoundResult check_ag_bound(const AlexanderPolynomial& a, int tau) {
  require_positive_genus(a);
  AgBoundResult r;
  const int t = std::abs(tau);
  int offset = 0;
  if (t == a.g) {
    r.which = AgCase::TauIsG;
    offset = -1;
  } else if (t == a.g - 1) {
    r.which = AgCase::TauIsGMinusOne;
    offset = 1;
  }
  r.lhs = magnitude(a.a(a.g - 1));
  r.rhs = 2 * magnitude(a.top()) + offset;
  r.pass = r.lhs >= r.rhs;
  r.equality = r.lhs == r.rhs;
  return r;
}

TrapezoidReport check_trapezoidal(const AlexanderPolynomial& a) {
  TrapezoidReport r;
  for (int i = 1; i <= a.g; ++i) {
    const BigInt ai = magnitude(a.a(i));
    const BigInt prev = magnitude(a.a(i - 1));
    if (ai > prev) {
      r.monotone_ok = false;
      if (!r.first_violation) r.first_violation = i;
    }
    if (ai == prev)
      for (int j = 0; j < i; ++j)
        if (magnitude(a.a(j)) != ai) r.plateau_ok = false;
  }
  r.top_equality = a.g >= 1 && magnitude(a.a(a.g)) == magnitude(a.a(a.g - 1));
  return r;
}

std::string_view to_string(Prop22Verdict v) noexcept {
  return v == Prop22Verdict::SqpFiberedAfterMirror ? "sqp-fibered-after-mirror" : "hypothesis-not-satisfied";
}

Prop22Verdict prop22_implication(const AlexanderPolynomial& a, int tau) {
  require_positive_genus(a);
  if (magnitude(a.top()) != magnitude(a.a(a.g - 1))) return Prop22Verdict::HypothesisNotSatisfied;
  if (magnitude(a.top()) != 1 || std::abs(tau) != a.g)
    throw Error(ErrorCode::ImplicationViolated, "|a_g| = |a_{g-1}| = " + magnitude(a.top()).str() +
                                                    " with tau = " + std::to_string(tau) + ", g = " +
                                                    std::to_string(a.g));
  return Prop22Verdict::SqpFiberedAfterMirror;
}

}  // namespace knotscope
