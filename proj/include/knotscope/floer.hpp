#pragma once

#include <optional>
#include <string_view>

#include "knotscope/bigint.hpp"
#include "knotscope/invariants.hpp"

namespace knotscope {

// t_s = sum_{j >= 1} j * a_{s+j}
BigInt torsion_t(const AlexanderPolynomial& a, int s);

// max(0, ceil((|tau| - |s|) / 2))
int delta_exp(int tau, int s);

// b_s from (-1)^(s - tau) b_s = delta - t_s. Throws PreconditionFailed for
// s <= 0 and NegativeRank when the data cannot come from a thin knot.
BigInt rank_b(const AlexanderPolynomial& a, int tau, int s);

struct HFPlusDescriptor {
  int s = 0;
  BigInt b = 0;
  int delta_exp = 0;
};

HFPlusDescriptor hf_plus_descriptor(const AlexanderPolynomial& a, int tau, int s);

enum class AgCase { TauIsG, TauIsGMinusOne, Otherwise };

std::string_view to_string(AgCase c) noexcept;

struct AgBoundResult {
  AgCase which = AgCase::Otherwise;
  BigInt lhs = 0;  // |a_{g-1}|
  BigInt rhs = 0;
  bool pass = false;
  bool equality = false;
};

// Throws PreconditionFailed when g = 0.
AgBoundResult check_ag_bound(const AlexanderPolynomial& a, int tau);

struct TrapezoidReport {
  bool monotone_ok = true;
  bool plateau_ok = true;
  std::optional<int> first_violation;  // first i with |a_i| > |a_{i-1}|
  bool top_equality = false;

  bool pass() const noexcept { return monotone_ok && plateau_ok; }
};

TrapezoidReport check_trapezoidal(const AlexanderPolynomial& a);

enum class Prop22Verdict { SqpFiberedAfterMirror, HypothesisNotSatisfied };

std::string_view to_string(Prop22Verdict v) noexcept;

// Throws PreconditionFailed when g = 0 and ImplicationViolated when
// |a_g| = |a_{g-1}| holds without |a_g| = 1 and |tau| = g.
Prop22Verdict prop22_implication(const AlexanderPolynomial& a, int tau);

}  // namespace knotscope
