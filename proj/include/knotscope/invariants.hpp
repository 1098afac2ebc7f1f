#pragma once

#include <vector>

#include "knotscope/bigint.hpp"
#include "knotscope/diagram.hpp"
#include "knotscope/laurent.hpp"
#include "knotscope/matrix.hpp"

namespace knotscope {

// Normalized Alexander polynomial: coeffs lists a_{-g} .. a_g.
struct AlexanderPolynomial {
  int g = 0;
  std::vector<BigInt> coeffs{1};

  BigInt a(int i) const { return coeffs.at(static_cast<std::size_t>(i + g)); }
  const BigInt& top() const { return coeffs.back(); }
  LaurentPoly to_laurent() const;
  BigInt determinant() const;  // |Delta(-1)|

  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

// Rows are crossings, columns are over-arcs (Wirtinger generators).
Matrix<LaurentPoly> alexander_matrix(const Diagram& d);

// Determinant of the matrix above with its last row and column removed.
// Zero for split links; throws ZeroDeterminantUnexpected for knots.
LaurentPoly alexander_raw(const Diagram& d);

// Throws NotSymmetrizable.
AlexanderPolynomial normalize(const LaurentPoly& p);
AlexanderPolynomial alexander_polynomial(const Diagram& d);

int genus_alternating(const AlexanderPolynomial& a);
bool is_fibered_alternating(const AlexanderPolynomial& a);

// Signature of a symmetric rational matrix via congruence diagonalization.
int matrix_signature(const Matrix<BigInt>& m);

// Goeritz matrix on the white faces (one row deleted) of the checkerboard
// coloring in which face 0 is white, or black when `face0_white` is false.
Matrix<BigInt> goeritz_matrix(const Diagram& d, bool face0_white = true);

// Gordon-Litherland correction term of the same coloring.
int gordon_litherland_mu(const Diagram& d, bool face0_white = true);

// Knot signature; the positive trefoil has signature -2.
int signature(const Diagram& d, bool face0_white = true);

int tau_alternating(const Diagram& d);
bool is_sqp_fibered(const Diagram& d);

struct InvariantReport {
  AlexanderPolynomial alexander;
  int genus = 0;
  bool fibered = false;
  int signature = 0;
  int tau_alternating = 0;
  bool sqp_fibered = false;
  BigInt determinant = 1;
};

// Throws NotKnot or NotAlternating.
InvariantReport invariant_report(const Diagram& d);

}  // namespace knotscope
