#ifndef COSPEC_SPECTRUM_HPP
#define COSPEC_SPECTRUM_HPP

#include <string>
#include <vector>

#include "cospec/matrix.hpp"
#include "cospec/signed_graph.hpp"

namespace cospec {

/// Monic integer characteristic polynomial det(xI - A), stored constant
/// term first: p(x) = sum coeffs[k] * x^k.
struct CharPoly {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& operator[](int k) const { return coeffs[k]; }

  bool operator==(const CharPoly&) const = default;
};

/// Exact coefficients of det(xI - m) by the Berkowitz algorithm
/// (division-free, integer arithmetic throughout). Throws NonSquare.
CharPoly char_poly(const IntMatrix& m);
CharPoly char_poly(const SignedGraph& g);

/// Independent check path: Leibniz expansion of det(xI - m) over all
/// permutations. Limited to n <= 9 (TooLarge above).
CharPoly char_poly_oracle(const IntMatrix& m);

/// Exact coefficientwise equality of the two characteristic polynomials.
/// Graphs of different orders are never cospectral.
bool cospectral(const SignedGraph& a, const SignedGraph& b);

/// Floating-point eigenvalues in descending order, for display and
/// diagnostics only; cospectrality decisions never touch these.
/// Throws NonSymmetric.
std::vector<double> eigenvalues_approx(const IntMatrix& m);

/// Product of two coefficient vectors (constant term first).
std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b);

/// Renders e.g. "x^3 - 3x + 2".
std::string to_string(const CharPoly& p);

}  // namespace cospec

#endif
