#include "cospec/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace cospec {

CharPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquare("char_poly needs a square matrix");
  const int n = m.rows();

  // Berkowitz: growing from the trailing principal submatrix, the
  // coefficient vector of det(xI - A) (leading term first) is obtained by
  // multiplying with a lower-triangular Toeplitz matrix whose first column
  // is (1, -a_kk, -R*C, -R*M*C, -R*M^2*C, ...).
  std::vector<BigInt> poly{1};
  for (int k = n - 1; k >= 0; --k) {
    const int msize = n - 1 - k;
    std::vector<BigInt> t(static_cast<std::size_t>(n - k) + 1);
    t[0] = 1;
    t[1] = -BigInt(m(k, k));
    if (msize > 0) {
      std::vector<BigInt> w(msize);
      for (int i = 0; i < msize; ++i) w[i] = m(k + 1 + i, k);
      for (int j = 2; j <= n - k; ++j) {
        BigInt dot = 0;
        for (int i = 0; i < msize; ++i) dot += BigInt(m(k, k + 1 + i)) * w[i];
        t[j] = -dot;
        if (j == n - k) break;
        std::vector<BigInt> next(msize);
        for (int r = 0; r < msize; ++r) {
          BigInt s = 0;
          for (int c = 0; c < msize; ++c) s += BigInt(m(k + 1 + r, k + 1 + c)) * w[c];
          next[r] = std::move(s);
        }
        w = std::move(next);
      }
    }
    std::vector<BigInt> out(static_cast<std::size_t>(n - k) + 1);
    for (int i = 0; i <= n - k; ++i) {
      BigInt s = 0;
      for (int j = 0; j < static_cast<int>(poly.size()); ++j) {
        const int d = i - j;
        if (d >= 0 && d < static_cast<int>(t.size())) s += t[d] * poly[j];
      }
      out[i] = std::move(s);
    }
    poly = std::move(out);
  }

  std::reverse(poly.begin(), poly.end());
  return CharPoly{std::move(poly)};
}

CharPoly char_poly(const SignedGraph& g) { return char_poly(adjacency_matrix(g)); }

CharPoly char_poly_oracle(const IntMatrix& m) {
  if (!m.is_square()) throw NonSquare("char_poly_oracle needs a square matrix");
  const int n = m.rows();
  if (n > 9) throw TooLarge("char_poly_oracle is capped at n <= 9");

  std::vector<BigInt> acc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    BigInt constant = 1;
    std::vector<int> fixed;
    bool zero_term = false;
    for (int i = 0; i < n && !zero_term; ++i) {
      if (sigma[i] == i) {
        fixed.push_back(i);
      } else if (m(i, sigma[i]) == 0) {
        zero_term = true;
      } else {
        constant *= -BigInt(m(i, sigma[i]));
      }
    }
    if (zero_term) continue;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    if (inversions % 2 == 1) constant = -constant;

    // term = constant * prod over fixed points of (x - m(i,i))
    std::vector<BigInt> term{constant};
    for (int i : fixed) {
      const BigInt a = m(i, i);
      term.push_back(0);
      for (int k = static_cast<int>(term.size()) - 1; k >= 1; --k)
        term[k] = term[k - 1] - a * term[k];
      term[0] = -a * term[0];
    }
    for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  return CharPoly{std::move(acc)};
}

bool cospectral(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order()) return false;
  return char_poly(a) == char_poly(b);
}

std::vector<double> eigenvalues_approx(const IntMatrix& m) {
  if (!m.is_square() || !m.is_symmetric())
    throw NonSymmetric("eigenvalues_approx needs a symmetric matrix");
  const int n = m.rows();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::string to_string(const CharPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) out << mag.str();
    if (k > 0) out << "x";
    if (k > 1) out << "^" << k;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace cospec
