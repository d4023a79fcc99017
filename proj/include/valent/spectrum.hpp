#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "valent/graph.hpp"

namespace valent {

inline constexpr int kMaxJacobiOrder = 256;

/// Dense real symmetric matrix, row-major.
class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(int n = 0)
      : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {}

  int order() const noexcept { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool is_symmetric(double tol = 1e-12) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
      }
    }
    return true;
  }

  double off_diagonal_norm() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j) s += (*this)(i, j) * (*this)(i, j);
      }
    }
    return std::sqrt(s);
  }

 private:
  int n_;
  std::vector<double> a_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  /// Column k of `eigenvectors` (stored as eigenvectors[k]) belongs to
  /// eigenvalues[k]; empty unless requested.
  std::vector<std::vector<double>> eigenvectors;
  int sweeps = 0;
};

inline DenseSymmetricMatrix laplacian_matrix(const Graph& g) {
  DenseSymmetricMatrix m(g.order());
  for (Vertex i = 0; i < g.order(); ++i) {
    m(i, i) = g.degree(i);
    for (Vertex j : g.neighbors(i)) m(i, j) = -1.0;
  }
  return m;
}

/// Cyclic-by-row Jacobi eigenvalue iteration. Sweeps until the off-diagonal
/// Frobenius norm drops below `tol`; NoConvergence after `max_sweeps`.
inline Spectrum jacobi_spectrum(DenseSymmetricMatrix a, double tol = 1e-12, int max_sweeps = 100,
                                bool want_vectors = false) {
  const int n = a.order();
  if (n > kMaxJacobiOrder) fail(ErrorCode::TooLarge, "Jacobi order " + std::to_string(n));
  if (!(tol > 0.0)) fail(ErrorCode::InvalidSize, "tolerance must be positive");
  if (!a.is_symmetric()) fail(ErrorCode::NotSymmetric, "input matrix is not symmetric");

  DenseSymmetricMatrix v(want_vectors ? n : 0);
  for (int i = 0; i < v.order(); ++i) v(i, i) = 1.0;

  Spectrum out;
  int sweep = 0;
  while (a.off_diagonal_norm() >= tol) {
    if (sweep == max_sweeps) fail(ErrorCode::NoConvergence, std::to_string(sweep) + " sweeps");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rutishauser's formulation: t = sgn(theta) / (|theta| + sqrt(theta^2 + 1)).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
          a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < v.order(); ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = vrp - s * (vrq + tau * vrp);
          v(r, q) = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return a(x, x) < a(y, y); });
  for (int k : idx) {
    out.eigenvalues.push_back(a(k, k));
    if (want_vectors) {
      std::vector<double> col(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) col[r] = v(r, k);
      out.eigenvectors.push_back(std::move(col));
    }
  }
  return out;
}

inline bool contains_eigenvalue(const Spectrum& spectrum, int lambda, double tol) {
  return std::any_of(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                     [&](double x) { return std::abs(x - lambda) <= tol; });
}

}  // namespace valent
