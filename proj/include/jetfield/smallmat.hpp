#pragma once

#include <cmath>
#include <cstring>
#include <vector>

#include "jetfield/core.hpp"

namespace jetfield::smallmat {

// Dense row-major n x n helpers for the small matrices used throughout
// (algebra metrics, base metrics, adjoint matrices). n is tiny (<= 6 or so),
// so plain LU with partial pivoting is plenty.

inline double det(int n, const double* a) {
  std::vector<double> lu(a, a + n * n);
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(lu[r * n + k]) > std::abs(lu[piv * n + k])) piv = r;
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(lu[k * n + c], lu[piv * n + c]);
      d = -d;
    }
    const double p = lu[k * n + k];
    if (p == 0.0) return 0.0;
    d *= p;
    for (int r = k + 1; r < n; ++r) {
      const double f = lu[r * n + k] / p;
      for (int c = k; c < n; ++c) lu[r * n + c] -= f * lu[k * n + c];
    }
  }
  return d;
}

/// Gauss-Jordan inverse; returns false if the pivot drops below eps.
inline bool invert(int n, const double* a, double* out, double eps = 0.0) {
  std::vector<double> w(a, a + n * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r * n + c] = (r == c) ? 1.0 : 0.0;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int r = k + 1; r < n; ++r)
      if (std::abs(w[r * n + k]) > std::abs(w[piv * n + k])) piv = r;
    if (std::abs(w[piv * n + k]) <= eps) return false;
    if (piv != k)
      for (int c = 0; c < n; ++c) {
        std::swap(w[k * n + c], w[piv * n + c]);
        std::swap(out[k * n + c], out[piv * n + c]);
      }
    const double p = w[k * n + k];
    for (int c = 0; c < n; ++c) {
      w[k * n + c] /= p;
      out[k * n + c] /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == k) continue;
      const double f = w[r * n + k];
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        w[r * n + c] -= f * w[k * n + c];
        out[r * n + c] -= f * out[k * n + c];
      }
    }
  }
  return true;
}

inline void matmul(int n, const double* a, const double* b, double* out) {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a[r * n + k] * b[k * n + c];
      out[r * n + c] = s;
    }
}

inline double max_abs(int n, const double* a) {
  double m = 0.0;
  for (int i = 0; i < n * n; ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

/// Matrix exponential by scaling-and-squaring with a Taylor core.
/// Accurate to ~1e-15 relative for the operator norms admitted here.
inline void expm(int n, const double* a, double* out) {
  const int nn = n * n;
  double norm = 0.0;
  for (int r = 0; r < n; ++r) {
    double row = 0.0;
    for (int c = 0; c < n; ++c) row += std::abs(a[r * n + c]);
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  std::vector<double> b(nn), term(nn), acc(nn, 0.0), tmp(nn);
  for (int i = 0; i < nn; ++i) b[i] = a[i] * scale;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      acc[r * n + c] = (r == c) ? 1.0 : 0.0;
      term[r * n + c] = acc[r * n + c];
    }
  for (int k = 1; k <= 40; ++k) {
    matmul(n, term.data(), b.data(), tmp.data());
    for (int i = 0; i < nn; ++i) term[i] = tmp[i] / static_cast<double>(k);
    double tnorm = 0.0;
    for (int i = 0; i < nn; ++i) {
      acc[i] += term[i];
      tnorm = std::max(tnorm, std::abs(term[i]));
    }
    if (tnorm < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) {
    matmul(n, acc.data(), acc.data(), tmp.data());
    acc.swap(tmp);
  }
  std::memcpy(out, acc.data(), sizeof(double) * nn);
}

}  // namespace jetfield::smallmat
