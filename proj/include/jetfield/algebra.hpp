#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "jetfield/core.hpp"
#include "jetfield/smallmat.hpp"

namespace jetfield {

enum class AlgebraKind { so3, so21, custom };

/// Structure constants and an Ad-invariant metric for the gauge algebra.
///
/// C^mu_{rho nu} is antisymmetric in (rho, nu) and satisfies the Jacobi
/// identity; K is symmetric and nondegenerate with C^lam_{rho mu} K_{lam sig}
/// antisymmetric under mu <-> sig.  Immutable after construction.
struct LieAlgebraData {
  int r = 0;                // algebra dimension
  std::vector<double> c;    // C^mu_{rho nu}, index (mu*r + rho)*r + nu
  std::vector<double> k;    // K_{mu nu}, row-major
  std::vector<double> kinv; // K^{mu nu}
  double sqrt_k = 1.0;      // sqrt(|det K|)
  double sigma_k = 1.0;     // sign(det K)

  double C(int mu, int rho, int nu) const { return c[(mu * r + rho) * r + nu]; }
  double K(int mu, int nu) const { return k[mu * r + nu]; }
  double Kinv(int mu, int nu) const { return kinv[mu * r + nu]; }

  bool abelian() const {
    for (double x : c)
      if (x != 0.0) return false;
    return true;
  }
};

/// Max-abs of the Jacobi cyclic sum over all index combinations.
inline double jacobi_residual(const LieAlgebraData& s) {
  const int r = s.r;
  double worst = 0.0;
  for (int mu = 0; mu < r; ++mu)
    for (int lam = 0; lam < r; ++lam)
      for (int rho = 0; rho < r; ++rho)
        for (int nu = 0; nu < r; ++nu) {
          double sum = 0.0;
          for (int sig = 0; sig < r; ++sig)
            sum += s.C(mu, sig, lam) * s.C(sig, rho, nu) +
                   s.C(mu, sig, rho) * s.C(sig, nu, lam) +
                   s.C(mu, sig, nu) * s.C(sig, lam, rho);
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

/// Max-abs violation of antisymmetry of T_{rho mu sig} = C^lam_{rho mu} K_{lam sig}
/// under mu <-> sig.
inline double ad_invariance_residual(const LieAlgebraData& s) {
  const int r = s.r;
  double worst = 0.0;
  for (int rho = 0; rho < r; ++rho)
    for (int mu = 0; mu < r; ++mu)
      for (int sig = 0; sig < r; ++sig) {
        double t = 0.0, tswap = 0.0;
        for (int lam = 0; lam < r; ++lam) {
          t += s.C(lam, rho, mu) * s.K(lam, sig);
          tswap += s.C(lam, rho, sig) * s.K(lam, mu);
        }
        worst = std::max(worst, std::abs(t + tswap));
      }
  return worst;
}

namespace detail {

inline constexpr double kAlgebraTol = 1e-12;

inline void finish_metric(LieAlgebraData& s) {
  const int r = s.r;
  const double d = smallmat::det(r, s.k.data());
  require(std::abs(d) > 1e-14, "algebra metric K is degenerate (|det K| = " +
                                   std::to_string(std::abs(d)) + ")");
  s.kinv.assign(r * r, 0.0);
  smallmat::invert(r, s.k.data(), s.kinv.data());
  s.sqrt_k = std::sqrt(std::abs(d));
  s.sigma_k = d > 0 ? 1.0 : -1.0;
  // K * Kinv must reproduce the identity tightly.
  std::vector<double> id(r * r);
  smallmat::matmul(r, s.k.data(), s.kinv.data(), id.data());
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      require(std::abs(id[a * r + b] - (a == b ? 1.0 : 0.0)) < 1e-14,
              "algebra metric inversion failed accuracy check");
}

inline void validate_structure(const LieAlgebraData& s) {
  const int r = s.r;
  for (int mu = 0; mu < r; ++mu)
    for (int rho = 0; rho < r; ++rho)
      for (int nu = 0; nu < r; ++nu)
        require(std::abs(s.C(mu, rho, nu) + s.C(mu, nu, rho)) <= kAlgebraTol,
                "structure constants are not antisymmetric in the lower pair");
  const double jac = jacobi_residual(s);
  require(jac <= kAlgebraTol,
          "structure constants violate the Jacobi identity (residual " +
              std::to_string(jac) + ")");
  const double adi = ad_invariance_residual(s);
  require(adi <= kAlgebraTol,
          "metric is not Ad-invariant for the given structure constants (residual " +
              std::to_string(adi) + ")");
}

}  // namespace detail

/// Builds the algebra data.
///
/// For so3 / so21 the metric must be diagonal with signature (+,+,+) resp.
/// (+,+,-), and the constants are C^mu_{lam sig} = 1/2 sqrtK K^{mu nu}
/// eps_{nu lam sig}.  For custom algebras the caller supplies the full C
/// tensor (any r); it is validated against antisymmetry, Jacobi, and
/// Ad-invariance of K.
inline LieAlgebraData build_algebra(AlgebraKind kind,
                                    const std::vector<double>& k_matrix,
                                    const std::vector<double>& c_custom = {}) {
  LieAlgebraData s;
  if (kind == AlgebraKind::so3 || kind == AlgebraKind::so21) {
    s.r = 3;
    require(k_matrix.size() == 3 || k_matrix.size() == 9,
            "so3/so21 need a diagonal 3-metric (3 entries) or a 3x3 matrix");
    s.k.assign(9, 0.0);
    if (k_matrix.size() == 3) {
      for (int i = 0; i < 3; ++i) s.k[i * 3 + i] = k_matrix[i];
    } else {
      s.k = k_matrix;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          require(s.k[a * 3 + b] == (a == b ? s.k[a * 3 + a] : 0.0),
                  "so3/so21 metric must be diagonal");
        }
    }
    int negatives = 0;
    for (int i = 0; i < 3; ++i) {
      require(s.k[i * 3 + i] != 0.0, "so3/so21 metric entries must be nonzero");
      if (s.k[i * 3 + i] < 0.0) ++negatives;
    }
    if (kind == AlgebraKind::so3)
      require(negatives == 0, "so3 requires signature (+,+,+)");
    else
      require(negatives == 1 && s.k[8] < 0.0,
              "so21 requires signature (+,+,-) with the negative entry last");
    detail::finish_metric(s);
    s.c.assign(27, 0.0);
    for (int mu = 0; mu < 3; ++mu)
      for (int lam = 0; lam < 3; ++lam)
        for (int sig = 0; sig < 3; ++sig) {
          double v = 0.0;
          for (int nu = 0; nu < 3; ++nu)
            v += 0.5 * s.sqrt_k * s.Kinv(mu, nu) * levi_civita3(nu, lam, sig);
          s.c[(mu * 3 + lam) * 3 + sig] = v;
        }
  } else {
    const int r = static_cast<int>(std::lround(std::sqrt(double(k_matrix.size()))));
    require(r >= 1 && static_cast<std::size_t>(r) * r == k_matrix.size(),
            "custom algebra metric must be a square matrix");
    s.r = r;
    s.k = k_matrix;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        require(std::abs(s.K(a, b) - s.K(b, a)) == 0.0,
                "algebra metric must be symmetric");
    detail::finish_metric(s);
    require(c_custom.size() == static_cast<std::size_t>(r) * r * r,
            "custom algebra needs a full rank-3 structure tensor (r^3 entries)");
    s.c = c_custom;
  }
  detail::validate_structure(s);
  return s;
}

/// Shorthand for the abelian (Maxwell-limit) algebra of dimension r.
inline LieAlgebraData abelian_algebra(int r = 1) {
  std::vector<double> k(r * r, 0.0);
  for (int i = 0; i < r; ++i) k[i * r + i] = 1.0;
  return build_algebra(AlgebraKind::custom, k, std::vector<double>(r * r * r, 0.0));
}

}  // namespace jetfield
