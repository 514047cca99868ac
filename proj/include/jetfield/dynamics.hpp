#pragma once

#include <utility>
#include <vector>

#include "jetfield/connection.hpp"
#include "jetfield/fields.hpp"

namespace jetfield {

// Free Yang-Mills densities. Index sums run over all (unpacked) values with
// the antisymmetry signs supplied by the packed accessors; derivatives with
// respect to packed pairs are taken with respect to the independent i<j
// component throughout, which is the convention that makes the Legendre
// roundtrip exact.

/// L = -1/4 F^mu_{ip} F^nu_{jq} g^{ij} g^{pq} K_{mu nu} sqrt(g).
inline LatticeField lagrangian_density(const Curvature& f, const BaseMetric& g,
                                       const LieAlgebraData& s) {
  const Grid& grid = f.f.grid();
  require(g.grid() == grid && f.r == s.r, "density needs consistent shapes");
  const int m = grid.m, r = s.r;
  LatticeField out(grid, {});
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      double acc = 0.0;
      for (int mu = 0; mu < r; ++mu)
        for (int nu = 0; nu < r; ++nu) {
          const double kk = s.K(mu, nu);
          if (kk == 0.0) continue;
          double block = 0.0;
          for (int i = 0; i < m; ++i)
            for (int p = 0; p < m; ++p) {
              const double fip = f.get(node, mu, i, p);
              if (fip == 0.0) continue;
              for (int j = 0; j < m; ++j)
                for (int q = 0; q < m; ++q)
                  block += fip * f.get(node, nu, j, q) * g.ginv(node, i, j) * g.ginv(node, p, q);
            }
          acc += kk * block;
        }
      out.at(node, 0) = -0.25 * acc * g.sqrtg(node);
    }
  });
  return out;
}

/// Legendre map Pi^{ij}_mu = dL/dF^mu_{ij} = -F^nu_{pq} g^{ip} g^{jq} K_{mu nu} sqrt(g).
inline Momentum legendre(const Curvature& f, const BaseMetric& g, const LieAlgebraData& s) {
  const Grid& grid = f.f.grid();
  require(g.grid() == grid && f.r == s.r, "legendre needs consistent shapes");
  const int m = grid.m, r = s.r;
  Momentum out(grid, r);
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const double sg = g.sqrtg(node);
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double v = 0.0;
            for (int nu = 0; nu < r; ++nu) {
              const double kk = s.K(mu, nu);
              if (kk == 0.0) continue;
              for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) {
                  const double fv = f.get(node, nu, p, q);
                  if (fv != 0.0) v -= fv * g.ginv(node, i, p) * g.ginv(node, j, q) * kk;
                }
            }
            out.slot_ref(node, mu, i, j) = v * sg;
          }
    }
  });
  return out;
}

/// H = -1/4 (1/sqrt(g)) Pi^{pq}_sig Pi^{st}_lam g_{sp} g_{tq} K^{sig lam}.
inline LatticeField hamiltonian_density(const Momentum& pi, const BaseMetric& g,
                                        const LieAlgebraData& s) {
  const Grid& grid = pi.f.grid();
  require(g.grid() == grid && pi.r == s.r, "density needs consistent shapes");
  const int m = grid.m, r = s.r;
  LatticeField out(grid, {});
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      double acc = 0.0;
      for (int sig = 0; sig < r; ++sig)
        for (int lam = 0; lam < r; ++lam) {
          const double kk = s.Kinv(sig, lam);
          if (kk == 0.0) continue;
          double block = 0.0;
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) {
              const double pv = pi.get(node, sig, p, q);
              if (pv == 0.0) continue;
              for (int st = 0; st < m; ++st)
                for (int t = 0; t < m; ++t)
                  block += pv * pi.get(node, lam, st, t) * g.g(node, st, p) * g.g(node, t, q);
            }
          acc += kk * block;
        }
      out.at(node, 0) = -0.25 * acc / g.sqrtg(node);
    }
  });
  return out;
}

/// Inverse Legendre map F^mu_{ij} = dH/dPi^{ij}_mu = -(1/sqrt(g)) Pi^{st}_lam g_{si} g_{tj} K^{lam mu}.
inline Curvature inverse_legendre(const Momentum& pi, const BaseMetric& g,
                                  const LieAlgebraData& s) {
  const Grid& grid = pi.f.grid();
  require(g.grid() == grid && pi.r == s.r, "inverse legendre needs consistent shapes");
  const int m = grid.m, r = s.r;
  Curvature out(grid, r);
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const double inv_sg = 1.0 / g.sqrtg(node);
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double v = 0.0;
            for (int lam = 0; lam < r; ++lam) {
              const double kk = s.Kinv(lam, mu);
              if (kk == 0.0) continue;
              for (int st = 0; st < m; ++st)
                for (int t = 0; t < m; ++t) {
                  const double pv = pi.get(node, lam, st, t);
                  if (pv != 0.0) v -= pv * g.g(node, st, i) * g.g(node, t, j) * kk;
                }
            }
            out.slot_ref(node, mu, i, j) = v * inv_sg;
          }
    }
  });
  return out;
}

/// dH/da^mu_i. The free Hamiltonian carries no explicit potential dependence,
/// so this returns the zero field; kept as the hook through which coupled
/// Hamiltonians would enter the field equations.
inline MuIField dH_da(const Momentum& pi, const GaugeField& a, const BaseMetric& g,
                      const LieAlgebraData& s) {
  (void)pi;
  (void)g;
  require(a.r == s.r, "dH_da needs consistent shapes");
  return MuIField(a.f.grid(), s.r);
}

struct HddResiduals {
  Curvature r1;  // -dH/dPi^{ij} - d_j a_i + d_i a_j - aaC
  MuIField r2;   // -dH/da - d_j Pi^{ji} + Pi^{ji} a C
};

/// Hamilton-De Donder residuals of a phase-space section. Both vanish (to
/// discretization order) iff the section solves the discrete first-order
/// system; r1 is the holonomy equation, r2 the evolution equation.
inline HddResiduals hdd_residuals(const PhaseSection& sec, const BaseMetric& g,
                                  const LieAlgebraData& s, Scheme scheme) {
  HddResiduals out;
  // r1 = curvature(a) - dH/dPi
  out.r1 = curvature(sec.a, s, scheme);
  out.r1.f -= inverse_legendre(sec.pi, g, s).f;
  // r2 = -dH/da - D_j Pi^{ji}
  out.r2 = covariant_divergence(sec.pi, sec.a, s, scheme);
  out.r2.f *= -1.0;
  out.r2.f -= dH_da(sec.pi, sec.a, g, s).f;
  return out;
}

/// Euler-Lagrange residual dL/da^mu_i - D_j dL/dF^mu_{ji}; for the free
/// Lagrangian this is minus the covariant divergence of the Legendre image
/// of the field strength.
inline MuIField euler_lagrange_residual(const GaugeField& a, const BaseMetric& g,
                                        const LieAlgebraData& s, Scheme scheme) {
  const Momentum pi = legendre(curvature(a, s, scheme), g, s);
  MuIField out = covariant_divergence(pi, a, s, scheme);
  out.f *= -1.0;
  return out;
}

namespace detail {

/// Density paired against Pi in both actions:
///   X^mu_{ij} = d_j a^mu_i + 1/2 a^nu_i a^rho_j C^mu_{rho nu}, summed fully.
inline double momentum_pairing_term(const Momentum& pi, const GaugeField& a,
                                    const std::vector<LatticeField>& da,
                                    const LieAlgebraData& s, std::size_t node) {
  const int m = a.m, r = a.r;
  double acc = 0.0;
  for (int mu = 0; mu < r; ++mu)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const double pv = pi.get(node, mu, i, j);
        if (pv == 0.0) continue;
        double x = da[j].at(node, mu * m + i);
        for (int nu = 0; nu < r; ++nu)
          for (int rho = 0; rho < r; ++rho) {
            const double c = s.C(mu, rho, nu);
            if (c != 0.0) x += 0.5 * a.a(node, nu, i) * a.a(node, rho, j) * c;
          }
        acc += pv * x;
      }
  return acc;
}

}  // namespace detail

/// Discrete Hamiltonian action: node-sum quadrature of
///   -H - Pi^{ij}_mu (d_j a^mu_i + 1/2 a^nu_i a^rho_j C^mu_{rho nu}).
inline double hamiltonian_action(const PhaseSection& sec, const BaseMetric& g,
                                 const LieAlgebraData& s, Scheme scheme) {
  const Grid& grid = sec.a.f.grid();
  const LatticeField h = hamiltonian_density(sec.pi, g, s);
  std::vector<LatticeField> da;
  for (int axis = 0; axis < grid.m; ++axis) da.push_back(partial(sec.a.f, axis, scheme));
  double acc = 0.0;
  for (std::size_t node = 0; node < grid.node_count(); ++node)
    acc += -h.at(node, 0) - detail::momentum_pairing_term(sec.pi, sec.a, da, s, node);
  return acc * grid.cell_volume();
}

/// Discrete Lagrangian (Poincare-Cartan) action: node-sum quadrature of
///   L - 1/2 (F^mu_{kr} + a^nu_k a^rho_r C^mu_{rho nu}) dL/dF^mu_{kr}
///     + dL/dF^mu_{rk} d_r a^mu_k.
/// Under holonomic substitution F = curvature(a) the correction terms cancel
/// and the value reduces to the integral of L.
inline double lagrangian_action(const GaugeField& a, const Curvature& f, const BaseMetric& g,
                                const LieAlgebraData& s, Scheme scheme) {
  const Grid& grid = a.f.grid();
  const LatticeField lag = lagrangian_density(f, g, s);
  const Momentum pi = legendre(f, g, s);  // dL/dF at the section's F
  std::vector<LatticeField> da;
  for (int axis = 0; axis < grid.m; ++axis) da.push_back(partial(a.f, axis, scheme));
  const int m = grid.m, r = s.r;
  double acc = 0.0;
  for (std::size_t node = 0; node < grid.node_count(); ++node) {
    double corr = 0.0;   // 1/2 (F + aaC) . Pi
    double deriv = 0.0;  // Pi^{rk} d_r a_k
    for (int mu = 0; mu < r; ++mu)
      for (int k = 0; k < m; ++k)
        for (int rr = 0; rr < m; ++rr) {
          const double pv = pi.get(node, mu, k, rr);
          if (pv != 0.0) {
            double x = f.get(node, mu, k, rr);
            for (int nu = 0; nu < r; ++nu)
              for (int rho = 0; rho < r; ++rho) {
                const double c = s.C(mu, rho, nu);
                if (c != 0.0) x += a.a(node, nu, k) * a.a(node, rho, rr) * c;
              }
            corr += 0.5 * x * pv;
          }
          const double prk = pi.get(node, mu, rr, k);
          if (prk != 0.0) deriv += prk * da[rr].at(node, mu * m + k);
        }
    acc += lag.at(node, 0) - corr + deriv;
  }
  return acc * grid.cell_volume();
}

// ---------------------------------------------------------------------------
// Pairings used by the variational-gradient oracle: residuals live in the
// packed-component convention, so the discrete gradient of an action along
// (delta a, delta Pi) is
//   sum_nodes [ sum_{mu,i<j} R1 dPi + sum_{mu,i} R2 da ] * cell_volume.

inline double pairing_packed(const AlgebraPairField& x, const AlgebraPairField& y) {
  require(x.f.same_layout(y.f), "pairing needs identical layouts");
  double acc = 0.0;
  const double* a = x.f.data();
  const double* b = y.f.data();
  for (std::size_t i = 0; i < x.f.size(); ++i) acc += a[i] * b[i];
  return acc * x.f.grid().cell_volume();
}

inline double pairing_plain(const LatticeField& x, const LatticeField& y) {
  require(x.same_layout(y), "pairing needs identical layouts");
  double acc = 0.0;
  const double* a = x.data();
  const double* b = y.data();
  for (std::size_t i = 0; i < x.size(); ++i) acc += a[i] * b[i];
  return acc * x.grid().cell_volume();
}

}  // namespace jetfield
