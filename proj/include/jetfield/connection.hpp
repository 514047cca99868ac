#pragma once

#include <vector>

#include "jetfield/fields.hpp"

namespace jetfield {

/// Field strength of a gauge potential,
///   F^mu_{ij} = d_i a^mu_j - d_j a^mu_i - a^nu_i a^rho_j C^mu_{rho nu},
/// with centered periodic differences of the requested order.
inline Curvature curvature(const GaugeField& a, const LieAlgebraData& s, Scheme scheme) {
  const Grid& g = a.f.grid();
  require(a.r == s.r, "gauge field / algebra dimension mismatch");
  const int m = g.m, r = s.r;
  Curvature out(g, r);

  std::vector<LatticeField> da;
  da.reserve(m);
  for (int axis = 0; axis < m; ++axis) da.push_back(partial(a.f, axis, scheme));
  const bool abelian = s.abelian();

  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double v = da[i].at(node, mu * m + j) - da[j].at(node, mu * m + i);
            if (!abelian)
              for (int nu = 0; nu < r; ++nu)
                for (int rho = 0; rho < r; ++rho) {
                  const double c = s.C(mu, rho, nu);
                  if (c != 0.0) v -= a.a(node, nu, i) * a.a(node, rho, j) * c;
                }
            out.slot_ref(node, mu, i, j) = v;
          }
  });
  return out;
}

/// Holonomy (contact) residual: F minus the field strength of a. Vanishes
/// exactly iff the section (a, F) is holonomic at discretization accuracy.
inline Curvature contact_residual(const GaugeField& a, const Curvature& f,
                                  const LieAlgebraData& s, Scheme scheme) {
  Curvature c = curvature(a, s, scheme);
  Curvature out = f;
  out.f -= c.f;
  return out;
}

/// Covariant divergence D_j Pi^{ji}_mu = d_j Pi^{ji}_mu - Pi^{ji}_lam a^gam_j C^lam_{gam mu}.
inline MuIField covariant_divergence(const Momentum& pi, const GaugeField& a,
                                     const LieAlgebraData& s, Scheme scheme) {
  const Grid& g = pi.f.grid();
  require(a.f.grid() == g && a.r == pi.r && pi.r == s.r,
          "covariant divergence needs consistent shapes");
  const int m = g.m, r = s.r;
  MuIField out(g, r);

  std::vector<LatticeField> dpi;
  dpi.reserve(m);
  for (int axis = 0; axis < m; ++axis) dpi.push_back(partial(pi.f, axis, scheme));
  const bool abelian = s.abelian();

  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i) {
          double v = 0.0;
          for (int j = 0; j < m; ++j) {
            const auto acc = pair_access(j, i, m);
            if (acc.sign != 0.0) v += acc.sign * dpi[j].at(node, mu * pi.np + acc.slot);
          }
          if (!abelian)
            for (int lam = 0; lam < r; ++lam)
              for (int gam = 0; gam < r; ++gam) {
                const double c = s.C(lam, gam, mu);
                if (c == 0.0) continue;
                for (int j = 0; j < m; ++j)
                  v -= pi.get(node, lam, j, i) * a.a(node, gam, j) * c;
              }
          out.v(node, mu, i) = v;
        }
  });
  return out;
}

/// Antisymmetrized-jet coordinates from field-strength coordinates:
///   A^mu_{ij} = 1/2 (F^mu_{ji} - a^nu_i a^rho_j C^mu_{rho nu}).
/// On holonomic data this is the packed antisymmetrized derivative
/// 1/2 (d_j a^mu_i - d_i a^mu_j).
inline AlgebraPairField a_from_f_coordinates(const Curvature& f, const GaugeField& a,
                                             const LieAlgebraData& s) {
  const Grid& g = f.f.grid();
  require(a.f.grid() == g && a.r == f.r && f.r == s.r, "A<->F conversion needs consistent shapes");
  const int m = g.m, r = s.r;
  AlgebraPairField out(g, r);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double aa = 0.0;
            for (int nu = 0; nu < r; ++nu)
              for (int rho = 0; rho < r; ++rho) {
                const double c = s.C(mu, rho, nu);
                if (c != 0.0) aa += a.a(node, nu, i) * a.a(node, rho, j) * c;
              }
            out.slot_ref(node, mu, i, j) = 0.5 * (-f.packed(node, mu, pair_slot(i, j, m)) - aa);
          }
  });
  return out;
}

/// Inverse of a_from_f_coordinates: F^mu_{ij} = -2 A^mu_{ij} - a^nu_i a^rho_j C^mu_{rho nu}.
inline Curvature f_from_a_coordinates(const AlgebraPairField& A, const GaugeField& a,
                                      const LieAlgebraData& s) {
  const Grid& g = A.f.grid();
  const int m = g.m, r = s.r;
  Curvature out(g, r);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double aa = 0.0;
            for (int nu = 0; nu < r; ++nu)
              for (int rho = 0; rho < r; ++rho) {
                const double c = s.C(mu, rho, nu);
                if (c != 0.0) aa += a.a(node, nu, i) * a.a(node, rho, j) * c;
              }
            out.slot_ref(node, mu, i, j) = -2.0 * A.packed(node, mu, pair_slot(i, j, m)) - aa;
          }
  });
  return out;
}

}  // namespace jetfield
