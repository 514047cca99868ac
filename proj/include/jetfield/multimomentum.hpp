#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "jetfield/dynamics.hpp"
#include "jetfield/fields.hpp"

namespace jetfield {

// Connections on the phase-space fibration restricted along a section are
// lattice fields; full phase-space connection families are callable
// evaluators sampled at chosen fiber points, since the closedness conditions
// constrain fiber derivatives that a base lattice cannot represent.

/// Connection coefficients along a phase-space section:
/// Ga^mu_{kh} (base k, potential slot (mu,h)) and GPi^{st}_{k mu}
/// (antisymmetric pair packed s<t).
struct SectionConnection {
  LatticeField gamma_a;   // shape (k, mu, h)
  LatticeField gamma_pi;  // shape (k, mu, pair(s,t))
  int r = 0, m = 0, np = 0;

  SectionConnection() = default;
  SectionConnection(const Grid& g, int r_)
      : gamma_a(g, {IndexAxis{g.m, false}, IndexAxis{r_, false}, IndexAxis{g.m, false}}),
        gamma_pi(g, {IndexAxis{g.m, false}, IndexAxis{r_, false}, IndexAxis{g.m, true}}),
        r(r_),
        m(g.m),
        np(pair_count(g.m)) {}

  double Ga(std::size_t n, int k, int mu, int h) const {
    return gamma_a.at(n, (k * r + mu) * m + h);
  }
  double& Ga(std::size_t n, int k, int mu, int h) {
    return gamma_a.at(n, (k * r + mu) * m + h);
  }
  double GPi(std::size_t n, int k, int mu, int st, int t) const {
    const auto acc = pair_access(st, t, m);
    return acc.sign == 0.0 ? 0.0 : acc.sign * gamma_pi.at(n, (k * r + mu) * np + acc.slot);
  }
  double& GPi_slot(std::size_t n, int k, int mu, int st, int t) {
    // requires st<t
    return gamma_pi.at(n, (k * r + mu) * np + pair_slot(st, t, m));
  }
};

/// Connection coefficients on the velocity-side fibration:
/// Ga as above plus GF^mu_{k st} antisymmetric in (s,t).
struct LagrangianSectionConnection {
  LatticeField gamma_a;  // shape (k, mu, h)
  LatticeField gamma_f;  // shape (k, mu, pair(s,t))
  int r = 0, m = 0, np = 0;

  LagrangianSectionConnection() = default;
  LagrangianSectionConnection(const Grid& g, int r_)
      : gamma_a(g, {IndexAxis{g.m, false}, IndexAxis{r_, false}, IndexAxis{g.m, false}}),
        gamma_f(g, {IndexAxis{g.m, false}, IndexAxis{r_, false}, IndexAxis{g.m, true}}),
        r(r_),
        m(g.m),
        np(pair_count(g.m)) {}

  double Ga(std::size_t n, int k, int mu, int h) const {
    return gamma_a.at(n, (k * r + mu) * m + h);
  }
  double& Ga(std::size_t n, int k, int mu, int h) {
    return gamma_a.at(n, (k * r + mu) * m + h);
  }
  double GF(std::size_t n, int k, int mu, int st, int t) const {
    const auto acc = pair_access(st, t, m);
    return acc.sign == 0.0 ? 0.0 : acc.sign * gamma_f.at(n, (k * r + mu) * np + acc.slot);
  }
  double& GF_slot(std::size_t n, int k, int mu, int st, int t) {
    // requires st<t
    return gamma_f.at(n, (k * r + mu) * np + pair_slot(st, t, m));
  }
};

/// Holonomic lift of a section: Ga^mu_{kh} = d_k a^mu_h, GPi^{st}_{k mu} = d_k Pi^{st}_mu.
/// The section is an integral section of this connection by construction.
inline SectionConnection connection_from_section(const PhaseSection& sec, Scheme scheme) {
  const Grid& g = sec.a.f.grid();
  SectionConnection out(g, sec.a.r);
  for (int k = 0; k < g.m; ++k) {
    const LatticeField da = partial(sec.a.f, k, scheme);
    const LatticeField dpi = partial(sec.pi.f, k, scheme);
    for (std::size_t node = 0; node < g.node_count(); ++node)
      for (int mu = 0; mu < out.r; ++mu) {
        for (int h = 0; h < out.m; ++h)
          out.Ga(node, k, mu, h) = da.at(node, mu * out.m + h);
        for (int slot = 0; slot < out.np; ++slot)
          out.gamma_pi.at(node, (k * out.r + mu) * out.np + slot) =
              dpi.at(node, mu * out.np + slot);
      }
  }
  return out;
}

/// Holonomic lift on the velocity side: Ga = d_k a, GF = d_k F.
inline LagrangianSectionConnection lagrangian_connection_from(const GaugeField& a,
                                                              const Curvature& f,
                                                              Scheme scheme) {
  const Grid& g = a.f.grid();
  LagrangianSectionConnection out(g, a.r);
  for (int k = 0; k < g.m; ++k) {
    const LatticeField da = partial(a.f, k, scheme);
    const LatticeField df = partial(f.f, k, scheme);
    for (std::size_t node = 0; node < g.node_count(); ++node)
      for (int mu = 0; mu < out.r; ++mu) {
        for (int h = 0; h < out.m; ++h)
          out.Ga(node, k, mu, h) = da.at(node, mu * out.m + h);
        for (int slot = 0; slot < out.np; ++slot)
          out.gamma_f.at(node, (k * out.r + mu) * out.np + slot) =
              df.at(node, mu * out.np + slot);
      }
  }
  return out;
}

struct ConnectionResiduals {
  MuIField rho1;   // (sigma, i)
  Curvature rho2;  // (sigma, i<j)
};

/// Algebraic conditions a Hamiltonian connection must satisfy along a section:
///   rho1^i_sig  = GPi^{ji}_{j sig} + dH/da^sig_i - Pi^{ji}_mu C^mu_{rho sig} a^rho_j
///   rho2^sig_ij = Ga^sig_{ij} - Ga^sig_{ji} + dH/dPi^{ji}_sig - a^nu_i a^rho_j C^sig_{rho nu}
/// For the holonomic lift of a section these reproduce the Hamilton-De Donder
/// residuals through the constant sign map (rho1, rho2) = (-r2, +r1).
inline ConnectionResiduals hamiltonian_connection_residuals(const SectionConnection& c,
                                                            const PhaseSection& sec,
                                                            const BaseMetric& g,
                                                            const LieAlgebraData& s) {
  const Grid& grid = sec.a.f.grid();
  require(c.r == sec.a.r && c.gamma_a.grid() == grid,
          "connection and section must share layout");
  const int m = grid.m, r = s.r;
  ConnectionResiduals out;
  out.rho1 = MuIField(grid, r);
  out.rho2 = Curvature(grid, r);

  const MuIField dhda = dH_da(sec.pi, sec.a, g, s);
  const Curvature dhdpi = inverse_legendre(sec.pi, g, s);  // dH/dPi^{ij} packed

  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      for (int sig = 0; sig < r; ++sig)
        for (int i = 0; i < m; ++i) {
          double v = dhda.v(node, sig, i);
          for (int j = 0; j < m; ++j) v += c.GPi(node, j, sig, j, i);
          for (int mu = 0; mu < r; ++mu)
            for (int rho = 0; rho < r; ++rho) {
              const double cc = s.C(mu, rho, sig);
              if (cc == 0.0) continue;
              for (int j = 0; j < m; ++j)
                v -= sec.pi.get(node, mu, j, i) * cc * sec.a.a(node, rho, j);
            }
          out.rho1.v(node, sig, i) = v;
        }
      for (int sig = 0; sig < r; ++sig)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            // dH/dPi^{ji} = -dH/dPi^{ij} for the packed derivative
            double v = c.Ga(node, i, sig, j) - c.Ga(node, j, sig, i) -
                       dhdpi.packed(node, sig, pair_slot(i, j, m));
            for (int nu = 0; nu < r; ++nu)
              for (int rho = 0; rho < r; ++rho) {
                const double cc = s.C(sig, rho, nu);
                if (cc != 0.0) v -= sec.a.a(node, nu, i) * sec.a.a(node, rho, j) * cc;
              }
            out.rho2.slot_ref(node, sig, i, j) = v;
          }
    }
  });
  return out;
}

/// Algebraic conditions on the velocity side, with the free-field second
/// derivatives of L supplied in closed form:
///   rho1^i_sig = sum_j [ d(dL/dF^{ji}_sig)/dx^j |_F  + GF^mu_{j st} d2L/dF^mu_{st} dF^sig_{ji} ]
///                - dL/dF^mu_{ji} a^gam_j C^mu_{gam sig} - dL/da^sig_i
///   rho2^mu_ij = F^mu_{ij} + Ga^mu_{ji} - Ga^mu_{ij} + a^lam_i a^gam_j C^mu_{gam lam}
/// (the d2L/da dF block vanishes for the free Lagrangian).
inline ConnectionResiduals lagrangian_connection_residuals(const LagrangianSectionConnection& c,
                                                           const GaugeField& a,
                                                           const Curvature& f,
                                                           const BaseMetric& g,
                                                           const LieAlgebraData& s,
                                                           Scheme scheme) {
  const Grid& grid = a.f.grid();
  require(c.r == a.r && c.gamma_a.grid() == grid, "connection and section must share layout");
  const int m = grid.m, r = s.r;
  ConnectionResiduals out;
  out.rho1 = MuIField(grid, r);
  out.rho2 = Curvature(grid, r);

  const Momentum pi = legendre(f, g, s);  // dL/dF at the section's F

  // Explicit x-derivative of dL/dF at frozen fiber coordinates: differentiate
  // the metric coefficient field T^{jp,iq} = g^{jp} g^{iq} sqrt(g) and
  // contract with the local F. Done one base axis at a time.
  MuIField explicit_x(grid, r);
  for (int j = 0; j < m; ++j) {
    LatticeField coef(grid, {IndexAxis{m, false}, IndexAxis{m, false}, IndexAxis{m, false}});
    for (std::size_t node = 0; node < grid.node_count(); ++node)
      for (int p = 0; p < m; ++p)
        for (int i = 0; i < m; ++i)
          for (int q = 0; q < m; ++q)
            coef.at(node, (p * m + i) * m + q) =
                g.ginv(node, j, p) * g.ginv(node, i, q) * g.sqrtg(node);
    const LatticeField dcoef = partial(coef, j, scheme);
    for (std::size_t node = 0; node < grid.node_count(); ++node)
      for (int sig = 0; sig < r; ++sig)
        for (int i = 0; i < m; ++i) {
          double v = 0.0;
          for (int nu = 0; nu < r; ++nu) {
            const double kk = s.K(sig, nu);
            if (kk == 0.0) continue;
            for (int p = 0; p < m; ++p)
              for (int q = 0; q < m; ++q) {
                const double fv = f.get(node, nu, p, q);
                if (fv != 0.0) v -= fv * dcoef.at(node, (p * m + i) * m + q) * kk;
              }
          }
          explicit_x.v(node, sig, i) += v;
        }
  }

  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const double sg = g.sqrtg(node);
      for (int sig = 0; sig < r; ++sig)
        for (int i = 0; i < m; ++i) {
          double v = explicit_x.v(node, sig, i);
          // GF^mu_{j st} d(dL/dF^sig_{ji})/dF^mu_{st}, packed st sum
          for (int j = 0; j < m; ++j)
            for (int mu = 0; mu < r; ++mu) {
              const double kk = s.K(sig, mu);
              if (kk == 0.0) continue;
              for (int st = 0; st < m; ++st)
                for (int t = st + 1; t < m; ++t) {
                  const double gf = c.GF(node, j, mu, st, t);
                  if (gf == 0.0) continue;
                  const double d2 = -(g.ginv(node, j, st) * g.ginv(node, i, t) -
                                      g.ginv(node, j, t) * g.ginv(node, i, st)) *
                                    kk * sg;
                  v += gf * d2;
                }
            }
          for (int mu = 0; mu < r; ++mu)
            for (int gam = 0; gam < r; ++gam) {
              const double cc = s.C(mu, gam, sig);
              if (cc == 0.0) continue;
              for (int j = 0; j < m; ++j)
                v -= pi.get(node, mu, j, i) * a.a(node, gam, j) * cc;
            }
          out.rho1.v(node, sig, i) = v;  // dL/da = 0 for the free Lagrangian
        }
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j) {
            double v = f.packed(node, mu, pair_slot(i, j, m)) + c.Ga(node, j, mu, i) -
                       c.Ga(node, i, mu, j);
            for (int lam = 0; lam < r; ++lam)
              for (int gam = 0; gam < r; ++gam) {
                const double cc = s.C(mu, gam, lam);
                if (cc != 0.0) v += a.a(node, lam, i) * a.a(node, gam, j) * cc;
              }
            out.rho2.slot_ref(node, mu, i, j) = v;
          }
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Full phase-space connection families and the closedness conditions.

/// One fiber point of the phase space: base position plus (a, Pi) values.
struct PhasePoint {
  int r = 0, m = 0;
  std::array<double, 4> x{};
  std::vector<double> a;   // r*m, a[mu*m + i]
  std::vector<double> pi;  // r*pair_count(m), packed i<j

  PhasePoint(int r_, int m_) : r(r_), m(m_), a(r_ * m_, 0.0), pi(r_ * pair_count(m_), 0.0) {}

  double& a_at(int mu, int i) { return a[mu * m + i]; }
  double a_at(int mu, int i) const { return a[mu * m + i]; }
  double pi_at(int mu, int i, int j) const {
    const auto acc = pair_access(i, j, m);
    return acc.sign == 0.0 ? 0.0 : acc.sign * pi[mu * pair_count(m) + acc.slot];
  }
  double& pi_slot(int mu, int i, int j) {
    // requires i<j
    return pi[mu * pair_count(m) + pair_slot(i, j, m)];
  }
};

/// Connection coefficients at one fiber point.
struct ConnectionValue {
  int r = 0, m = 0, np = 0;
  std::vector<double> gamma_a;   // m*r*m, [k][mu][h]
  std::vector<double> gamma_pi;  // m*r*np packed

  ConnectionValue() = default;
  ConnectionValue(int r_, int m_)
      : r(r_), m(m_), np(pair_count(m_)), gamma_a(m_ * r_ * m_, 0.0),
        gamma_pi(m_ * r_ * np, 0.0) {}

  double Ga(int k, int mu, int h) const { return gamma_a[(k * r + mu) * m + h]; }
  double& Ga(int k, int mu, int h) { return gamma_a[(k * r + mu) * m + h]; }
  double GPi(int k, int mu, int st, int t) const {
    const auto acc = pair_access(st, t, m);
    return acc.sign == 0.0 ? 0.0 : acc.sign * gamma_pi[(k * r + mu) * np + acc.slot];
  }
  double& GPi_slot(int k, int mu, int st, int t) {
    // requires st<t
    return gamma_pi[(k * r + mu) * np + pair_slot(st, t, m)];
  }
};

/// A connection family over the phase space: a deterministic, reentrant
/// evaluator of all coefficients as functions of the fiber point.
struct PhaseConnectionFamily {
  int r = 0, m = 0;
  std::function<ConnectionValue(const PhasePoint&)> eval;
  double fiber_step = 1e-4;  // centered-difference step, Richardson-refined
};

/// Residuals of the three closedness conditions at one fiber point. The
/// third condition is reported both exactly as printed (with the second
/// derivative pair symmetrized) and in the fully antisymmetrized variant;
/// the typography of the source leaves the grouping ambiguous, so neither is
/// silently chosen.
struct ClosureResiduals {
  double condition1 = 0.0;
  double condition2 = 0.0;
  double condition3_printed = 0.0;
  double condition3_antisym = 0.0;
};

namespace detail {

struct FiberDerivatives {
  // Derivatives of every connection component with respect to every fiber
  // coordinate, indexed [coordinate][component].
  int na = 0, npi = 0, nc = 0;
  std::vector<double> d_a;   // (r*m) x nc
  std::vector<double> d_pi;  // (r*np) x nc
};

inline std::vector<double> flatten(const ConnectionValue& v) {
  std::vector<double> out;
  out.reserve(v.gamma_a.size() + v.gamma_pi.size());
  out.insert(out.end(), v.gamma_a.begin(), v.gamma_a.end());
  out.insert(out.end(), v.gamma_pi.begin(), v.gamma_pi.end());
  return out;
}

inline FiberDerivatives fiber_derivatives(const PhaseConnectionFamily& fam,
                                          const PhasePoint& p) {
  const int na = fam.r * fam.m;
  const int npi = fam.r * pair_count(fam.m);
  FiberDerivatives out;
  out.na = na;
  out.npi = npi;

  const auto probe = [&](auto&& set_coord, double step) {
    PhasePoint q = p;
    set_coord(q, step);
    const std::vector<double> plus = flatten(fam.eval(q));
    q = p;
    set_coord(q, -step);
    const std::vector<double> minus = flatten(fam.eval(q));
    std::vector<double> d(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i) d[i] = (plus[i] - minus[i]) / (2.0 * step);
    return d;
  };
  const auto richardson = [&](auto&& set_coord) {
    const std::vector<double> full = probe(set_coord, fam.fiber_step);
    const std::vector<double> half = probe(set_coord, 0.5 * fam.fiber_step);
    std::vector<double> d(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) d[i] = (4.0 * half[i] - full[i]) / 3.0;
    for (double x : d)
      require(std::isfinite(x), "connection family produced non-finite output");
    return d;
  };

  out.nc = static_cast<int>(flatten(fam.eval(p)).size());
  out.d_a.assign(static_cast<std::size_t>(na) * out.nc, 0.0);
  out.d_pi.assign(static_cast<std::size_t>(npi) * out.nc, 0.0);
  for (int c = 0; c < na; ++c) {
    const auto d = richardson([c](PhasePoint& q, double step) { q.a[c] += step; });
    std::copy(d.begin(), d.end(), out.d_a.begin() + static_cast<std::size_t>(c) * out.nc);
  }
  for (int c = 0; c < npi; ++c) {
    const auto d = richardson([c](PhasePoint& q, double step) { q.pi[c] += step; });
    std::copy(d.begin(), d.end(), out.d_pi.begin() + static_cast<std::size_t>(c) * out.nc);
  }
  return out;
}

}  // namespace detail

/// Evaluates the closedness conditions of a connection family at each sample
/// point by centered fiber differences (Richardson refined):
///   1)  d(GPi-trace^i_sig)/da^lam_p = 0
///   2)  d(GPi-trace^i_sig)/dPi^{pq}_lam + d(Ga^lam_{pq} - Ga^lam_{qp})/da^sig_i = 0
///   3)  d(Ga^sig_{ji} - Ga^sig_{ij})/dPi^{pq}_lam
///        - d(Ga^lam_{pq} +/- Ga^lam_{qp})/dPi^{ji}_sig = 0
/// where GPi-trace^i_sig = sum_j GPi^{ji}_{j sig} and derivatives with
/// respect to Pi^{pq} with p>q are minus the packed derivative.
inline std::vector<ClosureResiduals> closure_residuals(const PhaseConnectionFamily& fam,
                                                       const std::vector<PhasePoint>& points) {
  const int r = fam.r, m = fam.m, np = pair_count(m);
  std::vector<ClosureResiduals> out;
  out.reserve(points.size());

  // component offsets inside the flattened connection value
  const auto ga_off = [&](int k, int mu, int h) { return (k * r + mu) * m + h; };
  const int ga_total = m * r * m;
  const auto gpi_off = [&](int k, int mu, int slot) { return ga_total + (k * r + mu) * np + slot; };

  for (const PhasePoint& p : points) {
    require(p.r == r && p.m == m, "sample point rank mismatch");
    const auto fd = detail::fiber_derivatives(fam, p);
    const auto d_by_a = [&](int lam, int pp, int comp) {
      return fd.d_a[static_cast<std::size_t>(lam * m + pp) * fd.nc + comp];
    };
    const auto d_by_pi = [&](int lam, int pp, int qq, int comp) {
      const auto acc = pair_access(pp, qq, m);
      if (acc.sign == 0.0) return 0.0;
      return acc.sign *
             fd.d_pi[static_cast<std::size_t>(lam * np + acc.slot) * fd.nc + comp];
    };
    const auto trace_deriv_by = [&](auto&& dfun, int i, int sig) {
      // d( sum_j GPi^{ji}_{j sig} ) with the antisymmetric accessor
      double v = 0.0;
      for (int j = 0; j < m; ++j) {
        const auto acc = pair_access(j, i, m);
        if (acc.sign != 0.0) v += acc.sign * dfun(gpi_off(j, sig, acc.slot));
      }
      return v;
    };

    ClosureResiduals res;
    for (int i = 0; i < m; ++i)
      for (int sig = 0; sig < r; ++sig) {
        for (int lam = 0; lam < r; ++lam)
          for (int pp = 0; pp < m; ++pp) {
            const double c1 = trace_deriv_by(
                [&](int comp) { return d_by_a(lam, pp, comp); }, i, sig);
            res.condition1 = std::max(res.condition1, std::abs(c1));
          }
        for (int lam = 0; lam < r; ++lam)
          for (int pp = 0; pp < m; ++pp)
            for (int qq = 0; qq < m; ++qq) {
              if (pp == qq) continue;
              const double tr = trace_deriv_by(
                  [&](int comp) { return d_by_pi(lam, pp, qq, comp); }, i, sig);
              const double ga_part = d_by_a(sig, i, ga_off(pp, lam, qq)) -
                                     d_by_a(sig, i, ga_off(qq, lam, pp));
              res.condition2 = std::max(res.condition2, std::abs(tr + ga_part));
            }
      }
    for (int sig = 0; sig < r; ++sig)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          if (i == j) continue;
          for (int lam = 0; lam < r; ++lam)
            for (int pp = 0; pp < m; ++pp)
              for (int qq = 0; qq < m; ++qq) {
                if (pp == qq) continue;
                const double first = d_by_pi(lam, pp, qq, ga_off(j, sig, i)) -
                                     d_by_pi(lam, pp, qq, ga_off(i, sig, j));
                const double second_sym = d_by_pi(sig, j, i, ga_off(pp, lam, qq)) +
                                          d_by_pi(sig, j, i, ga_off(qq, lam, pp));
                const double second_asym = d_by_pi(sig, j, i, ga_off(pp, lam, qq)) -
                                           d_by_pi(sig, j, i, ga_off(qq, lam, pp));
                res.condition3_printed =
                    std::max(res.condition3_printed, std::abs(first - second_sym));
                res.condition3_antisym =
                    std::max(res.condition3_antisym, std::abs(first - second_asym));
              }
        }
    out.push_back(res);
  }
  return out;
}

}  // namespace jetfield
