#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "jetfield/dynamics.hpp"
#include "jetfield/fields.hpp"

namespace jetfield {

// The (3+3) coordinate change between phase-space variables (a, Pi) and
// triad / spin-connection variables (e, w), and the field equations in the
// new variables. Everything here requires m = r = 3.

namespace detail {

inline void require_3d(const LieAlgebraData& s, const Grid& g, const char* who) {
  require(s.r == 3 && g.m == 3, std::string(who) + " is defined for 3 base and 3 algebra dims");
}

}  // namespace detail

/// e^nu_p = 1/2 K^{mu nu} Pi^{ij}_mu eps_{pij}.
inline TriadData to_triad(const Momentum& pi, const LieAlgebraData& s) {
  const Grid& g = pi.f.grid();
  detail::require_3d(s, g, "to_triad");
  TriadData out(g);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int nu = 0; nu < 3; ++nu)
        for (int p = 0; p < 3; ++p) {
          double v = 0.0;
          for (int mu = 0; mu < 3; ++mu) {
            const double kk = s.Kinv(mu, nu);
            if (kk == 0.0) continue;
            for (int i = 0; i < 3; ++i)
              for (int j = 0; j < 3; ++j) {
                const double eps = levi_civita3(p, i, j);
                if (eps != 0.0) v += 0.5 * kk * pi.get(node, mu, i, j) * eps;
              }
          }
          out.e(node, nu, p) = v;
        }
  });
  return out;
}

/// Pi^{ij}_mu = K_{mu nu} e^nu_p eps^{pij}.
inline Momentum from_triad(const TriadData& e, const LieAlgebraData& s) {
  const Grid& g = e.f.grid();
  detail::require_3d(s, g, "from_triad");
  Momentum out(g, 3);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < 3; ++mu)
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            double v = 0.0;
            for (int nu = 0; nu < 3; ++nu) {
              const double kk = s.K(mu, nu);
              if (kk == 0.0) continue;
              for (int p = 0; p < 3; ++p) v += kk * e.e(node, nu, p) * levi_civita3(p, i, j);
            }
            out.slot_ref(node, mu, i, j) = v;
          }
  });
  return out;
}

/// w_{i beta alpha} = 1/2 sqrtK eps_{mu alpha beta} a^mu_i.
inline SpinConnectionData to_spin_connection(const GaugeField& a, const LieAlgebraData& s) {
  const Grid& g = a.f.grid();
  detail::require_3d(s, g, "to_spin_connection");
  SpinConnectionData out(g);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int i = 0; i < 3; ++i)
        for (int beta = 0; beta < 3; ++beta)
          for (int alpha = beta + 1; alpha < 3; ++alpha) {
            double v = 0.0;
            for (int mu = 0; mu < 3; ++mu)
              v += 0.5 * s.sqrt_k * levi_civita3(mu, alpha, beta) * a.a(node, mu, i);
            out.slot_ref(node, i, beta, alpha) = v;
          }
  });
  return out;
}

/// a^mu_i = (1/sqrtK) eps^{mu sig lam} w_{i lam sig}.
inline GaugeField from_spin_connection(const SpinConnectionData& w, const LieAlgebraData& s) {
  const Grid& g = w.f.grid();
  detail::require_3d(s, g, "from_spin_connection");
  GaugeField out(g, 3);
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < 3; ++mu)
        for (int i = 0; i < 3; ++i) {
          double v = 0.0;
          for (int sig = 0; sig < 3; ++sig)
            for (int lam = 0; lam < 3; ++lam) {
              const double eps = levi_civita3(mu, sig, lam);
              if (eps != 0.0) v += eps * w.w(node, i, lam, sig);
            }
          out.a(node, mu, i) = v / s.sqrt_k;
        }
  });
  return out;
}

/// Max-abs over nodes and (i, j, nu) of the quadratic spin-connection
/// identity
///   -1/2 eps^{rho alpha beta} w_{j nu rho} w_{i beta alpha}
///     = K_{mu nu} eps^{mu sig lam} w_{i lam eta} w_j^{ eta}_{ sig},
/// which holds identically for metric-compatible (antisymmetric) w.
inline double prop_quadratic_identity_residual(const SpinConnectionData& w,
                                               const LieAlgebraData& s) {
  const Grid& g = w.f.grid();
  detail::require_3d(s, g, "spin-connection identity");
  double worst = 0.0;
  for (std::size_t node = 0; node < g.node_count(); ++node)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int nu = 0; nu < 3; ++nu) {
          double lhs = 0.0;
          for (int rho = 0; rho < 3; ++rho)
            for (int alpha = 0; alpha < 3; ++alpha)
              for (int beta = 0; beta < 3; ++beta) {
                const double eps = levi_civita3(rho, alpha, beta);
                if (eps != 0.0)
                  lhs += -0.5 * eps * w.w(node, j, nu, rho) * w.w(node, i, beta, alpha);
              }
          double rhs = 0.0;
          for (int mu = 0; mu < 3; ++mu) {
            const double kk = s.K(mu, nu);
            if (kk == 0.0) continue;
            for (int sig = 0; sig < 3; ++sig)
              for (int lam = 0; lam < 3; ++lam) {
                const double eps = levi_civita3(mu, sig, lam);
                if (eps == 0.0) continue;
                for (int eta = 0; eta < 3; ++eta)
                  rhs += kk * eps * w.w(node, i, lam, eta) * w.mixed(node, s, j, eta, sig);
              }
          }
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

/// Curvature of the spin connection, antisymmetric in both (i,j) and
/// (lam,sig); stored packed in both pairs.
struct SpinCurvatureField {
  LatticeField f;  // shape (pair base, pair algebra)
  static constexpr int npb = 3, npa = 3;

  SpinCurvatureField() = default;
  explicit SpinCurvatureField(const Grid& g)
      : f(g, {IndexAxis{3, true}, IndexAxis{3, true}}) {}

  double R(std::size_t n, int i, int j, int lam, int sig) const {
    const auto b = pair_access(i, j, 3);
    const auto a = pair_access(lam, sig, 3);
    if (b.sign == 0.0 || a.sign == 0.0) return 0.0;
    return b.sign * a.sign * f.at(n, b.slot * npa + a.slot);
  }
  double& slot_ref(std::size_t n, int i, int j, int lam, int sig) {
    // requires i<j and lam<sig
    return f.at(n, pair_slot(i, j, 3) * npa + pair_slot(lam, sig, 3));
  }
};

/// R_{ij lam sig} = d_i w_{j lam sig} - d_j w_{i lam sig}
///                  + w_{i lam eta} w_j^{ eta}_{ sig} - w_{j lam eta} w_i^{ eta}_{ sig}.
inline SpinCurvatureField spin_curvature(const SpinConnectionData& w, const LieAlgebraData& s,
                                         Scheme scheme) {
  const Grid& g = w.f.grid();
  detail::require_3d(s, g, "spin_curvature");
  SpinCurvatureField out(g);
  std::vector<LatticeField> dw;
  for (int axis = 0; axis < 3; ++axis) dw.push_back(partial(w.f, axis, scheme));
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int lam = 0; lam < 3; ++lam)
            for (int sig = lam + 1; sig < 3; ++sig) {
              const int slot = pair_slot(lam, sig, 3);
              double v = dw[i].at(node, j * 3 + slot) - dw[j].at(node, i * 3 + slot);
              for (int eta = 0; eta < 3; ++eta)
                v += w.w(node, i, lam, eta) * w.mixed(node, s, j, eta, sig) -
                     w.w(node, j, lam, eta) * w.mixed(node, s, i, eta, sig);
              out.slot_ref(node, i, j, lam, sig) = v;
            }
  });
  return out;
}

struct EcResiduals {
  MuIField rho_e;            // (nu, p): triad equation
  SpinConnectionData rho_w;  // (i, lam<sig): spin-connection equation
};

/// First-order field equations in triad / spin-connection variables with the
/// free-field Hamiltonian hooks dH/dw = 0 and
/// dH/de^nu_p = -e^mu_k K_{mu nu} g^{kp} sqrt(g) sigma(g):
///   rho_e^nu_p  = -dH/de^nu_p
///                 - eps^{pij} eps^{mu sig lam} (K_{mu nu}/sqrtK)
///                   (d_j w_{i lam sig} + w_{j lam eta} w_i^{ eta}_{ sig})
///   rho_w_{i lam sig} = -dH/dw_{i lam sig}
///                 + (2 K_{mu nu}/sqrtK) eps^{pij} eps^{mu sig lam}
///                   (d_j e^nu_p + w_j^{ nu}_{ gam} e^gam_p).
/// These are the Hamilton-De Donder residuals pushed through the linear
/// coordinate change, up to the constant recombination documented in the
/// equivalence tests.
inline EcResiduals ec_residuals(const TriadData& e, const SpinConnectionData& w,
                                const BaseMetric& g, const LieAlgebraData& s, Scheme scheme) {
  const Grid& grid = e.f.grid();
  detail::require_3d(s, grid, "ec_residuals");
  require(w.f.grid() == grid && g.grid() == grid, "ec_residuals needs one shared grid");
  EcResiduals out;
  out.rho_e = MuIField(grid, 3);
  out.rho_w = SpinConnectionData(grid);

  std::vector<LatticeField> dwf, def;
  for (int axis = 0; axis < 3; ++axis) {
    dwf.push_back(partial(w.f, axis, scheme));
    def.push_back(partial(e.f, axis, scheme));
  }

  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const double sg = g.sqrtg(node);
      // triad equation
      for (int nu = 0; nu < 3; ++nu)
        for (int p = 0; p < 3; ++p) {
          double dh = 0.0;  // dH/de^nu_p
          for (int mu = 0; mu < 3; ++mu) {
            const double kk = s.K(mu, nu);
            if (kk == 0.0) continue;
            for (int k = 0; k < 3; ++k)
              dh -= e.e(node, mu, k) * kk * g.ginv(node, k, p) * sg * g.sigma();
          }
          double sum = 0.0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              const double epsb = levi_civita3(p, i, j);
              if (epsb == 0.0) continue;
              for (int mu = 0; mu < 3; ++mu) {
                const double kk = s.K(mu, nu);
                if (kk == 0.0) continue;
                for (int sig = 0; sig < 3; ++sig)
                  for (int lam = 0; lam < 3; ++lam) {
                    const double epsa = levi_civita3(mu, sig, lam);
                    if (epsa == 0.0) continue;
                    const auto acc = pair_access(lam, sig, 3);
                    const double dwv =
                        acc.sign == 0.0 ? 0.0 : acc.sign * dwf[j].at(node, i * 3 + acc.slot);
                    double quad = 0.0;
                    for (int eta = 0; eta < 3; ++eta)
                      quad += w.w(node, j, lam, eta) * w.mixed(node, s, i, eta, sig);
                    sum += epsb * epsa * kk * (dwv + quad);
                  }
              }
            }
          out.rho_e.v(node, nu, p) = -dh - sum / s.sqrt_k;
        }
      // spin-connection equation (free hook dH/dw = 0)
      for (int i = 0; i < 3; ++i)
        for (int lam = 0; lam < 3; ++lam)
          for (int sig = lam + 1; sig < 3; ++sig) {
            double sum = 0.0;
            for (int p = 0; p < 3; ++p)
              for (int j = 0; j < 3; ++j) {
                const double epsb = levi_civita3(p, i, j);
                if (epsb == 0.0) continue;
                for (int mu = 0; mu < 3; ++mu) {
                  const double epsa = levi_civita3(mu, sig, lam);
                  if (epsa == 0.0) continue;
                  for (int nu = 0; nu < 3; ++nu) {
                    const double kk = s.K(mu, nu);
                    if (kk == 0.0) continue;
                    double v = def[j].at(node, nu * 3 + p);
                    for (int gam = 0; gam < 3; ++gam)
                      v += w.mixed(node, s, j, nu, gam) * e.e(node, gam, p);
                    sum += epsb * epsa * kk * v;
                  }
                }
              }
            out.rho_w.slot_ref(node, i, lam, sig) = 2.0 * sum / s.sqrt_k;
          }
    }
  });
  return out;
}

struct FreeFieldResiduals {
  SpinConnectionData rho_torsion;  // (i, lam<sig)
  MuIField rho_einstein;           // (nu, p)
};

/// Free-field equations in purely frame form:
///   rho_torsion_{i lam sig} = 2 K_{mu nu} eps^{pij} eps^{mu sig lam}
///                             (d_j e^nu_p + w_j^{ nu}_{ gam} e^gam_p)
///   rho_einstein^nu_p = 1/2 e^mu_k K_{mu nu} g^{kp} sqrt(g) sigma(g)
///                       - eps^{pij} eps_{nu lam sig} R_{ij}^{ lam sig} sqrtK sigma(K)
/// with all index sums unpacked. The torsion equation is sqrtK times the
/// spin-connection residual of ec_residuals; the Einstein equation combines
/// the same two building blocks with its own constant weights (see the
/// consistency tests for the exact relation).
inline FreeFieldResiduals free_field_residuals(const TriadData& e, const SpinConnectionData& w,
                                               const BaseMetric& g, const LieAlgebraData& s,
                                               Scheme scheme) {
  const Grid& grid = e.f.grid();
  detail::require_3d(s, grid, "free_field_residuals");
  FreeFieldResiduals out;
  out.rho_torsion = SpinConnectionData(grid);
  out.rho_einstein = MuIField(grid, 3);

  std::vector<LatticeField> def;
  for (int axis = 0; axis < 3; ++axis) def.push_back(partial(e.f, axis, scheme));
  const SpinCurvatureField r = spin_curvature(w, s, scheme);
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const double sg = g.sqrtg(node);
      for (int i = 0; i < 3; ++i)
        for (int lam = 0; lam < 3; ++lam)
          for (int sig = lam + 1; sig < 3; ++sig) {
            double sum = 0.0;
            for (int p = 0; p < 3; ++p)
              for (int j = 0; j < 3; ++j) {
                const double epsb = levi_civita3(p, i, j);
                if (epsb == 0.0) continue;
                for (int mu = 0; mu < 3; ++mu) {
                  const double epsa = levi_civita3(mu, sig, lam);
                  if (epsa == 0.0) continue;
                  for (int nu = 0; nu < 3; ++nu) {
                    const double kk = s.K(mu, nu);
                    if (kk == 0.0) continue;
                    double v = def[j].at(node, nu * 3 + p);
                    for (int gam = 0; gam < 3; ++gam)
                      v += w.mixed(node, s, j, nu, gam) * e.e(node, gam, p);
                    sum += epsb * epsa * kk * v;
                  }
                }
              }
            out.rho_torsion.slot_ref(node, i, lam, sig) = 2.0 * sum;
          }
      for (int nu = 0; nu < 3; ++nu)
        for (int p = 0; p < 3; ++p) {
          double eterm = 0.0;
          for (int mu = 0; mu < 3; ++mu) {
            const double kk = s.K(mu, nu);
            if (kk == 0.0) continue;
            for (int k = 0; k < 3; ++k)
              eterm += e.e(node, mu, k) * kk * g.ginv(node, k, p);
          }
          double rterm = 0.0;
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
              const double epsb = levi_civita3(p, i, j);
              if (epsb == 0.0) continue;
              for (int lam = 0; lam < 3; ++lam)
                for (int sig = 0; sig < 3; ++sig) {
                  const double epsa = levi_civita3(nu, lam, sig);
                  if (epsa == 0.0) continue;
                  double rup = 0.0;  // R_{ij}^{ lam sig}
                  for (int mu = 0; mu < 3; ++mu)
                    for (int nu2 = 0; nu2 < 3; ++nu2)
                      rup += r.R(node, i, j, mu, nu2) * s.Kinv(mu, lam) * s.Kinv(nu2, sig);
                  rterm += epsb * epsa * rup;
                }
            }
          out.rho_einstein.v(node, nu, p) =
              0.5 * eterm * sg * g.sigma() - rterm * s.sqrt_k * s.sigma_k;
        }
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Spin connection from a triad jet at a point (the Levi-Civita construction).

/// w_i^{ mu}_{ nu} = e^mu_p (Sig^p_{ji} - Sig_j^{ p}_{ i} + Sig_{ij}^{ p}) e^j_nu
/// with Sig^p_{ji} = e^p_lam E^lam_{ij} and Latin indices moved with the
/// induced metric G = K e (x) e. Output depends only on the jet-class data
/// (e, E), is metric-compatible, and satisfies the torsion-free relation
/// checked by torsion_residual.
inline SpinPointValues spin_from_triad_jet(const TriadJetSample& jet, const LieAlgebraData& s) {
  require(s.r == 3, "triad jets are 3-dimensional");
  const double* e = jet.e.data();  // e[mu*3+i]
  const double d = smallmat::det(3, e);
  if (std::abs(d) < 1e-8)
    throw Error("triad is singular at the sample (det = " + std::to_string(d) + ")");
  std::array<double, 9> einv{};  // einv[i*3+mu] = e^i_mu
  smallmat::invert(3, e, einv.data());

  std::array<double, 9> G{}, Ginv{};
  for (int h = 0; h < 3; ++h)
    for (int k = 0; k < 3; ++k) {
      double v = 0.0;
      for (int mu = 0; mu < 3; ++mu)
        for (int nu = 0; nu < 3; ++nu) v += e[mu * 3 + k] * e[nu * 3 + h] * s.K(mu, nu);
      G[h * 3 + k] = v;
    }
  if (!smallmat::invert(3, G.data(), Ginv.data(), 1e-14))
    throw Error("induced metric is singular at the sample");

  double sig1[3][3][3];  // Sig^p_{ji}
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < 3; ++j)
      for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        for (int lam = 0; lam < 3; ++lam) v += einv[p * 3 + lam] * jet.E(lam, i, j);
        sig1[p][j][i] = v;
      }
  double sig2[3][3][3];  // Sig_j^{ p}_{ i} = G_{ja} G^{pb} Sig^a_{bi}
  for (int j = 0; j < 3; ++j)
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < 3; ++i) {
        double v = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) v += G[j * 3 + a] * Ginv[p * 3 + b] * sig1[a][b][i];
        sig2[j][p][i] = v;
      }
  double sig3[3][3][3];  // Sig_{ij}^{ p} = G_{ia} Sig^a_{jb} G^{bp}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p) {
        double v = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) v += G[i * 3 + a] * sig1[a][j][b] * Ginv[b * 3 + p];
        sig3[i][j][p] = v;
      }

  SpinPointValues out;
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu) {
        double v = 0.0;
        for (int p = 0; p < 3; ++p)
          for (int j = 0; j < 3; ++j)
            v += e[mu * 3 + p] * (sig1[p][j][i] - sig2[j][p][i] + sig3[i][j][p]) *
                 einv[j * 3 + nu];
        out.w(i, mu, nu) = v;
      }
  return out;
}

/// Torsion-free defect: max-abs of
///   2 E^mu_{ij} - w_i^{ mu}_{ nu} e^nu_j + w_j^{ mu}_{ nu} e^nu_i.
inline double torsion_residual(const TriadJetSample& jet, const SpinPointValues& w) {
  double worst = 0.0;
  for (int mu = 0; mu < 3; ++mu)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = 2.0 * jet.E(mu, i, j);
        for (int nu = 0; nu < 3; ++nu)
          v -= w.w(i, mu, nu) * jet.triad(nu, j) - w.w(j, mu, nu) * jet.triad(nu, i);
        worst = std::max(worst, std::abs(v));
      }
  return worst;
}

/// Metric-compatibility defect of point values: max-abs of
/// w_{i mu nu} + w_{i nu mu} after lowering with K.
inline double metricity_residual(const SpinPointValues& w, const LieAlgebraData& s) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int mu = 0; mu < 3; ++mu)
      for (int nu = 0; nu < 3; ++nu)
        worst = std::max(worst, std::abs(w.lowered(s, i, mu, nu) + w.lowered(s, i, nu, mu)));
  return worst;
}

/// Lattice convenience wrapper: extracts the jet data per node with finite
/// differences (O(h^2) / O(h^4) in E) and applies the point construction.
inline SpinConnectionData spin_from_triad_field(const TriadData& e, const LieAlgebraData& s,
                                                Scheme scheme) {
  const Grid& grid = e.f.grid();
  detail::require_3d(s, grid, "spin_from_triad_field");
  std::vector<LatticeField> de;
  for (int axis = 0; axis < 3; ++axis) de.push_back(partial(e.f, axis, scheme));
  SpinConnectionData out(grid);
  parallel_for_nodes(grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      TriadJetSample jet;
      for (int mu = 0; mu < 3; ++mu)
        for (int i = 0; i < 3; ++i) jet.triad(mu, i) = e.e(node, mu, i);
      for (int mu = 0; mu < 3; ++mu)
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j)
            jet.E_slot(mu, i, j) =
                0.5 * (de[j].at(node, mu * 3 + i) - de[i].at(node, mu * 3 + j));
      const SpinPointValues w = spin_from_triad_jet(jet, s);
      for (int i = 0; i < 3; ++i)
        for (int beta = 0; beta < 3; ++beta)
          for (int alpha = beta + 1; alpha < 3; ++alpha)
            out.slot_ref(node, i, beta, alpha) = w.lowered(s, i, beta, alpha);
    }
  });
  return out;
}

/// Induced base metric G_{hk} = K_{mu nu} e^mu_k e^nu_h; rejects degenerate
/// triads through the BaseMetric nondegeneracy checks.
inline BaseMetric induced_metric(const TriadData& e, const LieAlgebraData& s) {
  const Grid& grid = e.f.grid();
  detail::require_3d(s, grid, "induced_metric");
  std::vector<double> g(grid.node_count() * 9, 0.0);
  for (std::size_t node = 0; node < grid.node_count(); ++node)
    for (int h = 0; h < 3; ++h)
      for (int k = 0; k < 3; ++k) {
        double v = 0.0;
        for (int mu = 0; mu < 3; ++mu)
          for (int nu = 0; nu < 3; ++nu)
            v += s.K(mu, nu) * e.e(node, mu, k) * e.e(node, nu, h);
        g[(node * 3 + h) * 3 + k] = v;
      }
  return BaseMetric(grid, std::move(g));
}

}  // namespace jetfield
