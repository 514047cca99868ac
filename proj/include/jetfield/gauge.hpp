#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "jetfield/fields.hpp"
#include "jetfield/smallmat.hpp"

namespace jetfield {

/// Algebra-valued generator field xi^mu(x) as an analytic band-limited family
/// with exact partial derivatives (never differentiated on the lattice).
struct GeneratorField {
  std::vector<TrigPolynomial> comp;  // one polynomial per algebra component

  static GeneratorField random(const Grid& g, int r, std::uint64_t seed, int kmax,
                               double amplitude) {
    GeneratorField out;
    Rng rng(seed);
    out.comp.reserve(r);
    for (int mu = 0; mu < r; ++mu)
      out.comp.push_back(TrigPolynomial::random(g, rng, kmax, amplitude));
    return out;
  }
};

/// Gauge map data: per-node adjoint matrices Ad(gamma), Ad(gamma^{-1}) and
/// the Maurer-Cartan components eta^mu_j of the generator along base axes.
/// The group element itself is never materialized; every transformation law
/// uses exactly these quantities.
struct GaugeMapData {
  Grid grid{};
  int r = 0, m = 0;
  std::vector<double> ad;      // node*r*r, Ad(gamma)
  std::vector<double> ad_inv;  // node*r*r, Ad(gamma^{-1})
  std::vector<double> eta;     // node*r*m, eta^mu_j

  double Ad(std::size_t n, int mu, int nu) const { return ad[(n * r + mu) * r + nu]; }
  double AdInv(std::size_t n, int mu, int nu) const { return ad_inv[(n * r + mu) * r + nu]; }
  double Eta(std::size_t n, int mu, int j) const { return eta[(n * r + mu) * m + j]; }

  double ad_identity_residual() const {
    std::vector<double> prod(r * r);
    double worst = 0.0;
    for (std::size_t node = 0; node < grid.node_count(); ++node) {
      smallmat::matmul(r, &ad[node * r * r], &ad_inv[node * r * r], prod.data());
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          worst = std::max(worst, std::abs(prod[a * r + b] - (a == b ? 1.0 : 0.0)));
    }
    return worst;
  }

  /// Max-abs of Ad^T K Ad - K over nodes; zero when Ad preserves the algebra metric.
  double k_preservation_residual(const LieAlgebraData& s) const {
    double worst = 0.0;
    for (std::size_t node = 0; node < grid.node_count(); ++node)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          double v = 0.0;
          for (int p = 0; p < r; ++p)
            for (int q = 0; q < r; ++q) v += Ad(node, p, a) * s.K(p, q) * Ad(node, q, b);
          worst = std::max(worst, std::abs(v - s.K(a, b)));
        }
    return worst;
  }
};

/// Builds Ad = exp(ad_xi) by scaling-and-squaring and eta_j by the series
/// sum_k (-ad_xi)^k/(k+1)! applied to the exact derivative d_j xi. Generators
/// with operator norm above 20 are rejected.
inline GaugeMapData make_gauge_map(const GeneratorField& gen, const LieAlgebraData& s,
                                   const Grid& grid) {
  const int r = s.r, m = grid.m;
  require(static_cast<int>(gen.comp.size()) == r, "generator components must match algebra rank");
  GaugeMapData out;
  out.grid = grid;
  out.r = r;
  out.m = m;
  const std::size_t nn = grid.node_count();
  out.ad.assign(nn * r * r, 0.0);
  out.ad_inv.assign(nn * r * r, 0.0);
  out.eta.assign(nn * r * m, 0.0);

  parallel_for_nodes(nn, [&](std::size_t begin, std::size_t end) {
    std::array<double, 4> xarr{};
    std::vector<double> xi(r), dxi(r), adm(r * r), nadm(r * r), term(r), next(r);
    for (std::size_t node = begin; node < end; ++node) {
      node_coords(grid, node, xarr);
      const std::span<const double> x(xarr.data(), m);
      for (int mu = 0; mu < r; ++mu) xi[mu] = gen.comp[mu].eval(x);
      for (int mu = 0; mu < r; ++mu)
        for (int nu = 0; nu < r; ++nu) {
          double v = 0.0;
          for (int sig = 0; sig < r; ++sig) v += s.C(mu, sig, nu) * xi[sig];
          adm[mu * r + nu] = v;
          nadm[mu * r + nu] = -v;
        }
      double norm = 0.0;
      for (int a = 0; a < r; ++a) {
        double row = 0.0;
        for (int b = 0; b < r; ++b) row += std::abs(adm[a * r + b]);
        norm = std::max(norm, row);
      }
      if (norm > 20.0)
        throw Error("gauge generator too large: ||ad_xi|| = " + std::to_string(norm));
      smallmat::expm(r, adm.data(), &out.ad[node * r * r]);
      smallmat::expm(r, nadm.data(), &out.ad_inv[node * r * r]);

      for (int j = 0; j < m; ++j) {
        for (int mu = 0; mu < r; ++mu) dxi[mu] = gen.comp[mu].deriv(j, x);
        // eta_j = sum_{k>=0} (-ad)^k/(k+1)! (d_j xi)
        for (int mu = 0; mu < r; ++mu) term[mu] = dxi[mu];
        std::vector<double> acc(r, 0.0);
        double fact = 1.0;
        for (int k = 0;; ++k) {
          fact *= (k + 1);
          double tnorm = 0.0;
          for (int mu = 0; mu < r; ++mu) {
            acc[mu] += term[mu] / fact;
            tnorm = std::max(tnorm, std::abs(term[mu] / fact));
          }
          if (tnorm < 1e-15 || k > 120) break;
          for (int mu = 0; mu < r; ++mu) {
            double v = 0.0;
            for (int nu = 0; nu < r; ++nu) v += nadm[mu * r + nu] * term[nu];
            next[mu] = v;
          }
          term.swap(next);
        }
        for (int mu = 0; mu < r; ++mu) out.eta[(node * r + mu) * m + j] = acc[mu];
      }
    }
  });
  return out;
}

/// Composite of two gauge maps (apply `second` first, then `first`):
/// Ad_c = Ad_2 Ad_1 with gamma_c = gamma_2 gamma_1, eta_c = AdInv_1 eta_2 + eta_1.
inline GaugeMapData compose_gauge_maps(const GaugeMapData& first, const GaugeMapData& second) {
  require(first.grid == second.grid && first.r == second.r, "gauge maps must share layout");
  GaugeMapData out = first;
  const int r = first.r, m = first.m;
  for (std::size_t node = 0; node < first.grid.node_count(); ++node) {
    smallmat::matmul(r, &second.ad[node * r * r], &first.ad[node * r * r],
                     &out.ad[node * r * r]);
    smallmat::matmul(r, &first.ad_inv[node * r * r], &second.ad_inv[node * r * r],
                     &out.ad_inv[node * r * r]);
    for (int mu = 0; mu < r; ++mu)
      for (int j = 0; j < m; ++j) {
        double v = first.Eta(node, mu, j);
        for (int nu = 0; nu < r; ++nu)
          v += first.AdInv(node, mu, nu) * second.Eta(node, nu, j);
        out.eta[(node * r + mu) * m + j] = v;
      }
  }
  return out;
}

/// abar^mu_i = Ad(gamma^{-1})^mu_nu a^nu_i + eta^mu_i  (identity base map).
inline GaugeField gauge_a(const GaugeField& a, const GaugeMapData& gm) {
  require(a.f.grid() == gm.grid && a.r == gm.r, "gauge_a needs matching layouts");
  GaugeField out(a.f.grid(), a.r);
  const int r = a.r, m = a.m;
  parallel_for_nodes(gm.grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int i = 0; i < m; ++i) {
          double v = gm.Eta(node, mu, i);
          for (int nu = 0; nu < r; ++nu) v += gm.AdInv(node, mu, nu) * a.a(node, nu, i);
          out.a(node, mu, i) = v;
        }
  });
  return out;
}

/// Fbar^mu_{ik} = Ad(gamma^{-1})^mu_nu F^nu_{ik}  (homogeneous law).
inline Curvature gauge_F(const Curvature& f, const GaugeMapData& gm) {
  require(f.f.grid() == gm.grid && f.r == gm.r, "gauge_F needs matching layouts");
  Curvature out(f.f.grid(), f.r);
  const int r = f.r;
  parallel_for_nodes(gm.grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int slot = 0; slot < f.np; ++slot) {
          double v = 0.0;
          for (int nu = 0; nu < r; ++nu) v += gm.AdInv(node, mu, nu) * f.packed(node, nu, slot);
          out.packed(node, mu, slot) = v;
        }
  });
  return out;
}

/// Pibar^{pq}_mu = Pi^{pq}_nu Ad(gamma)^nu_mu. The orientation is pinned by
/// the requirement that the canonical pairing Pi^{ij}_mu F^mu_{ij} and the
/// Legendre map are preserved (which uses Ad^T K Ad = K).
inline Momentum gauge_Pi(const Momentum& pi, const GaugeMapData& gm) {
  require(pi.f.grid() == gm.grid && pi.r == gm.r, "gauge_Pi needs matching layouts");
  Momentum out(pi.f.grid(), pi.r);
  const int r = pi.r;
  parallel_for_nodes(gm.grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < r; ++mu)
        for (int slot = 0; slot < pi.np; ++slot) {
          double v = 0.0;
          for (int nu = 0; nu < r; ++nu) v += pi.packed(node, nu, slot) * gm.Ad(node, nu, mu);
          out.packed(node, mu, slot) = v;
        }
  });
  return out;
}

/// ebar^mu_j = Ad(gamma^{-1})^mu_sig e^sig_j; leaves G = K e (x) e invariant.
inline TriadData gauge_triad(const TriadData& e, const GaugeMapData& gm) {
  require(e.f.grid() == gm.grid && gm.r == 3, "gauge_triad needs a 3-dim gauge map");
  TriadData out(e.f.grid());
  parallel_for_nodes(gm.grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int mu = 0; mu < 3; ++mu)
        for (int j = 0; j < 3; ++j) {
          double v = 0.0;
          for (int sig = 0; sig < 3; ++sig) v += gm.AdInv(node, mu, sig) * e.e(node, sig, j);
          out.e(node, mu, j) = v;
        }
  });
  return out;
}

/// Spin-connection transformation law:
///   wbar_{i beta alpha} = Ad(gamma)^sig_beta Ad(gamma)^lam_alpha w_{i sig lam}
///                         - K_{sig alpha} (ad_{eta_i})^sig_beta
/// where the inhomogeneous term uses d_i Ad(gamma^{-1}) = -ad(eta_i) Ad(gamma^{-1})
/// so no lattice differentiation of the map is needed.
inline SpinConnectionData gauge_spin(const SpinConnectionData& w, const GaugeMapData& gm,
                                     const LieAlgebraData& s) {
  require(w.f.grid() == gm.grid && gm.r == 3 && s.r == 3, "gauge_spin needs 3-dim data");
  SpinConnectionData out(w.f.grid());
  parallel_for_nodes(gm.grid.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node)
      for (int i = 0; i < 3; ++i)
        for (int beta = 0; beta < 3; ++beta)
          for (int alpha = beta + 1; alpha < 3; ++alpha) {
            double v = 0.0;
            for (int sig = 0; sig < 3; ++sig)
              for (int lam = 0; lam < 3; ++lam)
                v += gm.Ad(node, sig, beta) * gm.Ad(node, lam, alpha) * w.w(node, i, sig, lam);
            for (int sig = 0; sig < 3; ++sig) {
              double ad_eta = 0.0;  // (ad_{eta_i})^sig_beta = C^sig_{tau beta} eta^tau_i
              for (int tau = 0; tau < 3; ++tau)
                ad_eta += s.C(sig, tau, beta) * gm.Eta(node, tau, i);
              v -= s.K(sig, alpha) * ad_eta;
            }
            out.slot_ref(node, i, beta, alpha) = v;
          }
  });
  return out;
}

}  // namespace jetfield
