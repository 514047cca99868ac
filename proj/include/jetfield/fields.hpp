#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "jetfield/algebra.hpp"
#include "jetfield/lattice.hpp"
#include "jetfield/smallmat.hpp"

namespace jetfield {

// Thin typed views over LatticeField with the index layouts used by the
// field equations. All of them are plain values; copying is fine.

/// Gauge potential a^mu_i: algebra index mu, base index i.
struct GaugeField {
  LatticeField f;
  int r = 0, m = 0;

  GaugeField() = default;
  GaugeField(const Grid& g, int r_)
      : f(g, {IndexAxis{r_, false}, IndexAxis{g.m, false}}), r(r_), m(g.m) {}
  GaugeField(LatticeField lf, int r_)
      : f(std::move(lf)), r(r_), m(f.grid().m) {}

  double a(std::size_t n, int mu, int i) const { return f.at(n, mu * m + i); }
  double& a(std::size_t n, int mu, int i) { return f.at(n, mu * m + i); }
};

/// Any (mu, i)-shaped residual or derivative field.
struct MuIField {
  LatticeField f;
  int r = 0, m = 0;

  MuIField() = default;
  MuIField(const Grid& g, int r_)
      : f(g, {IndexAxis{r_, false}, IndexAxis{g.m, false}}), r(r_), m(g.m) {}

  double v(std::size_t n, int mu, int i) const { return f.at(n, mu * m + i); }
  double& v(std::size_t n, int mu, int i) { return f.at(n, mu * m + i); }
};

/// Shared body for algebra-valued antisymmetric-pair fields (F^mu_{ij},
/// Pi^{ij}_mu, A^mu_{ij}): algebra index then packed base pair i<j.
struct AlgebraPairField {
  LatticeField f;
  int r = 0, m = 0, np = 0;

  AlgebraPairField() = default;
  AlgebraPairField(const Grid& g, int r_)
      : f(g, {IndexAxis{r_, false}, IndexAxis{g.m, true}}),
        r(r_),
        m(g.m),
        np(pair_count(g.m)) {}

  double get(std::size_t n, int mu, int i, int j) const {
    const auto acc = pair_access(i, j, m);
    return acc.sign == 0.0 ? 0.0 : acc.sign * f.at(n, mu * np + acc.slot);
  }
  double packed(std::size_t n, int mu, int slot) const { return f.at(n, mu * np + slot); }
  double& packed(std::size_t n, int mu, int slot) { return f.at(n, mu * np + slot); }
  double& slot_ref(std::size_t n, int mu, int i, int j) {
    // requires i<j
    return f.at(n, mu * np + pair_slot(i, j, m));
  }
};

/// Field strength F^mu_{ij} (antisymmetric pair packed i<j).
struct Curvature : AlgebraPairField {
  using AlgebraPairField::AlgebraPairField;
};

/// Multimomentum Pi^{ij}_mu (antisymmetric pair packed i<j); the packing is
/// the defining phase-space condition Pi^{ij} = -Pi^{ji}.
struct Momentum : AlgebraPairField {
  using AlgebraPairField::AlgebraPairField;
};

/// A section of the phase-space bundle: potential plus multimomentum.
struct PhaseSection {
  GaugeField a;
  Momentum pi;

  PhaseSection() = default;
  PhaseSection(GaugeField a_, Momentum pi_) : a(std::move(a_)), pi(std::move(pi_)) {
    require(a.f.grid() == pi.f.grid() && a.r == pi.r,
            "phase section components must share grid and algebra");
  }
};

// ---------------------------------------------------------------------------
// Node-wise base metric with cached inverse, volume factor, and signature.

enum class Signature { euclidean, lorentzian };

class BaseMetric {
 public:
  BaseMetric() = default;

  /// Takes node-wise symmetric g_ij values (node*m*m row-major) and derives
  /// the inverse, sqrt|det|, and the (required uniform) determinant sign.
  BaseMetric(const Grid& grid, std::vector<double> g_values)
      : grid_(grid), m_(grid.m), g_(std::move(g_values)) {
    const std::size_t nn = grid_.node_count();
    require(g_.size() == nn * m_ * m_, "metric value array has the wrong size");
    ginv_.assign(g_.size(), 0.0);
    sqrtg_.assign(nn, 0.0);
    sigma_ = 0.0;
    for (std::size_t node = 0; node < nn; ++node) {
      const double* gn = &g_[node * m_ * m_];
      for (int a = 0; a < m_; ++a)
        for (int b = a + 1; b < m_; ++b)
          require(std::abs(gn[a * m_ + b] - gn[b * m_ + a]) < 1e-14,
                  "base metric must be symmetric at every node");
      const double d = smallmat::det(m_, gn);
      require(std::abs(d) >= 1e-8, "base metric is (near-)degenerate at a node");
      const double sign = d > 0 ? 1.0 : -1.0;
      if (sigma_ == 0.0)
        sigma_ = sign;
      else
        require(sigma_ == sign, "base metric determinant sign must be uniform");
      sqrtg_[node] = std::sqrt(std::abs(d));
      smallmat::invert(m_, gn, &ginv_[node * m_ * m_]);
    }
  }

  static BaseMetric flat(const Grid& grid, std::span<const double> diag) {
    require(diag.size() == static_cast<std::size_t>(grid.m), "flat metric needs m diagonal entries");
    std::vector<double> g(grid.node_count() * grid.m * grid.m, 0.0);
    for (std::size_t node = 0; node < grid.node_count(); ++node)
      for (int a = 0; a < grid.m; ++a) g[(node * grid.m + a) * grid.m + a] = diag[a];
    return BaseMetric(grid, std::move(g));
  }

  static BaseMetric identity(const Grid& grid) {
    std::vector<double> diag(grid.m, 1.0);
    return flat(grid, diag);
  }

  /// Diagonal signature base plus a seeded smooth symmetric perturbation,
  /// validated for nondegeneracy and uniform sign.
  static BaseMetric random_smooth(const Grid& grid, Signature sig, std::uint64_t seed,
                                  int kmax, double amplitude) {
    const int m = grid.m;
    LatticeField pert = jetfield::random_smooth(
        grid, {IndexAxis{m, false}, IndexAxis{m, false}}, seed, kmax, amplitude);
    std::vector<double> g(grid.node_count() * m * m, 0.0);
    for (std::size_t node = 0; node < grid.node_count(); ++node)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          double base = 0.0;
          if (a == b) base = (sig == Signature::lorentzian && a == 0) ? -1.0 : 1.0;
          const double p = 0.5 * (pert.at(node, a * m + b) + pert.at(node, b * m + a));
          g[(node * m + a) * m + b] = base + p;
        }
    return BaseMetric(grid, std::move(g));
  }

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  double g(std::size_t n, int i, int j) const { return g_[(n * m_ + i) * m_ + j]; }
  double ginv(std::size_t n, int i, int j) const { return ginv_[(n * m_ + i) * m_ + j]; }
  double sqrtg(std::size_t n) const { return sqrtg_[n]; }
  double sigma() const { return sigma_; }

 private:
  Grid grid_{};
  int m_ = 0;
  std::vector<double> g_, ginv_, sqrtg_;
  double sigma_ = 1.0;
};

// ---------------------------------------------------------------------------
// Triad / spin-connection variables (3 base dims, 3 algebra dims).

/// Triad field e^nu_p.
struct TriadData {
  LatticeField f;

  TriadData() = default;
  explicit TriadData(const Grid& g) : f(g, {IndexAxis{3, false}, IndexAxis{3, false}}) {
    require(g.m == 3, "triad variables need a 3-dimensional base");
  }

  double e(std::size_t n, int nu, int p) const { return f.at(n, nu * 3 + p); }
  double& e(std::size_t n, int nu, int p) { return f.at(n, nu * 3 + p); }
};

/// Spin connection w_{i beta alpha}, metricity (antisymmetry in beta,alpha)
/// enforced by packing beta<alpha.
struct SpinConnectionData {
  LatticeField f;
  static constexpr int np = 3;  // pair_count(3)

  SpinConnectionData() = default;
  explicit SpinConnectionData(const Grid& g)
      : f(g, {IndexAxis{3, false}, IndexAxis{3, true}}) {
    require(g.m == 3, "spin-connection variables need a 3-dimensional base");
  }

  double w(std::size_t n, int i, int beta, int alpha) const {
    const auto acc = pair_access(beta, alpha, 3);
    return acc.sign == 0.0 ? 0.0 : acc.sign * f.at(n, i * np + acc.slot);
  }
  double packed(std::size_t n, int i, int slot) const { return f.at(n, i * np + slot); }
  double& packed(std::size_t n, int i, int slot) { return f.at(n, i * np + slot); }
  double& slot_ref(std::size_t n, int i, int beta, int alpha) {
    // requires beta<alpha
    return f.at(n, i * np + pair_slot(beta, alpha, 3));
  }

  /// Mixed coefficients w_i^{ mu}_{ nu} = K^{mu sigma} w_{i sigma nu}.
  double mixed(std::size_t n, const LieAlgebraData& s, int i, int mu, int nu) const {
    double v = 0.0;
    for (int sig = 0; sig < 3; ++sig) v += s.Kinv(mu, sig) * w(n, i, sig, nu);
    return v;
  }
};

/// Point sample of a triad jet: values e^mu_i plus antisymmetrized
/// derivatives E^mu_{ij} (packed i<j) at one point.
struct TriadJetSample {
  std::array<double, 9> e{};       // e[mu*3 + i]
  std::array<double, 9> ejet{};    // E[mu*3 + slot(i,j)]

  double triad(int mu, int i) const { return e[mu * 3 + i]; }
  double& triad(int mu, int i) { return e[mu * 3 + i]; }
  double E(int mu, int i, int j) const {
    const auto acc = pair_access(i, j, 3);
    return acc.sign == 0.0 ? 0.0 : acc.sign * ejet[mu * 3 + acc.slot];
  }
  double& E_slot(int mu, int i, int j) {
    // requires i<j
    return ejet[mu * 3 + pair_slot(i, j, 3)];
  }
};

/// Spin-connection values at a single point, mixed form w_i^{ mu}_{ nu}.
struct SpinPointValues {
  std::array<double, 27> mixed{};  // [i][mu][nu] = i*9 + mu*3 + nu

  double w(int i, int mu, int nu) const { return mixed[i * 9 + mu * 3 + nu]; }
  double& w(int i, int mu, int nu) { return mixed[i * 9 + mu * 3 + nu]; }

  /// Lowered coefficients w_{i mu nu} = w_i^{ sigma}_{ nu} K_{sigma mu}.
  double lowered(const LieAlgebraData& s, int i, int mu, int nu) const {
    double v = 0.0;
    for (int sig = 0; sig < 3; ++sig) v += w(i, sig, nu) * s.K(sig, mu);
    return v;
  }
};

// ---------------------------------------------------------------------------
// Random typed fields for tests and suites.

inline GaugeField random_gauge_field(const Grid& g, const LieAlgebraData& s,
                                     std::uint64_t seed, int kmax, double amplitude) {
  GaugeField out(g, s.r);
  out.f = random_smooth(g, out.f.shape(), seed, kmax, amplitude);
  return out;
}

inline Curvature random_curvature(const Grid& g, const LieAlgebraData& s,
                                  std::uint64_t seed, int kmax, double amplitude) {
  Curvature out(g, s.r);
  out.f = random_smooth(g, out.f.shape(), seed, kmax, amplitude);
  return out;
}

inline Momentum random_momentum(const Grid& g, const LieAlgebraData& s,
                                std::uint64_t seed, int kmax, double amplitude) {
  Momentum out(g, s.r);
  out.f = random_smooth(g, out.f.shape(), seed, kmax, amplitude);
  return out;
}

}  // namespace jetfield
