#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "jetfield/core.hpp"

namespace jetfield {

// ---------------------------------------------------------------------------
// Periodic m-torus grid, 2 <= m <= 4. Default axis length is 2*pi so integer
// Fourier modes are exactly periodic and the node-sum quadrature is spectrally
// accurate on band-limited integrands.

struct Grid {
  int m = 3;
  std::array<int, 4> n{};
  std::array<double, 4> h{};

  std::size_t node_count() const {
    std::size_t t = 1;
    for (int a = 0; a < m; ++a) t *= static_cast<std::size_t>(n[a]);
    return t;
  }

  /// Row-major strides: last axis is contiguous.
  std::array<std::size_t, 4> strides() const {
    std::array<std::size_t, 4> s{};
    std::size_t acc = 1;
    for (int a = m - 1; a >= 0; --a) {
      s[a] = acc;
      acc *= static_cast<std::size_t>(n[a]);
    }
    return s;
  }

  double coord(int axis, int index) const { return h[axis] * index; }
  double length(int axis) const { return h[axis] * n[axis]; }

  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < m; ++a) v *= h[a];
    return v;
  }

  bool operator==(const Grid&) const = default;
};

inline Grid make_grid(int m, std::span<const int> nodes, std::span<const double> spacing = {}) {
  require(m >= 2 && m <= 4, "grid dimension must be 2..4");
  require(nodes.size() == static_cast<std::size_t>(m) || nodes.size() == 1,
          "node list must have one entry per axis (or a single shared value)");
  Grid g;
  g.m = m;
  for (int a = 0; a < m; ++a) {
    g.n[a] = nodes.size() == 1 ? nodes[0] : nodes[a];
    require(g.n[a] >= 4, "grid needs at least 4 nodes per axis");
    g.h[a] = 2.0 * kPi / g.n[a];
  }
  if (!spacing.empty()) {
    require(spacing.size() == static_cast<std::size_t>(m) || spacing.size() == 1,
            "spacing list must have one entry per axis (or a single shared value)");
    for (int a = 0; a < m; ++a) {
      g.h[a] = spacing.size() == 1 ? spacing[0] : spacing[a];
      require(g.h[a] > 0.0, "grid spacing must be positive");
    }
  }
  return g;
}

inline Grid cubic_grid(int m, int nodes) {
  const int nn[1] = {nodes};
  return make_grid(m, nn);
}

// ---------------------------------------------------------------------------
// Site-parallel map helper. Honors JETFIELD_THREADS (default 1). Each worker
// writes a disjoint node range, so results are identical for any thread count.

inline int max_threads() {
  static const int cached = [] {
    if (const char* env = std::getenv("JETFIELD_THREADS")) {
      const int v = std::atoi(env);
      if (v >= 1) return std::min(v, 256);
    }
    return 1;
  }();
  return cached;
}

template <typename Fn>
void parallel_for_nodes(std::size_t count, Fn&& fn) {
  const int nt = max_threads();
  if (nt <= 1 || count < 2048) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::size_t b = std::min(count, t * chunk);
    const std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Component shape: an ordered list of index axes; an axis is either a plain
// range or an antisymmetric pair packed as i<j (diagonal never stored).

struct IndexAxis {
  int extent = 1;
  bool antisym_pair = false;

  int slots() const { return antisym_pair ? pair_count(extent) : extent; }
  bool operator==(const IndexAxis&) const = default;
};

inline std::size_t shape_slots(std::span<const IndexAxis> shape) {
  std::size_t t = 1;
  for (const auto& ax : shape) t *= static_cast<std::size_t>(ax.slots());
  return t;
}

/// Generic lattice field: one real per node per component slot, node-major
/// storage (components contiguous per node).
class LatticeField {
 public:
  LatticeField() = default;
  LatticeField(const Grid& grid, std::vector<IndexAxis> shape)
      : grid_(grid), shape_(std::move(shape)), ncomp_(shape_slots(shape_)) {
    v_.assign(grid_.node_count() * ncomp_, 0.0);
  }

  const Grid& grid() const { return grid_; }
  const std::vector<IndexAxis>& shape() const { return shape_; }
  std::size_t ncomp() const { return ncomp_; }
  std::size_t nodes() const { return grid_.node_count(); }
  std::size_t size() const { return v_.size(); }

  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  double& at(std::size_t node, std::size_t comp) { return v_[node * ncomp_ + comp]; }
  double at(std::size_t node, std::size_t comp) const { return v_[node * ncomp_ + comp]; }

  /// Resolves a full multi-index (pair axes consume two entries) to a slot
  /// and the antisymmetry sign; sign 0 flags a diagonal access.
  SignedSlot component(std::span<const int> idx) const {
    std::size_t slot = 0;
    double sign = 1.0;
    std::size_t pos = 0;
    for (const auto& ax : shape_) {
      if (ax.antisym_pair) {
        const auto acc = pair_access(idx[pos], idx[pos + 1], ax.extent);
        if (acc.sign == 0.0) return {0, 0.0};
        slot = slot * ax.slots() + acc.slot;
        sign *= acc.sign;
        pos += 2;
      } else {
        slot = slot * ax.slots() + idx[pos];
        pos += 1;
      }
    }
    return {static_cast<int>(slot), sign};
  }

  double get(std::size_t node, std::span<const int> idx) const {
    const auto acc = component(idx);
    return acc.sign == 0.0 ? 0.0 : acc.sign * at(node, acc.slot);
  }

  bool same_layout(const LatticeField& o) const {
    return grid_ == o.grid_ && shape_ == o.shape_;
  }

  LatticeField& operator+=(const LatticeField& o) {
    require(same_layout(o), "field shape mismatch in +=");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  LatticeField& operator-=(const LatticeField& o) {
    require(same_layout(o), "field shape mismatch in -=");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  LatticeField& operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
  }

  friend LatticeField operator+(LatticeField a, const LatticeField& b) { return a += b; }
  friend LatticeField operator-(LatticeField a, const LatticeField& b) { return a -= b; }
  friend LatticeField operator*(double s, LatticeField a) { return a *= s; }

 private:
  Grid grid_{};
  std::vector<IndexAxis> shape_{};
  std::size_t ncomp_ = 1;
  std::vector<double> v_{};
};

// ---------------------------------------------------------------------------
// Finite differences: centered periodic stencils of order 2 or 4.

enum class Scheme { order2, order4 };

inline LatticeField partial(const LatticeField& f, int axis, Scheme scheme) {
  const Grid& g = f.grid();
  require(axis >= 0 && axis < g.m, "derivative axis out of range");
  LatticeField out(g, f.shape());
  const auto st = g.strides();
  const std::size_t stride = st[axis];
  const int nax = g.n[axis];
  const std::size_t ncomp = f.ncomp();
  const double inv_h = 1.0 / g.h[axis];

  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const int k = static_cast<int>((node / stride) % nax);
      const auto shifted = [&](int d) {
        int kk = k + d;
        if (kk < 0) kk += nax;
        if (kk >= nax) kk -= nax;
        return node + static_cast<std::size_t>(kk - k) * stride;
      };
      if (scheme == Scheme::order2) {
        const std::size_t p1 = shifted(1), m1 = shifted(-1);
        for (std::size_t c = 0; c < ncomp; ++c)
          out.at(node, c) = 0.5 * inv_h * (f.at(p1, c) - f.at(m1, c));
      } else {
        const std::size_t p1 = shifted(1), m1 = shifted(-1);
        const std::size_t p2 = shifted(2), m2 = shifted(-2);
        for (std::size_t c = 0; c < ncomp; ++c)
          out.at(node, c) = inv_h / 12.0 *
                            (-f.at(p2, c) + 8.0 * f.at(p1, c) - 8.0 * f.at(m1, c) + f.at(m2, c));
      }
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Deterministic reductions in fixed lexicographic (node, component) order.

enum class Reduction { max_abs, l2, mean };

inline double reduce(const LatticeField& f, Reduction p) {
  const double* v = f.data();
  const std::size_t total = f.size();
  switch (p) {
    case Reduction::max_abs: {
      double worst = 0.0;
      for (std::size_t i = 0; i < total; ++i) worst = std::max(worst, std::abs(v[i]));
      return worst;
    }
    case Reduction::l2: {
      double s = 0.0;
      for (std::size_t i = 0; i < total; ++i) s += v[i] * v[i];
      return std::sqrt(s * f.grid().cell_volume());
    }
    case Reduction::mean: {
      double s = 0.0;
      for (std::size_t i = 0; i < total; ++i) s += v[i];
      return total ? s / static_cast<double>(total) : 0.0;
    }
  }
  return 0.0;
}

inline double max_abs(const LatticeField& f) { return reduce(f, Reduction::max_abs); }

// ---------------------------------------------------------------------------
// Band-limited trigonometric polynomials with exact derivatives. These back
// both seeded random lattice fields and analytic gauge-generator families;
// evaluating the same polynomial on refined grids samples one fixed smooth
// function, which is what the convergence suites need.

class TrigPolynomial {
 public:
  struct Mode {
    std::array<int, 4> k{};
    double c_cos = 0.0;
    double c_sin = 0.0;
  };

  TrigPolynomial() = default;
  TrigPolynomial(int m, std::array<double, 4> freq, std::vector<Mode> modes)
      : m_(m), freq_(freq), modes_(std::move(modes)) {}

  double eval(std::span<const double> x) const {
    double s = 0.0;
    for (const auto& mo : modes_) {
      const double ph = phase(mo, x);
      s += mo.c_cos * std::cos(ph) + mo.c_sin * std::sin(ph);
    }
    return s;
  }

  double deriv(int axis, std::span<const double> x) const {
    double s = 0.0;
    for (const auto& mo : modes_) {
      const double w = mo.k[axis] * freq_[axis];
      if (w == 0.0) continue;
      const double ph = phase(mo, x);
      s += w * (-mo.c_cos * std::sin(ph) + mo.c_sin * std::cos(ph));
    }
    return s;
  }

  /// Modes fill the box |k_a| <= kmax in lexicographic order; coefficients are
  /// scaled so the field amplitude stays O(amplitude) independent of kmax.
  static TrigPolynomial random(const Grid& g, Rng& rng, int kmax, double amplitude) {
    for (int a = 0; a < g.m; ++a)
      require(kmax <= g.n[a] / 4, "kmax must stay below N/4 per axis");
    std::array<double, 4> freq{};
    for (int a = 0; a < g.m; ++a) freq[a] = 2.0 * kPi / g.length(a);
    std::vector<Mode> modes;
    const int width = 2 * kmax + 1;
    int count = 1;
    for (int a = 0; a < g.m; ++a) count *= width;
    const double scale = amplitude / std::sqrt(static_cast<double>(count));
    modes.reserve(count);
    std::array<int, 4> k{};
    for (int flat = 0; flat < count; ++flat) {
      int rem = flat;
      for (int a = g.m - 1; a >= 0; --a) {
        k[a] = rem % width - kmax;
        rem /= width;
      }
      Mode mo;
      mo.k = k;
      mo.c_cos = scale * rng.symmetric();
      mo.c_sin = scale * rng.symmetric();
      modes.push_back(mo);
    }
    return TrigPolynomial(g.m, freq, std::move(modes));
  }

 private:
  double phase(const Mode& mo, std::span<const double> x) const {
    double ph = 0.0;
    for (int a = 0; a < m_; ++a) ph += mo.k[a] * freq_[a] * x[a];
    return ph;
  }

  int m_ = 3;
  std::array<double, 4> freq_{};
  std::vector<Mode> modes_{};
};

inline void node_coords(const Grid& g, std::size_t node, std::array<double, 4>& x) {
  const auto st = g.strides();
  for (int a = 0; a < g.m; ++a) {
    const int idx = static_cast<int>((node / st[a]) % static_cast<std::size_t>(g.n[a]));
    x[a] = g.coord(a, idx);
  }
}

/// Evaluates a trig polynomial (or its exact axis derivative) on every node.
inline void sample_on_grid(const TrigPolynomial& p, const Grid& g, LatticeField& out,
                           std::size_t comp, int deriv_axis = -1) {
  parallel_for_nodes(g.node_count(), [&](std::size_t begin, std::size_t end) {
    std::array<double, 4> x{};
    for (std::size_t node = begin; node < end; ++node) {
      node_coords(g, node, x);
      const std::span<const double> xs(x.data(), g.m);
      out.at(node, comp) = deriv_axis < 0 ? p.eval(xs) : p.deriv(deriv_axis, xs);
    }
  });
}

/// Seeded band-limited random field: each component slot is an independent
/// trig polynomial drawn from one sequential stream, so identical seeds give
/// bit-identical fields.
inline LatticeField random_smooth(const Grid& g, std::vector<IndexAxis> shape,
                                  std::uint64_t seed, int kmax, double amplitude) {
  LatticeField out(g, std::move(shape));
  if (amplitude == 0.0) return out;
  Rng rng(seed);
  for (std::size_t c = 0; c < out.ncomp(); ++c) {
    const TrigPolynomial p = TrigPolynomial::random(g, rng, kmax, amplitude);
    sample_on_grid(p, g, out, c);
  }
  return out;
}

}  // namespace jetfield
