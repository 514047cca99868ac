#pragma once

#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace jetfield {

inline constexpr double kPi = std::numbers::pi;

/// Thrown on every contract violation (bad input, degenerate data, ...).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(msg);
}

// ---------------------------------------------------------------------------
// Packed antisymmetric index pairs: (i,j) with i<j stored in row-major upper
// triangle order. Access with i>j flips sign, i==j reads as zero.

inline constexpr int pair_count(int n) { return n * (n - 1) / 2; }

inline constexpr int pair_slot(int i, int j, int n) {
  // requires i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

struct SignedSlot {
  int slot;
  double sign;  // +1, -1, or 0 on the diagonal
};

inline constexpr SignedSlot pair_access(int i, int j, int n) {
  if (i < j) return {pair_slot(i, j, n), 1.0};
  if (i > j) return {pair_slot(j, i, n), -1.0};
  return {0, 0.0};
}

// ---------------------------------------------------------------------------
// Seeded deterministic RNG. mt19937_64 output is fully specified by the
// standard; doubles are built from raw bits so streams are identical on
// every platform and toolchain.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * uniform() - 1.0; }

  std::uint64_t bits() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------------------
// Levi-Civita permutation symbol in three indices, eps(0,1,2) = +1.

inline constexpr double levi_civita3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0.0;
  // even permutations of (0,1,2)
  if ((a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0)) return 1.0;
  return -1.0;
}

}  // namespace jetfield
