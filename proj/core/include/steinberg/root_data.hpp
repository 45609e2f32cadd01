#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/weight.hpp"

namespace steinberg {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);
/// Parses "A".."G" (case-insensitive). Throws ConfigError.
Series parse_series(const std::string& s);

/// Which character lattice X the group has.
enum class LatticeMode {
  simply_connected,  ///< X is the full weight lattice
  adjoint,           ///< X is the root lattice ZR
};

/// Square integer matrix of size at most kMaxRank.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {}
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) noexcept { return a_[r * kMaxRank + c]; }
  [[nodiscard]] std::int64_t operator()(std::size_t r, std::size_t c) const noexcept {
    return a_[r * kMaxRank + c];
  }

  [[nodiscard]] Weight apply(const Weight& v) const noexcept;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) noexcept;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  std::array<std::int64_t, kMaxRank * kMaxRank> a_{};
  std::uint8_t n_ = 0;
};

/// Immutable root datum of an irreducible reduced root system.
///
/// Conventions: Bourbaki numbering of simple roots; cartan(i, j) is
/// <alpha_j, alpha_i^vee>, so the simple root alpha_j has fundamental-weight
/// coordinates given by column j.
class RootSystem {
 public:
  /// Throws ConfigError for an invalid (series, rank) pair or rank > 6.
  static RootSystem build(Series series, int rank);

  [[nodiscard]] Series series() const noexcept { return series_; }
  [[nodiscard]] std::size_t rank() const noexcept { return cartan_.size(); }
  [[nodiscard]] std::string name() const;
  [[nodiscard]] const IntMatrix& cartan() const noexcept { return cartan_; }

  /// Positive roots in simple-root coordinates, ordered by height then
  /// lexicographically. Simple roots come first.
  [[nodiscard]] const std::vector<Weight>& positive_roots() const noexcept { return pos_roots_; }
  /// The same roots in fundamental-weight coordinates.
  [[nodiscard]] const std::vector<Weight>& positive_roots_fund() const noexcept {
    return pos_roots_fund_;
  }
  /// Coroots of the positive roots in simple-coroot coordinates.
  [[nodiscard]] const std::vector<Weight>& positive_coroots() const noexcept {
    return pos_coroots_;
  }
  [[nodiscard]] std::size_t num_positive_roots() const noexcept { return pos_roots_.size(); }

  [[nodiscard]] Weight zero() const { return Weight(rank()); }
  /// Half the sum of positive roots: all fundamental coordinates equal 1.
  [[nodiscard]] Weight rho() const;
  /// alpha_i in fundamental-weight coordinates.
  [[nodiscard]] Weight simple_root(std::size_t i) const;

  /// <lambda, alpha_i^vee> for the i-th simple coroot.
  [[nodiscard]] std::int64_t pairing_simple(const Weight& lambda, std::size_t i) const;
  /// <lambda, beta^vee> for the k-th positive root beta.
  [[nodiscard]] std::int64_t pairing_root(const Weight& lambda, std::size_t k) const;

  /// Expresses lambda in simple-root coordinates scaled by root_lattice_index(),
  /// i.e. returns index * C^{-1} lambda, always integral.
  [[nodiscard]] Weight root_coords_scaled(const Weight& lambda) const;
  [[nodiscard]] std::int64_t root_lattice_index() const noexcept { return inv_den_; }
  [[nodiscard]] bool in_root_lattice(const Weight& lambda) const;

  /// Integer multiple form_scale() * (lambda, mu) of the W-invariant form
  /// normalized so that short roots have (alpha, alpha) = 2.
  [[nodiscard]] std::int64_t form(const Weight& lambda, const Weight& mu) const;
  [[nodiscard]] std::int64_t form_scale() const noexcept { return inv_den_; }
  /// (alpha_i, alpha_i) / 2 in the same normalization; 1 for short roots.
  [[nodiscard]] std::int64_t half_length(std::size_t i) const { return sym_[i]; }

  /// Simple reflection s_i in the linear action.
  [[nodiscard]] Weight reflect(const Weight& lambda, std::size_t i) const;
  [[nodiscard]] IntMatrix reflection_matrix(std::size_t i) const;

  /// Throws DomainError unless lambda has this system's rank.
  void check_rank(const Weight& lambda) const;

 private:
  RootSystem() = default;

  Series series_ = Series::A;
  IntMatrix cartan_;
  std::vector<Weight> pos_roots_;
  std::vector<Weight> pos_roots_fund_;
  std::vector<Weight> pos_coroots_;
  std::vector<std::int64_t> sym_;
  IntMatrix inv_num_;
  std::int64_t inv_den_ = 1;
};

/// Cartan matrix of the given type, cartan(i, j) = <alpha_j, alpha_i^vee>.
IntMatrix cartan_matrix(Series series, int rank);

inline RootSystem build_root_system(Series series, int rank) {
  return RootSystem::build(series, rank);
}

[[nodiscard]] bool is_dominant(const Weight& lambda);
/// 0 <= <lambda, alpha_i^vee> < p for every simple coroot.
[[nodiscard]] bool is_restricted(const Weight& lambda, std::int64_t p);

/// n . lambda = n(lambda + rho) - rho.
[[nodiscard]] Weight dot_multiply(std::int64_t n, const Weight& lambda);

struct SteinbergSplit {
  Weight restricted;  ///< lambda^0 in X_1
  Weight quotient;    ///< mu in X^+
};
/// Writes a dominant lambda as lambda^0 + p * mu. Throws DomainError if
/// lambda is not dominant or p < 2.
[[nodiscard]] SteinbergSplit steinberg_split(const Weight& lambda, std::int64_t p);

/// Lattice-mode admissibility: in adjoint mode (p-1)rho must lie in ZR.
/// Throws ConfigError otherwise.
void check_lattice_config(const RootSystem& rs, LatticeMode mode, std::int64_t p);

}  // namespace steinberg
