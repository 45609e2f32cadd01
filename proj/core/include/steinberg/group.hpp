#pragma once

#include <cstdint>
#include <memory>

#include "steinberg/root_data.hpp"
#include "steinberg/weight_function.hpp"
#include "steinberg/weyl_group.hpp"

namespace steinberg {

/// A root system with its enumerated Weyl group and a choice of character
/// lattice. Cheap to copy; copies share immutable state and the Weyl
/// character cache.
class Group {
 public:
  Group(Series series, int rank, LatticeMode lattice = LatticeMode::simply_connected);
  Group(RootSystem roots, LatticeMode lattice = LatticeMode::simply_connected);

  [[nodiscard]] const RootSystem& roots() const noexcept;
  [[nodiscard]] const WeylGroup& weyl() const noexcept;
  [[nodiscard]] LatticeMode lattice() const noexcept { return lattice_; }
  [[nodiscard]] std::size_t rank() const noexcept { return roots().rank(); }

  /// Whether lambda belongs to X: always in simply-connected mode, ZR in
  /// adjoint mode. Throws DomainError on a rank mismatch.
  [[nodiscard]] bool in_lattice(const Weight& lambda) const;
  void require_in_lattice(const Weight& lambda) const;

  /// Throws ConfigError unless (p^r - 1)rho lies in X.
  void require_steinberg_weight(std::int64_t p, unsigned r = 1) const;

  /// Memoized character of Delta(lambda) for dominant lambda. The returned
  /// reference stays valid for the lifetime of every copy of this group.
  [[nodiscard]] const Character& weyl_character(const Weight& lambda) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  LatticeMode lattice_;
};

/// p^r with overflow detection (throws DomainError).
[[nodiscard]] std::int64_t checked_power(std::int64_t p, unsigned r);

}  // namespace steinberg
