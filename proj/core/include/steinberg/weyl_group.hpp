#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "steinberg/root_data.hpp"

namespace steinberg {

/// An element of the finite Weyl group, stored as a reduced word together
/// with its matrix on fundamental-weight coordinates.
struct WeylElement {
  std::vector<std::uint8_t> word;  ///< reduced expression s_{word[0]} ... s_{word[k-1]}
  IntMatrix matrix;
  std::size_t length = 0;

  [[nodiscard]] int sign() const noexcept { return length % 2 == 0 ? 1 : -1; }
  [[nodiscard]] Weight act(const Weight& lambda) const { return matrix.apply(lambda); }
};

/// The fully enumerated Weyl group of a root system.
class WeylGroup {
 public:
  /// Breadth-first closure from the identity under left multiplication by
  /// simple reflections; BFS depth is the length.
  static WeylGroup generate(const RootSystem& rs);

  [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
  [[nodiscard]] const std::vector<WeylElement>& elements() const noexcept { return elements_; }
  [[nodiscard]] const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  [[nodiscard]] const WeylElement& identity() const { return elements_.front(); }
  [[nodiscard]] const WeylElement& longest() const { return elements_[longest_]; }
  [[nodiscard]] std::size_t longest_index() const noexcept { return longest_; }

  /// Index of the element with the given matrix; throws DomainError if absent.
  [[nodiscard]] std::size_t find(const IntMatrix& m) const;

  struct DominantRep {
    std::size_t element;  ///< index into elements()
    Weight weight;        ///< elements()[element].act(lambda)
  };
  /// Some w with w(lambda) dominant, and that dominant weight.
  [[nodiscard]] DominantRep dominant_representative(const Weight& lambda) const;

 private:
  struct MatrixHash {
    std::size_t operator()(const IntMatrix& m) const noexcept { return m.hash(); }
  };

  std::vector<IntMatrix> gens_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, std::size_t, MatrixHash> index_;
  std::size_t longest_ = 0;
};

/// Linear action w(lambda).
[[nodiscard]] inline Weight act(const WeylElement& w, const Weight& lambda) { return w.act(lambda); }
/// Dot action w . lambda = w(lambda + rho) - rho.
[[nodiscard]] Weight dot_act(const WeylElement& w, const Weight& lambda);

/// Result of moving a weight into the dominant chamber by simple reflections.
struct ChamberReduction {
  Weight dominant;
  int sign;  ///< (-1)^l(w) for the w used
};
/// Dominant weight in the W-orbit of lambda (linear action), without a
/// group lookup. Cheap; used on hot paths.
[[nodiscard]] ChamberReduction reduce_to_dominant(const RootSystem& rs, Weight lambda);

/// Whether lambda + rho lies on a reflecting hyperplane, i.e. some
/// <lambda + rho, alpha^vee> vanishes.
[[nodiscard]] bool is_dot_singular(const RootSystem& rs, const Weight& lambda);

}  // namespace steinberg
