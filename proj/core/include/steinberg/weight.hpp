#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace steinberg {

/// Largest supported rank. Keeps full Weyl group enumeration feasible
/// (|W(E6)| = 51840) and lets weights live inline.
inline constexpr std::size_t kMaxRank = 6;

/// An integral weight in fundamental-weight coordinates: coordinate i is the
/// pairing with the i-th simple coroot. The same type is reused for integer
/// vectors in simple-root or simple-coroot coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank);
  Weight(std::initializer_list<std::int64_t> coords);
  static Weight from_span(std::span<const std::int64_t> coords);

  [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
  [[nodiscard]] std::span<const std::int64_t> coords() const noexcept {
    return {c_.data(), rank_};
  }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept { return c_[i]; }
  std::int64_t& operator[](std::size_t i) noexcept { return c_[i]; }

  Weight& operator+=(const Weight& o) noexcept;
  Weight& operator-=(const Weight& o) noexcept;
  Weight& operator*=(std::int64_t k) noexcept;

  friend Weight operator+(Weight a, const Weight& b) noexcept { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) noexcept { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) noexcept { return a *= k; }
  friend Weight operator-(Weight a) noexcept { return a *= -1; }

  // Unused trailing slots are always zero, so this is lexicographic order on
  // the coordinates for weights of equal rank.
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] std::string to_string() const;

 private:
  std::array<std::int64_t, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace steinberg

template <>
struct std::hash<steinberg::Weight> : steinberg::WeightHash {};
