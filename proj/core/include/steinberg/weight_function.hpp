#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "steinberg/weight.hpp"

namespace steinberg {

/// A finitely supported function from weights to integers. Zero values are
/// never stored, so equality is structural.
///
/// Instantiated twice: as a formal character (element of Z[X]) and as a
/// Grothendieck-group class in the Weyl-module basis. The tag keeps the two
/// from being mixed up by accident.
template <class Tag>
class FiniteSupport {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;
  using Term = std::pair<Weight, std::int64_t>;

  FiniteSupport() = default;
  FiniteSupport(std::initializer_list<Term> terms) {
    for (const auto& [w, k] : terms) add(w, k);
  }

  static FiniteSupport monomial(const Weight& w, std::int64_t k = 1) {
    FiniteSupport f;
    f.add(w, k);
    return f;
  }

  [[nodiscard]] std::int64_t operator()(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Weight& w, std::int64_t k) {
    if (k == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, k);
    if (!inserted && (it->second += k) == 0) terms_.erase(it);
  }

  [[nodiscard]] const Map& terms() const noexcept { return terms_; }
  [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  /// Sum of all values; for a module character this is its dimension.
  [[nodiscard]] std::int64_t total() const {
    std::int64_t s = 0;
    for (const auto& [w, k] : terms_) s += k;
    return s;
  }

  /// Terms in lexicographic order of the weight coordinates.
  [[nodiscard]] std::vector<Term> sorted() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
  }

  FiniteSupport& operator+=(const FiniteSupport& o) {
    for (const auto& [w, k] : o.terms_) add(w, k);
    return *this;
  }
  FiniteSupport& operator-=(const FiniteSupport& o) {
    for (const auto& [w, k] : o.terms_) add(w, -k);
    return *this;
  }
  FiniteSupport& operator*=(std::int64_t s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, k] : terms_) k *= s;
    return *this;
  }

  friend FiniteSupport operator+(FiniteSupport a, const FiniteSupport& b) { return a += b; }
  friend FiniteSupport operator-(FiniteSupport a, const FiniteSupport& b) { return a -= b; }
  friend FiniteSupport operator*(std::int64_t s, FiniteSupport a) { return a *= s; }
  friend bool operator==(const FiniteSupport& a, const FiniteSupport& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Map terms_;
};

struct CharacterTag {};
struct DeltaBasisTag {};

/// Element of Z[X]: weight -> multiplicity. Signed values allowed.
using Character = FiniteSupport<CharacterTag>;

/// Element of the Grothendieck group written in the Weyl-module basis:
/// dominant weight lambda -> coefficient of [Delta(lambda)].
using KElement = FiniteSupport<DeltaBasisTag>;

}  // namespace steinberg
