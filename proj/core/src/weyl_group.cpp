#include "steinberg/weyl_group.hpp"

#include "steinberg/errors.hpp"

namespace steinberg {

WeylGroup WeylGroup::generate(const RootSystem& rs) {
  WeylGroup g;
  const std::size_t n = rs.rank();
  if (n > kMaxRank) throw ConfigError("Weyl group enumeration is capped at rank 6");

  for (std::size_t i = 0; i < n; ++i) g.gens_.push_back(rs.reflection_matrix(i));

  g.elements_.push_back({{}, IntMatrix::identity(n), 0});
  g.index_.emplace(g.elements_.back().matrix, 0);
  std::size_t level_begin = 0;
  while (level_begin < g.elements_.size()) {
    const std::size_t level_end = g.elements_.size();
    for (std::size_t e = level_begin; e < level_end; ++e) {
      for (std::size_t i = 0; i < n; ++i) {
        IntMatrix m = g.gens_[i] * g.elements_[e].matrix;
        if (g.index_.contains(m)) continue;
        WeylElement w;
        w.word.reserve(g.elements_[e].word.size() + 1);
        w.word.push_back(static_cast<std::uint8_t>(i));
        w.word.insert(w.word.end(), g.elements_[e].word.begin(), g.elements_[e].word.end());
        w.length = g.elements_[e].length + 1;
        w.matrix = m;
        g.index_.emplace(std::move(m), g.elements_.size());
        g.elements_.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  g.longest_ = g.elements_.size() - 1;
  return g;
}

std::size_t WeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw DomainError("matrix is not an element of the Weyl group");
  return it->second;
}

WeylGroup::DominantRep WeylGroup::dominant_representative(const Weight& lambda) const {
  const std::size_t n = gens_.size();
  if (lambda.rank() != n) throw DomainError("weight " + lambda.to_string() + " has the wrong rank");
  IntMatrix m = IntMatrix::identity(n);
  Weight x = lambda;
  for (;;) {
    std::size_t i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) break;
    x = gens_[i].apply(x);
    m = gens_[i] * m;
  }
  return {find(m), x};
}

Weight dot_act(const WeylElement& w, const Weight& lambda) {
  Weight rho(lambda.rank());
  for (std::size_t i = 0; i < lambda.rank(); ++i) rho[i] = 1;
  return w.act(lambda + rho) - rho;
}

ChamberReduction reduce_to_dominant(const RootSystem& rs, Weight lambda) {
  const std::size_t n = rs.rank();
  int sign = 1;
  for (;;) {
    std::size_t i = 0;
    while (i < n && lambda[i] >= 0) ++i;
    if (i == n) return {lambda, sign};
    lambda = rs.reflect(lambda, i);
    sign = -sign;
  }
}

bool is_dot_singular(const RootSystem& rs, const Weight& lambda) {
  const Weight d = reduce_to_dominant(rs, lambda + rs.rho()).dominant;
  for (std::int64_t c : d.coords())
    if (c == 0) return true;
  return false;
}

}  // namespace steinberg
