#include "steinberg/group.hpp"

#include <limits>
#include <mutex>
#include <unordered_map>

#include "steinberg/characters.hpp"
#include "steinberg/errors.hpp"

namespace steinberg {

struct Group::State {
  explicit State(RootSystem r) : roots(std::move(r)), weyl(WeylGroup::generate(roots)) {}

  RootSystem roots;
  WeylGroup weyl;
  std::mutex cache_mutex;
  std::unordered_map<Weight, Character, WeightHash> cache;
};

Group::Group(Series series, int rank, LatticeMode lattice)
    : Group(RootSystem::build(series, rank), lattice) {}

Group::Group(RootSystem roots, LatticeMode lattice)
    : state_(std::make_shared<State>(std::move(roots))), lattice_(lattice) {}

const RootSystem& Group::roots() const noexcept { return state_->roots; }
const WeylGroup& Group::weyl() const noexcept { return state_->weyl; }

bool Group::in_lattice(const Weight& lambda) const {
  roots().check_rank(lambda);
  return lattice_ == LatticeMode::simply_connected || roots().in_root_lattice(lambda);
}

void Group::require_in_lattice(const Weight& lambda) const {
  if (!in_lattice(lambda)) {
    throw DomainError("weight " + lambda.to_string() + " is not in the root lattice (adjoint mode)");
  }
}

void Group::require_steinberg_weight(std::int64_t p, unsigned r) const {
  if (p < 2) throw ConfigError("p must be at least 2");
  const Weight st = (checked_power(p, r) - 1) * roots().rho();
  if (!in_lattice(st)) {
    throw ConfigError("(p^r-1)rho = " + st.to_string() + " is not in the root lattice of adjoint " +
                      roots().name());
  }
}

const Character& Group::weyl_character(const Weight& lambda) const {
  roots().check_rank(lambda);
  if (!is_dominant(lambda)) {
    throw DomainError("weyl_character: " + lambda.to_string() + " is not dominant");
  }
  {
    std::lock_guard lock(state_->cache_mutex);
    if (auto it = state_->cache.find(lambda); it != state_->cache.end()) return it->second;
  }
  Character chi = detail::freudenthal_character(roots(), lambda);
  std::lock_guard lock(state_->cache_mutex);
  return state_->cache.try_emplace(lambda, std::move(chi)).first->second;
}

std::int64_t checked_power(std::int64_t p, unsigned r) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < r; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / p) {
      throw DomainError("p^r overflows 64-bit arithmetic");
    }
    out *= p;
  }
  return out;
}

}  // namespace steinberg
