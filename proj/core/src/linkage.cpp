#include "steinberg/linkage.hpp"

#include <algorithm>
#include <map>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

void check_p(std::int64_t p) {
  if (p < 2) throw DomainError("p must be at least 2");
}

bool in_scaled_root_lattice(const RootSystem& rs, const Weight& d, std::int64_t p) {
  const Weight c = rs.root_coords_scaled(d);
  const std::int64_t den = rs.root_lattice_index() * p;
  return std::all_of(c.coords().begin(), c.coords().end(),
                     [den](std::int64_t x) { return x % den == 0; });
}

}  // namespace

const char* to_string(AlcoveStatus s) {
  switch (s) {
    case AlcoveStatus::interior: return "interior";
    case AlcoveStatus::wall: return "wall";
    case AlcoveStatus::outside: return "outside";
  }
  return "?";
}

AlcovePosition alcove_position(const Group& g, const Weight& lambda, std::int64_t p) {
  check_p(p);
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  AlcovePosition pos{lambda, {}, AlcoveStatus::interior};
  const Weight x = lambda + rs.rho();
  bool closure = true;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
    const std::int64_t v = rs.pairing_root(x, k);
    pos.wall_pairings.push_back(v);
    if (v < 0 || v > p) closure = false;
    if (v == 0 || v == p) pos.status = AlcoveStatus::wall;
  }
  if (!closure) pos.status = AlcoveStatus::outside;
  return pos;
}

bool linked(const Group& g, const Weight& lambda, const Weight& mu, std::int64_t p) {
  check_p(p);
  g.require_in_lattice(lambda);
  g.require_in_lattice(mu);
  const RootSystem& rs = g.roots();
  const Weight x = lambda + rs.rho();
  const Weight y = mu + rs.rho();
  for (const WeylElement& w : g.weyl().elements()) {
    if (in_scaled_root_lattice(rs, y - w.act(x), p)) return true;
  }
  return false;
}

Weight fundamental_alcove_rep(const Group& g, const Weight& lambda, std::int64_t p) {
  check_p(p);
  g.require_in_lattice(lambda);
  const RootSystem& rs = g.roots();
  const auto& roots = rs.positive_roots_fund();
  Weight x = lambda + rs.rho();
  // Each affine reflection strictly lowers (x, x), so this terminates.
  for (;;) {
    x = reduce_to_dominant(rs, x).dominant;
    std::size_t best = 0;
    std::int64_t best_pair = rs.pairing_root(x, 0);
    for (std::size_t k = 1; k < roots.size(); ++k) {
      const std::int64_t v = rs.pairing_root(x, k);
      if (v > best_pair) {
        best_pair = v;
        best = k;
      }
    }
    if (best_pair <= p) break;
    // Reflect in the hyperplane <x, alpha^vee> = p.
    x -= (best_pair - p) * roots[best];
  }
  return x - rs.rho();
}

bool is_special_point(const Group& g, const Weight& lambda, std::int64_t p) {
  check_p(p);
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  const Weight x = lambda + rs.rho();
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.pairing_root(x, k) % p != 0) return false;
  return true;
}

unsigned st_level(const Group& g, const Weight& lambda, std::int64_t p) {
  check_p(p);
  g.roots().check_rank(lambda);
  if (!is_dominant(lambda)) throw DomainError("st_level: " + lambda.to_string() + " is not dominant");
  const Weight rho = g.roots().rho();
  Weight x = lambda + rho;
  unsigned r = 0;
  for (;;) {
    const auto c = x.coords();
    if (!std::all_of(c.begin(), c.end(), [p](std::int64_t v) { return v % p == 0; })) break;
    Weight next = x;
    for (std::size_t i = 0; i < next.rank(); ++i) next[i] /= p;
    if (!g.in_lattice(next - rho)) break;
    x = next;
    ++r;
  }
  return r;
}

std::vector<Block> block_decompose(const Group& g, const KElement& c, std::int64_t p) {
  std::map<Weight, KElement> blocks;
  for (const auto& [lambda, k] : c.terms()) {
    blocks[fundamental_alcove_rep(g, lambda, p)].add(lambda, k);
  }
  std::vector<Block> out;
  out.reserve(blocks.size());
  for (auto& [rep, comp] : blocks) out.push_back({rep, std::move(comp)});
  return out;
}

}  // namespace steinberg
