#include "steinberg/characters.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "steinberg/errors.hpp"

namespace steinberg {

namespace detail {

namespace {

std::int64_t height_scaled(const RootSystem& rs, const Weight& beta) {
  const Weight c = rs.root_coords_scaled(beta);
  std::int64_t h = 0;
  for (std::int64_t x : c.coords()) h += x;
  return h;
}

}  // namespace

Character freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  const auto& roots = rs.positive_roots_fund();
  const Weight rho = rs.rho();

  // Dominant weights below lambda. Adjacent dominant weights in this poset
  // differ by a positive root, so a search along positive roots finds all.
  std::vector<Weight> dominant{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t i = 0; i < dominant.size(); ++i) {
    for (const Weight& alpha : roots) {
      Weight mu = dominant[i] - alpha;
      if (is_dominant(mu) && seen.insert(mu).second) dominant.push_back(mu);
    }
  }
  std::vector<std::pair<std::int64_t, Weight>> order;
  order.reserve(dominant.size());
  for (const Weight& mu : dominant) order.emplace_back(height_scaled(rs, lambda - mu), mu);
  std::sort(order.begin(), order.end());

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.reserve(order.size());
  auto lookup = [&](const Weight& nu) -> std::int64_t {
    auto it = mult.find(reduce_to_dominant(rs, nu).dominant);
    return it == mult.end() ? 0 : it->second;
  };

  const Weight top = lambda + rho;
  const std::int64_t top_norm = rs.form(top, top);
  for (const auto& [h, mu] : order) {
    if (h == 0) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const Weight& alpha : roots) {
      Weight nu = mu + alpha;
      for (;;) {
        const std::int64_t m = lookup(nu);
        if (m == 0) break;
        sum += rs.form(nu, alpha) * m;
        nu += alpha;
      }
    }
    const Weight shifted = mu + rho;
    const std::int64_t denom = top_norm - rs.form(shifted, shifted);
    if (denom <= 0 || (2 * sum) % denom != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    }
    mult[mu] = 2 * sum / denom;
  }

  Character chi;
  std::vector<Weight> orbit;
  std::unordered_set<Weight, WeightHash> in_orbit;
  for (const auto& [mu, m] : mult) {
    if (m == 0) continue;
    orbit.assign(1, mu);
    in_orbit.clear();
    in_orbit.insert(mu);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (orbit[k][i] == 0) continue;
        Weight img = rs.reflect(orbit[k], i);
        if (in_orbit.insert(img).second) orbit.push_back(img);
      }
    }
    for (const Weight& w : orbit) chi.add(w, m);
  }
  return chi;
}

}  // namespace detail

Character weyl_character(const Group& g, const Weight& lambda) {
  return g.weyl_character(lambda);
}

Character tensor(const Character& chi1, const Character& chi2) {
  Character out;
  for (const auto& [a, x] : chi1.terms())
    for (const auto& [b, y] : chi2.terms()) out.add(a + b, x * y);
  return out;
}

Character frobenius_twist(const Character& chi, unsigned r, std::int64_t p) {
  if (r == 0) return chi;
  const std::int64_t q = checked_power(p, r);
  Character out;
  for (const auto& [w, k] : chi.terms()) out.add(q * w, k);
  return out;
}

Character steinberg_char(const Group& g, std::int64_t p, unsigned r) {
  if (r == 0) throw DomainError("steinberg_char needs r >= 1");
  g.require_steinberg_weight(p, r);
  return g.weyl_character((checked_power(p, r) - 1) * g.roots().rho());
}

Character euler_characteristic(const Group& g, const Weight& lambda) {
  const RootSystem& rs = g.roots();
  rs.check_rank(lambda);
  const auto [x, sign] = reduce_to_dominant(rs, lambda + rs.rho());
  for (std::int64_t c : x.coords())
    if (c == 0) return {};
  Character chi = g.weyl_character(x - rs.rho());
  if (sign < 0) chi *= -1;
  return chi;
}

Character contract_weights(const Character& chi, std::int64_t p) {
  if (p < 2) throw DomainError("contract_weights needs p >= 2");
  Character out;
  for (const auto& [w, k] : chi.terms()) {
    const auto c = w.coords();
    if (!std::all_of(c.begin(), c.end(), [p](std::int64_t x) { return x % p == 0; })) continue;
    Weight q = w;
    for (std::size_t i = 0; i < q.rank(); ++i) q[i] /= p;
    out.add(q, k);
  }
  return out;
}

bool is_w_invariant(const RootSystem& rs, const Character& chi) {
  for (const auto& [w, k] : chi.terms()) {
    if (w.rank() != rs.rank()) return false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (w[i] != 0 && chi(rs.reflect(w, i)) != k) return false;
    }
  }
  return true;
}

void require_w_invariant(const RootSystem& rs, const Character& chi, const char* op) {
  if (!is_w_invariant(rs, chi)) {
    throw DomainError(std::string(op) + ": character is not W-invariant");
  }
}

}  // namespace steinberg
