#include "steinberg/grothendieck.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "steinberg/errors.hpp"
#include "steinberg/linkage.hpp"

namespace steinberg {

namespace {

/// Dominant lambda with w . lambda = nu for some w, or nothing when nu + rho
/// is singular.
std::optional<Weight> dot_dominant(const RootSystem& rs, const Weight& nu) {
  const Weight x = reduce_to_dominant(rs, nu + rs.rho()).dominant;
  for (std::int64_t c : x.coords())
    if (c == 0) return std::nullopt;
  return x - rs.rho();
}

/// sum_w (-1)^l(w) f(w . lambda)
template <class F>
std::int64_t alternating_sum(const Group& g, const Weight& lambda, F&& f) {
  std::int64_t s = 0;
  for (const WeylElement& w : g.weyl().elements()) {
    const std::int64_t v = f(dot_act(w, lambda));
    if (v != 0) s += w.sign() * v;
  }
  return s;
}

bool divisible(const Weight& w, std::int64_t p) {
  const auto c = w.coords();
  return std::all_of(c.begin(), c.end(), [p](std::int64_t x) { return x % p == 0; });
}

}  // namespace

void validate_class(const Group& g, const KElement& c) {
  for (const auto& [lambda, k] : c.terms()) {
    g.roots().check_rank(lambda);
    if (!is_dominant(lambda)) {
      throw DomainError("class term " + lambda.to_string() + " is not dominant");
    }
    g.require_in_lattice(lambda);
  }
}

KElement char_to_class(const Group& g, const Character& chi) {
  const RootSystem& rs = g.roots();
  require_w_invariant(rs, chi, "char_to_class");
  std::set<Weight> candidates;
  for (const auto& [nu, k] : chi.terms())
    if (auto lambda = dot_dominant(rs, nu)) candidates.insert(*lambda);

  KElement out;
  for (const Weight& lambda : candidates) {
    out.add(lambda, alternating_sum(g, lambda, [&](const Weight& w) { return chi(w); }));
  }
  return out;
}

KElement char_to_class_peeling(const Group& g, const Character& chi) {
  const RootSystem& rs = g.roots();
  require_w_invariant(rs, chi, "char_to_class_peeling");
  // <nu, 2 rho^vee> strictly increases along positive roots; on a W-invariant
  // support its maximum is attained only at dominant weights.
  Weight two_rho_vee(rs.rank());
  for (const Weight& c : rs.positive_coroots()) two_rho_vee += c;
  auto level = [&](const Weight& nu) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rs.rank(); ++i) s += two_rho_vee[i] * nu[i];
    return s;
  };

  KElement out;
  Character rest = chi;
  while (!rest.empty()) {
    auto top = rest.terms().begin();
    std::int64_t top_level = level(top->first);
    for (auto it = std::next(top); it != rest.terms().end(); ++it) {
      const std::int64_t l = level(it->first);
      if (l > top_level || (l == top_level && it->first > top->first)) {
        top = it;
        top_level = l;
      }
    }
    const Weight lambda = top->first;
    const std::int64_t k = top->second;
    if (!is_dominant(lambda)) throw DomainError("char_to_class_peeling: highest weight is not dominant");
    out.add(lambda, k);
    rest -= k * g.weyl_character(lambda);
  }
  return out;
}

Character class_to_char(const Group& g, const KElement& c) {
  validate_class(g, c);
  Character out;
  for (const auto& [lambda, k] : c.terms()) {
    for (const auto& [w, m] : g.weyl_character(lambda).terms()) out.add(w, k * m);
  }
  return out;
}

KElement tensor_delta_expansion(const Group& g, const Weight& mu, const Character& chi) {
  const RootSystem& rs = g.roots();
  rs.check_rank(mu);
  if (!is_dominant(mu)) throw DomainError("tensor_delta_expansion: " + mu.to_string() + " is not dominant");
  require_w_invariant(rs, chi, "tensor_delta_expansion");
  std::set<Weight> candidates;
  for (const auto& [nu, k] : chi.terms())
    if (auto lambda = dot_dominant(rs, nu + mu)) candidates.insert(*lambda);

  KElement out;
  for (const Weight& lambda : candidates) {
    out.add(lambda, alternating_sum(g, lambda, [&](const Weight& w) { return chi(w - mu); }));
  }
  return out;
}

KElement steinberg_forward(const Group& g, const KElement& c, std::int64_t p, unsigned r) {
  g.require_steinberg_weight(p, r);
  validate_class(g, c);
  const std::int64_t q = checked_power(p, r);
  KElement out;
  for (const auto& [lambda, k] : c.terms()) out.add(dot_multiply(q, lambda), k);
  return out;
}

KElement steinberg_inverse(const Group& g, const KElement& c, std::int64_t p) {
  if (p < 2) throw DomainError("p must be at least 2");
  validate_class(g, c);
  const Weight rho = g.roots().rho();
  KElement out;
  for (const auto& [nu, k] : c.terms()) {
    Weight x = nu + rho;
    if (!divisible(x, p)) continue;
    for (std::size_t i = 0; i < x.rank(); ++i) x[i] /= p;
    const Weight lambda = x - rho;
    if (g.in_lattice(lambda)) out.add(lambda, k);
  }
  return out;
}

std::int64_t steinberg_delta_multiplicity(const Group& g, const Character& chi, const Weight& lambda,
                                          std::int64_t p) {
  if (p < 2) throw DomainError("p must be at least 2");
  g.roots().check_rank(lambda);
  if (!is_dominant(lambda)) {
    throw DomainError("steinberg_delta_multiplicity: " + lambda.to_string() + " is not dominant");
  }
  require_w_invariant(g.roots(), chi, "steinberg_delta_multiplicity");
  return alternating_sum(g, lambda, [&](const Weight& w) { return chi(p * w); });
}

KElement frobenius_contract_class(const Group& g, const Character& chi, std::int64_t p) {
  if (p < 2) throw DomainError("p must be at least 2");
  const RootSystem& rs = g.roots();
  require_w_invariant(rs, chi, "frobenius_contract_class");
  std::set<Weight> candidates;
  for (const auto& [nu, k] : chi.terms()) {
    if (!divisible(nu, p)) continue;
    Weight q = nu;
    for (std::size_t i = 0; i < q.rank(); ++i) q[i] /= p;
    if (auto lambda = dot_dominant(rs, q)) candidates.insert(*lambda);
  }
  KElement out;
  for (const Weight& lambda : candidates) {
    out.add(lambda, alternating_sum(g, lambda, [&](const Weight& w) { return chi(p * w); }));
  }
  return out;
}

KElement pr_block(const Group& g, const KElement& c, const Weight& nu, std::int64_t p) {
  validate_class(g, c);
  KElement out;
  for (const auto& [lambda, k] : c.terms())
    if (linked(g, lambda, nu, p)) out.add(lambda, k);
  return out;
}

}  // namespace steinberg
