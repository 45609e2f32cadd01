#pragma once

#include <cstdint>

#include "steinberg/group.hpp"
#include "steinberg/weight_function.hpp"

namespace steinberg {

/// Character of the Weyl module Delta(lambda) (equivalently of the induced
/// module nabla(lambda)). Dominant multiplicities come from Freudenthal's
/// recursion and are then spread over W-orbits. Throws DomainError for
/// non-dominant lambda.
[[nodiscard]] Character weyl_character(const Group& g, const Weight& lambda);

/// Dimension of Delta(lambda) from the multiplicities (sum over the support).
[[nodiscard]] inline std::int64_t dimension(const Character& chi) { return chi.total(); }

/// Convolution: (chi1 * chi2)(nu) = sum_lambda chi1(lambda) chi2(nu - lambda).
[[nodiscard]] Character tensor(const Character& chi1, const Character& chi2);

/// r-th Frobenius twist: dilates every weight by p^r.
[[nodiscard]] Character frobenius_twist(const Character& chi, unsigned r, std::int64_t p);

/// Character of St_r = L((p^r - 1)rho) = Delta((p^r - 1)rho), r >= 1.
/// Throws ConfigError if (p^r - 1)rho is outside the group's lattice.
[[nodiscard]] Character steinberg_char(const Group& g, std::int64_t p, unsigned r = 1);

/// sum_j (-1)^j ch H^j(lambda): (-1)^l(w) ch Delta(w . lambda) when some
/// w . lambda is dominant, zero when lambda + rho is singular.
[[nodiscard]] Character euler_characteristic(const Group& g, const Weight& lambda);

/// Keeps the weights divisible by p and divides them by p:
/// result(lambda) = chi(p lambda).
[[nodiscard]] Character contract_weights(const Character& chi, std::int64_t p);

/// Multiplicity constant on W-orbits. Checked via the simple reflections.
[[nodiscard]] bool is_w_invariant(const RootSystem& rs, const Character& chi);

/// Throws DomainError unless chi is W-invariant.
void require_w_invariant(const RootSystem& rs, const Character& chi, const char* op);

}  // namespace steinberg

namespace steinberg::detail {
/// Uncached Freudenthal computation behind Group::weyl_character.
[[nodiscard]] Character freudenthal_character(const RootSystem& rs, const Weight& lambda);
}  // namespace steinberg::detail
