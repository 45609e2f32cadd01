#pragma once

#include <cstdint>

#include "steinberg/characters.hpp"
#include "steinberg/group.hpp"
#include "steinberg/weight_function.hpp"

namespace steinberg {

/// Throws DomainError unless every support weight of c is dominant and in
/// the group's lattice.
void validate_class(const Group& g, const KElement& c);

/// Coordinates of a W-invariant character in the Weyl-module basis:
///   (M : Delta(lambda)) = sum_w (-1)^l(w) dim M_{w . lambda}.
/// Throws DomainError if chi is not W-invariant.
[[nodiscard]] KElement char_to_class(const Group& g, const Character& chi);

/// Same result by peeling: repeatedly subtract the Weyl character of a
/// highest support weight. Independent of the alternating sum above.
[[nodiscard]] KElement char_to_class_peeling(const Group& g, const Character& chi);

/// sum_lambda c(lambda) ch Delta(lambda).
[[nodiscard]] Character class_to_char(const Group& g, const KElement& c);

/// [Delta(mu) (x) M] in the Weyl-module basis from the weights of M alone:
///   coefficient of Delta(lambda) is sum_w (-1)^l(w) dim M_{w . lambda - mu}.
[[nodiscard]] KElement tensor_delta_expansion(const Group& g, const Weight& mu, const Character& chi);

/// The Steinberg-component equivalence F^r on classes: [Delta(lambda)] ->
/// [Delta(p^r . lambda)]. Throws ConfigError if (p^r - 1)rho is not in X.
[[nodiscard]] KElement steinberg_forward(const Group& g, const KElement& c, std::int64_t p,
                                         unsigned r = 1);

/// Inverse equivalence: keeps the terms Delta(p . lambda) and relabels them
/// Delta(lambda); other terms are dropped.
[[nodiscard]] KElement steinberg_inverse(const Group& g, const KElement& c, std::int64_t p);

/// (St (x) M : Delta(p . lambda)) = sum_w (-1)^l(w) dim M_{p (w . lambda)}.
[[nodiscard]] std::int64_t steinberg_delta_multiplicity(const Group& g, const Character& chi,
                                                        const Weight& lambda, std::int64_t p);

/// Class of the Frobenius contraction phi(M): the coefficient of
/// Delta(lambda) is steinberg_delta_multiplicity(chi, lambda, p).
[[nodiscard]] KElement frobenius_contract_class(const Group& g, const Character& chi, std::int64_t p);

/// Projection onto the linkage class of nu: keeps the Delta(lambda) with
/// lambda in W_p . nu.
[[nodiscard]] KElement pr_block(const Group& g, const KElement& c, const Weight& nu, std::int64_t p);

}  // namespace steinberg
