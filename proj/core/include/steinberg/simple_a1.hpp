#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/group.hpp"
#include "steinberg/weight_function.hpp"

namespace steinberg {

struct SimpleBasisTag {};
/// Class written in the basis of simple modules: lambda -> [M : L(lambda)].
using SimpleClass = FiniteSupport<SimpleBasisTag>;

/// Base-p digits lambda = sum_j digits[j] p^j, each digit restricted.
struct DigitDecomposition {
  std::vector<Weight> digits;

  [[nodiscard]] Weight reassemble(std::int64_t p) const;
};

[[nodiscard]] DigitDecomposition base_p_digits(const Weight& lambda, std::int64_t p);

/// ch L(lambda) in type A1 by Steinberg's tensor product theorem: restricted
/// simples are Weyl modules, and L(lambda) = (x)_j L(lambda_j)^(j).
/// Throws DomainError unless the group is A1 and lambda is dominant.
[[nodiscard]] Character simple_character_a1(const Group& g, const Weight& lambda, std::int64_t p);

/// Coefficients of chi in the simple basis, peeling off the lexicographically
/// largest support weight each step. For chi = ch Delta(mu) these are the
/// decomposition numbers [Delta(mu) : L(lambda)].
[[nodiscard]] SimpleClass decompose_in_simple_basis_a1(const Group& g, const Character& chi,
                                                       std::int64_t p);

}  // namespace steinberg
