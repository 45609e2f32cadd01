#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/group.hpp"
#include "steinberg/weight_function.hpp"

namespace steinberg {

enum class AlcoveStatus {
  interior,  ///< 0 < <lambda + rho, alpha^vee> < p for all alpha > 0
  wall,      ///< in the closure but on at least one wall
  outside,   ///< not in the closure of the bottom dominant alcove
};

const char* to_string(AlcoveStatus s);

/// Position of lambda relative to the bottom dominant alcove.
struct AlcovePosition {
  Weight weight;
  std::vector<std::int64_t> wall_pairings;  ///< <lambda + rho, alpha^vee> per positive root
  AlcoveStatus status = AlcoveStatus::outside;
};

[[nodiscard]] AlcovePosition alcove_position(const Group& g, const Weight& lambda, std::int64_t p);

/// mu in W_p . lambda, tested as: some w in W has
/// (mu + rho) - w(lambda + rho) in p ZR. Throws DomainError if either weight
/// is outside the group's lattice.
[[nodiscard]] bool linked(const Group& g, const Weight& lambda, const Weight& mu, std::int64_t p);

/// The unique weight in the closure of the bottom dominant alcove that is
/// linked to lambda. May lie on a wall.
[[nodiscard]] Weight fundamental_alcove_rep(const Group& g, const Weight& lambda, std::int64_t p);

/// Every <lambda + rho, alpha^vee> is divisible by p.
[[nodiscard]] bool is_special_point(const Group& g, const Weight& lambda, std::int64_t p);

/// Largest r with lambda = p^r . mu for a dominant mu in X.
[[nodiscard]] unsigned st_level(const Group& g, const Weight& lambda, std::int64_t p);

struct Block {
  Weight representative;  ///< fundamental_alcove_rep of every support weight
  KElement component;
};

/// Splits c by linkage class. Blocks are ordered by representative;
/// components sum to c.
[[nodiscard]] std::vector<Block> block_decompose(const Group& g, const KElement& c, std::int64_t p);

}  // namespace steinberg
