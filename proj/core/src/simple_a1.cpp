#include "steinberg/simple_a1.hpp"

#include "steinberg/characters.hpp"
#include "steinberg/errors.hpp"

namespace steinberg {

namespace {

void require_a1(const Group& g, const char* op) {
  if (g.roots().series() != Series::A || g.rank() != 1) {
    throw DomainError(std::string(op) + " is only available in type A1, not " + g.roots().name());
  }
}

}  // namespace

Weight DigitDecomposition::reassemble(std::int64_t p) const {
  Weight out = digits.empty() ? Weight(1) : Weight(digits.front().rank());
  std::int64_t scale = 1;
  for (const Weight& d : digits) {
    out += scale * d;
    scale *= p;
  }
  return out;
}

DigitDecomposition base_p_digits(const Weight& lambda, std::int64_t p) {
  DigitDecomposition out;
  Weight rest = lambda;
  do {
    const SteinbergSplit s = steinberg_split(rest, p);
    out.digits.push_back(s.restricted);
    rest = s.quotient;
  } while (!rest.is_zero());
  return out;
}

Character simple_character_a1(const Group& g, const Weight& lambda, std::int64_t p) {
  require_a1(g, "simple_character_a1");
  g.roots().check_rank(lambda);
  if (!is_dominant(lambda)) throw DomainError("simple_character_a1: " + lambda.to_string() + " is not dominant");
  const DigitDecomposition d = base_p_digits(lambda, p);
  Character chi = Character::monomial(g.roots().zero());
  for (std::size_t j = 0; j < d.digits.size(); ++j) {
    chi = tensor(chi, frobenius_twist(g.weyl_character(d.digits[j]), static_cast<unsigned>(j), p));
  }
  return chi;
}

SimpleClass decompose_in_simple_basis_a1(const Group& g, const Character& chi, std::int64_t p) {
  require_a1(g, "decompose_in_simple_basis_a1");
  require_w_invariant(g.roots(), chi, "decompose_in_simple_basis_a1");
  SimpleClass out;
  Character rest = chi;
  while (!rest.empty()) {
    auto top = rest.terms().begin();
    for (auto it = std::next(top); it != rest.terms().end(); ++it)
      if (it->first > top->first) top = it;
    const Weight lambda = top->first;
    const std::int64_t k = top->second;
    out.add(lambda, k);
    rest -= k * simple_character_a1(g, lambda, p);
  }
  return out;
}

}  // namespace steinberg
