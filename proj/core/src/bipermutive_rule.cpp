#include "latca/bipermutive_rule.hpp"

#include <stdexcept>

namespace latca {

BipermutiveRule::BipermutiveRule(int diameter, TruthTable generator)
    : diameter_(diameter), generator_(std::move(generator)) {
  if (diameter < 2 || diameter > 8)
    throw std::invalid_argument("diameter must be in [2, 8]");
  if (generator_.arity() != diameter - 2)
    throw std::invalid_argument("generator arity must be diameter - 2");
}

TruthTable expand(const BipermutiveRule& rule) {
  const int d = rule.diameter();
  const TruthTable& g = rule.generator();
  TruthTable f(d);
  const std::uint32_t mid_mask = (1u << (d - 2)) - 1;
  for (std::uint32_t v = 0; v < f.size(); ++v) {
    const bool x1 = (v >> (d - 1)) & 1u;
    const bool xd = v & 1u;
    const std::uint32_t mid = (v >> 1) & mid_mask;
    f.set_bit(v, x1 ^ g.bit(mid) ^ xd);
  }
  return f;
}

BipermutiveRule extract_generator(const TruthTable& table) {
  const int d = table.arity();
  if (d < 2)
    throw std::invalid_argument("bipermutive rules need arity >= 2");
  const std::uint32_t top = 1u << (d - 1);
  for (std::uint32_t v = 0; v < table.size(); ++v)
    if (table.bit(v) == table.bit(v ^ top))
      throw std::domain_error("rule is not left-permutive (x1 side)");
  for (std::uint32_t v = 0; v < table.size(); ++v)
    if (table.bit(v) == table.bit(v ^ 1u))
      throw std::domain_error("rule is not right-permutive (xd side)");
  TruthTable g(d - 2);
  for (std::uint32_t m = 0; m < g.size(); ++m)
    g.set_bit(m, table.bit(m << 1));  // g(m) = f(0, m, 0)
  return BipermutiveRule(d, g);
}

}  // namespace latca
