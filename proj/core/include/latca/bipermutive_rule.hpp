#pragma once

#include "latca/truth_table.hpp"

namespace latca {

/// A bipermutive local rule of diameter d, stored as its generating
/// function: f(x1,...,xd) = x1 ^ g(x2,...,x_{d-1}) ^ xd. The generator g
/// has d-2 variables; for d = 2 it is a single constant bit.
class BipermutiveRule {
 public:
  BipermutiveRule(int diameter, TruthTable generator);

  int diameter() const noexcept { return diameter_; }
  const TruthTable& generator() const noexcept { return generator_; }

  friend bool operator==(const BipermutiveRule&, const BipermutiveRule&) =
      default;

 private:
  int diameter_;
  TruthTable generator_;
};

/// Tabulates f(x1,...,xd) = x1 ^ g(x2,...,x_{d-1}) ^ xd. The result is
/// always bipermutive.
TruthTable expand(const BipermutiveRule& rule);

/// Recovers the generator of a bipermutive table via g(m) = f(0,m,0).
/// Throws std::domain_error naming the violated permutivity side if the
/// table is not bipermutive.
BipermutiveRule extract_generator(const TruthTable& table);

}  // namespace latca
