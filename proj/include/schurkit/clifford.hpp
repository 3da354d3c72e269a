#pragma once

#include "schurkit/cohomology.hpp"
#include "schurkit/series.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// The Schur scalar product as a 2-cochain: pi(a, b) = delta_{a,b}.
Cochain schur_pairing();

/// Its convolutive inverse: pi(a, b) = (-1)^{|b|} delta_{a, b'}.
Cochain schur_pairing_inverse();

/// Circle (cliffordized) product
///   x o y = sum pi(x_(1) ox y_(1)) x_(2) . y_(2),
/// associative whenever the pairing is a 2-cocycle.
SymFunc circle_product(const SymFunc& f, const SymFunc& g, const Cochain& pairing);

enum class BasePairing { Schur, SchurInverse };
Cochain base_pairing(BasePairing base);

/// Circle product for the gauged pairing base * d(phi).
SymFunc gauged_circle_product(const SymFunc& f, const SymFunc& g, BasePairing base,
                              const Cochain& phi);

/// The same product computed through branching operators:
/// Phi^{-1}(Phi(f) o_base Phi(g)). Equality with the gauged pairing route is
/// a theorem and is exercised in the tests.
SymFunc gauged_circle_via_branch(const SymFunc& f, const SymFunc& g,
                                 BasePairing base, const Cochain& phi);

/// Newell-Littlewood product of universal-character labels:
/// sum over zeta of (s_{lambda/zeta}) . (s_{mu/zeta}). The sum is exactly
/// finite (zeta at most min weight); symplectic and orthogonal flavors agree
/// at this level and differ only in display brackets.
SymFunc nl_product(const Partition& lambda, const Partition& mu);

/// Reading of the repeated Sweedler index in the 7th and 8th variants: the
/// displayed text reuses the first inner-coproduct leg in both factors; the
/// alternative reading takes the second leg for the product. In the
/// power-sum presentation the inner coproduct is diagonal and both agree.
enum class SweedlerReading { RepeatedFirstLeg, SecondLeg };

/// The eight cliffordizations from the {outer,inner} coproduct and product
/// combinations, k = 1..8. Variant 1 is circle_product.
SymFunc variant_product(int k, const SymFunc& f, const SymFunc& g,
                        const Cochain& pairing,
                        SweedlerReading reading = SweedlerReading::RepeatedFirstLeg);

}  // namespace schurkit
