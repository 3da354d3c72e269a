#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "schurkit/partition.hpp"

namespace schurkit {

/// Integer expansion in the Schur basis, indexed canonically.
using IntExpansion = std::map<Partition, long long, PartitionLess>;

/// Schur expansion of s_a * s_b via Littlewood-Richardson tableau
/// enumeration. Memoized; symmetric in its arguments.
IntExpansion lr_mult(const Partition& a, const Partition& b);

/// Schur expansion of the skew function s_{outer/inner}; empty when inner
/// does not fit inside outer.
IntExpansion lr_skew(const Partition& outer, const Partition& inner);

/// C^nu_{lambda,mu}: multiplicity of s_nu in s_lambda * s_mu. Zero unless
/// |nu| = |lambda| + |mu|.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

/// Comultiplication table of s_lambda: triples (first, second, coefficient)
/// with coefficient C^lambda_{first,second}, covering every split. Memoized.
using CoproductTable = std::vector<std::tuple<Partition, Partition, long long>>;
const CoproductTable& coproduct_table(const Partition& lambda);

}  // namespace schurkit
