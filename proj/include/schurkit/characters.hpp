#pragma once

#include "schurkit/partition.hpp"

namespace schurkit {

/// Irreducible symmetric-group character chi^lambda_mu, computed by the
/// Murnaghan-Nakayama border-strip recursion on beta numbers. Zero when the
/// weights differ. Memoized.
long long sn_character(const Partition& lambda, const Partition& mu);

}  // namespace schurkit
