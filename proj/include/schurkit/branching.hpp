#pragma once

#include <optional>
#include <string>

#include "schurkit/cohomology.hpp"
#include "schurkit/series.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// Branching operator /Phi = (phi ox Id) o Delta for a normalized 1-cochain
/// phi. Fixes the unit, is linear, and lowers or preserves weight termwise.
/// Stored as the cochain; application is lazy and sparse.
struct BranchingOperator {
    Cochain phi;
    int cap = 0;  // weight bound the cochain was built for (display only)
};

BranchingOperator series_branch(SeriesId id, int cap);

/// /Phi(f) = sum_alpha phi(s_alpha) s_{lambda/alpha} on each term.
SymFunc apply_branch(const BranchingOperator& op, const SymFunc& f);

/// Operator built on the convolutive inverse cochain; composes with the
/// original to the identity.
BranchingOperator inverse_branch(const BranchingOperator& op);

/// phi-deformed outer product Phi^{-1}(M(Phi f ox Phi g)). Associative when
/// phi's induced 2-cochain is a cocycle.
SymFunc deformed_product(const Cochain& phi, const SymFunc& f, const SymFunc& g);

/// Deformed counit eps o Phi = phi.
Rat deformed_counit(const Cochain& phi, const SymFunc& f);

/// Which product law a series branching satisfies: the plain homomorphism
/// law for group-like series, or the compensated sums over an auxiliary
/// partition zeta (plain for B,D,F,H; antipode-signed for A,C,E,G).
enum class BranchLaw { Homomorphism, CompensatedSum, CompensatedSignedSum };

struct GroupLikeReport {
    SeriesId id;
    BranchLaw law;
    int max_weight = 0;
    bool holds = false;
    std::optional<std::pair<Partition, Partition>> witness;
};

GroupLikeReport check_group_like(SeriesId id, int max_weight);

}  // namespace schurkit
