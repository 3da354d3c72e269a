#pragma once

#include "schurkit/characters.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// Inner (Kronecker) product, diagonal on power sums:
/// p_lambda * p_mu = delta_{lambda,mu} z_lambda p_lambda.
/// Routed through the power-sum basis; result in the Schur basis unless both
/// inputs are power sums.
SymFunc inner_product(const SymFunc& f, const SymFunc& g);

/// Inner coproduct, group-like on power sums: delta(p_lambda) =
/// p_lambda ox p_lambda. Power-sum input keeps power-sum slots; anything
/// else comes back in Schur slots.
TensorExp inner_coproduct(const SymFunc& f);

/// Applies the inner coproduct to one slot of a tensor.
TensorExp inner_coproduct_slot(const TensorExp& t, int slot);

/// Slotwise inner product of two tensors of equal arity.
TensorExp tensor_inner_mult(const TensorExp& a, const TensorExp& b);

/// Truncated inner unit: sum of h_n = s_(n) for n <= cap, cap-marked.
SymFunc inner_unit(int cap);

/// Inner counit: every power sum evaluates to 1. Requires an exact input;
/// a cap-marked truncation has no well-defined value.
Rat counit_inner(const SymFunc& f);

enum class PlethysmSide { Left, Right };

/// Power-sum plethysm: each p_m in the expansion of f becomes p_{n m}.
/// Left and right composition with p_n agree.
SymFunc plethysm_pn(const SymFunc& f, int n, PlethysmSide side = PlethysmSide::Left);

/// Kronecker coefficient g_{lambda,mu,nu} = (s_lambda | s_mu * s_nu).
long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu);

}  // namespace schurkit
