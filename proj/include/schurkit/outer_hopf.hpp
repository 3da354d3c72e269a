#pragma once

#include <string>
#include <vector>

#include "schurkit/lr.hpp"
#include "schurkit/symfunc.hpp"

namespace schurkit {

/// Outer (pointwise) product. Littlewood-Richardson structure constants in
/// the Schur basis; multiplicative bases (h, e, p) multiply by part
/// concatenation. Result is in the Schur basis unless both inputs share a
/// multiplicative basis. Caps propagate as the minimum.
SymFunc outer_product(const SymFunc& f, const SymFunc& g);

/// Outer coproduct. On Schur terms Delta(s_lambda) = sum over sub-diagrams
/// alpha of s_{lambda/alpha} ox s_alpha; power-sum input expands the
/// primitive rule Delta(p_n) = p_n ox 1 + 1 ox p_n multiplicatively.
TensorExp outer_coproduct(const SymFunc& f);

/// Applies the outer coproduct to one slot of a tensor, raising the arity.
TensorExp coproduct_slot(const TensorExp& t, int slot);

/// Slotwise outer product of two tensors of equal arity.
TensorExp tensor_outer_mult(const TensorExp& a, const TensorExp& b);

/// Skew: f / g, the adjoint of outer multiplication by g.
SymFunc skew(const SymFunc& f, const SymFunc& by);

/// Counit of the outer coproduct: the coefficient of the empty partition.
Rat counit_outer(const SymFunc& f);

/// Antipode S(s_lambda) = (-1)^{|lambda|} s_{lambda'}, extended linearly.
/// On power sums S(p_lambda) = (-1)^{length} p_lambda.
SymFunc antipode(const SymFunc& f);

enum class HopfCase { I, II, III, IV };
HopfCase hopf_case_from_name(const std::string& name);

/// Verification report for the four product/coproduct pairings. Cases I-III
/// verify the laws that hold (Hopf axioms, bialgebra homomorphism); case IV
/// verifies the expected failure and records the z_n mismatch ratio between
/// the two sides of the homomorphism identity.
struct CaseReport {
    HopfCase which;
    int max_weight = 0;
    bool verified = false;
    std::vector<std::string> lines;
};

CaseReport check_case(HopfCase which, int max_weight);

}  // namespace schurkit
