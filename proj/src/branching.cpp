#include "schurkit/branching.hpp"

#include "schurkit/lr.hpp"
#include "schurkit/outer_hopf.hpp"

namespace schurkit {

BranchingOperator series_branch(SeriesId id, int cap) {
    return BranchingOperator{characteristic_cochain(id, cap), cap};
}

SymFunc apply_branch(const BranchingOperator& op, const SymFunc& f) {
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc out(Basis::Schur, f.cap());
    for (const auto& [lambda, c] : fs.terms()) {
        for (const Partition& alpha : subdiagrams(lambda)) {
            Rat v = op.phi(alpha);
            if (v == 0) continue;
            Rat cv = c * v;
            for (const auto& [nu, mult] : lr_skew(lambda, alpha))
                out.add(nu, cv * to_rat(mult));
        }
    }
    return out;
}

BranchingOperator inverse_branch(const BranchingOperator& op) {
    return BranchingOperator{invert(op.phi), op.cap};
}

SymFunc deformed_product(const Cochain& phi, const SymFunc& f, const SymFunc& g) {
    BranchingOperator op{phi, 0};
    BranchingOperator inv = inverse_branch(op);
    return apply_branch(inv, outer_product(apply_branch(op, f), apply_branch(op, g)));
}

Rat deformed_counit(const Cochain& phi, const SymFunc& f) { return phi.eval(f); }

namespace {

SymFunc schur(const Partition& p) { return SymFunc::element(Basis::Schur, p); }

// sum_zeta Phi(s_lambda / zeta) * Phi(s_mu / sigma(zeta)), with sigma either
// the identity or the antipode-signed conjugation.
SymFunc compensated_sum(const BranchingOperator& op, const Partition& lambda,
                        const Partition& mu, bool signed_conjugate) {
    SymFunc total(Basis::Schur);
    for (const Partition& zeta : subdiagrams(lambda)) {
        Partition other = signed_conjugate ? zeta.conjugate() : zeta;
        if (!mu.contains(other)) continue;
        SymFunc left = apply_branch(op, skew(schur(lambda), schur(zeta)));
        SymFunc right = apply_branch(op, skew(schur(mu), schur(other)));
        SymFunc prod = outer_product(left, right);
        if (signed_conjugate && zeta.weight() % 2 != 0) prod *= Rat(-1);
        total += prod;
    }
    return total;
}

}  // namespace

GroupLikeReport check_group_like(SeriesId id, int max_weight) {
    GroupLikeReport rep;
    rep.id = id;
    rep.max_weight = max_weight;
    if (series_group_like(id)) {
        rep.law = BranchLaw::Homomorphism;
    } else {
        switch (id) {
            case SeriesId::B:
            case SeriesId::D:
            case SeriesId::F:
            case SeriesId::H:
                rep.law = BranchLaw::CompensatedSum;
                break;
            default:
                rep.law = BranchLaw::CompensatedSignedSum;
                break;
        }
    }
    BranchingOperator op = series_branch(id, max_weight);
    rep.holds = true;
    for (const Partition& lambda : partitions_up_to(max_weight)) {
        if (lambda.empty()) continue;
        for (const Partition& mu : partitions_up_to(max_weight - lambda.weight())) {
            if (mu.empty()) continue;
            SymFunc lhs = apply_branch(op, outer_product(schur(lambda), schur(mu)));
            SymFunc rhs;
            switch (rep.law) {
                case BranchLaw::Homomorphism:
                    rhs = outer_product(apply_branch(op, schur(lambda)),
                                        apply_branch(op, schur(mu)));
                    break;
                case BranchLaw::CompensatedSum:
                    rhs = compensated_sum(op, lambda, mu, false);
                    break;
                case BranchLaw::CompensatedSignedSum:
                    rhs = compensated_sum(op, lambda, mu, true);
                    break;
            }
            if (!equal_symfunc(lhs, rhs)) {
                rep.holds = false;
                rep.witness = {lambda, mu};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace schurkit
