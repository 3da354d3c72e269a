#include "schurkit/clifford.hpp"

#include "schurkit/branching.hpp"
#include "schurkit/inner_alg.hpp"
#include "schurkit/lr.hpp"
#include "schurkit/outer_hopf.hpp"

namespace schurkit {

Cochain schur_pairing() {
    return Cochain::function(
        2,
        [](const Cochain::Key& key) {
            return key[0] == key[1] ? Rat(1) : Rat(0);
        },
        "schur");
}

Cochain schur_pairing_inverse() {
    return Cochain::function(
        2,
        [](const Cochain::Key& key) {
            if (key[0] != key[1].conjugate()) return Rat(0);
            return key[1].weight() % 2 == 0 ? Rat(1) : Rat(-1);
        },
        "schur-inv");
}

Cochain base_pairing(BasePairing base) {
    return base == BasePairing::Schur ? schur_pairing() : schur_pairing_inverse();
}

SymFunc circle_product(const SymFunc& f, const SymFunc& g, const Cochain& pairing) {
    if (pairing.arity() != 2) throw domain_error("circle product needs a 2-cochain");
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc gs = convert(g, Basis::Schur);
    SymFunc out(Basis::Schur, min_cap(f.cap(), g.cap()));
    for (const auto& [lambda, cf] : fs.terms()) {
        for (const auto& [mu, cg] : gs.terms()) {
            Rat c = cf * cg;
            for (const Partition& alpha : subdiagrams(lambda)) {
                for (const Partition& beta : subdiagrams(mu)) {
                    Rat v = pairing(alpha, beta);
                    if (v == 0) continue;
                    SymFunc left(Basis::Schur), right(Basis::Schur);
                    for (const auto& [nu, mult] : lr_skew(lambda, alpha))
                        left.add(nu, to_rat(mult));
                    for (const auto& [nu, mult] : lr_skew(mu, beta))
                        right.add(nu, to_rat(mult));
                    out += (c * v) * outer_product(left, right);
                }
            }
        }
    }
    return out;
}

SymFunc gauged_circle_product(const SymFunc& f, const SymFunc& g, BasePairing base,
                              const Cochain& phi) {
    Cochain pairing = convolve(base_pairing(base), coboundary(phi));
    return circle_product(f, g, pairing);
}

SymFunc gauged_circle_via_branch(const SymFunc& f, const SymFunc& g,
                                 BasePairing base, const Cochain& phi) {
    BranchingOperator op{phi, 0};
    BranchingOperator inv = inverse_branch(op);
    SymFunc inner =
        circle_product(apply_branch(op, f), apply_branch(op, g), base_pairing(base));
    return apply_branch(inv, inner);
}

SymFunc nl_product(const Partition& lambda, const Partition& mu) {
    SymFunc out(Basis::Schur);
    for (const Partition& zeta : subdiagrams(lambda)) {
        if (zeta.weight() > mu.weight() || !mu.contains(zeta)) continue;
        SymFunc left(Basis::Schur), right(Basis::Schur);
        for (const auto& [nu, mult] : lr_skew(lambda, zeta)) left.add(nu, to_rat(mult));
        for (const auto& [nu, mult] : lr_skew(mu, zeta)) right.add(nu, to_rat(mult));
        out += outer_product(left, right);
    }
    return out;
}

SymFunc variant_product(int k, const SymFunc& f, const SymFunc& g,
                        const Cochain& pairing, SweedlerReading reading) {
    if (k < 1 || k > 8) throw domain_error("variant index must be 1..8");
    if (pairing.arity() != 2) throw domain_error("variant product needs a 2-cochain");
    bool f_inner = (k == 3 || k == 4 || k == 7 || k == 8);
    bool g_inner = (k >= 5);
    bool product_inner = (k % 2 == 0);
    bool repeated_leg = (k == 7 || k == 8);

    TensorExp tf = f_inner ? inner_coproduct(f) : outer_coproduct(f);
    TensorExp tg = g_inner ? inner_coproduct(g) : outer_coproduct(g);

    SymFunc out(Basis::Schur, min_cap(f.cap(), g.cap()));
    for (const auto& [kf, cf] : tf.terms()) {
        for (const auto& [kg, cg] : tg.terms()) {
            SymFunc f1 = SymFunc::element(tf.slot_bases()[0], kf[0]);
            SymFunc g1 = SymFunc::element(tg.slot_bases()[0], kg[0]);
            Rat v = pairing.eval({f1, g1});
            if (v == 0) continue;
            size_t slot =
                (repeated_leg && reading == SweedlerReading::RepeatedFirstLeg) ? 0 : 1;
            SymFunc f2 = SymFunc::element(tf.slot_bases()[slot], kf[slot]);
            SymFunc g2 = SymFunc::element(tg.slot_bases()[slot], kg[slot]);
            SymFunc prod = product_inner ? inner_product(f2, g2) : outer_product(f2, g2);
            out += (cf * cg * v) * convert(prod, Basis::Schur);
        }
    }
    return out;
}

}  // namespace schurkit
