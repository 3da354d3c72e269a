#include "schurkit/inner_alg.hpp"

#include <functional>

#include "schurkit/outer_hopf.hpp"

namespace schurkit {

SymFunc inner_product(const SymFunc& f, const SymFunc& g) {
    bool keep_p = f.basis() == Basis::PowerSum && g.basis() == Basis::PowerSum;
    SymFunc fp = convert(f, Basis::PowerSum);
    SymFunc gp = convert(g, Basis::PowerSum);
    SymFunc out(Basis::PowerSum, min_cap(f.cap(), g.cap()));
    for (const auto& [lambda, c] : fp.terms()) {
        Rat d = gp.coeff(lambda);
        if (d != 0) out.add(lambda, c * d * Rat(z_value(lambda)));
    }
    return keep_p ? out : convert(out, Basis::Schur);
}

TensorExp inner_coproduct(const SymFunc& f) {
    SymFunc fp = convert(f, Basis::PowerSum);
    TensorExp diag({Basis::PowerSum, Basis::PowerSum}, f.cap());
    for (const auto& [lambda, c] : fp.terms()) diag.add({lambda, lambda}, c);
    if (f.basis() == Basis::PowerSum) return diag;
    return diag.converted({Basis::Schur, Basis::Schur});
}

TensorExp inner_coproduct_slot(const TensorExp& t, int slot) {
    if (slot < 0 || slot >= t.arity()) throw domain_error("coproduct slot out of range");
    size_t s = static_cast<size_t>(slot);
    std::vector<Basis> bases = t.slot_bases();
    Basis slot_basis = bases[s];
    bases.insert(bases.begin() + slot, slot_basis);
    TensorExp out(bases, t.cap());
    for (const auto& [key, c] : t.terms()) {
        TensorExp local = inner_coproduct(SymFunc::element(slot_basis, key[s]));
        local = local.converted({slot_basis, slot_basis});
        for (const auto& [pair_key, d] : local.terms()) {
            TensorExp::Key nk = key;
            nk[s] = pair_key[0];
            nk.insert(nk.begin() + slot + 1, pair_key[1]);
            out.add(nk, c * d);
        }
    }
    return out;
}

TensorExp tensor_inner_mult(const TensorExp& a, const TensorExp& b) {
    if (a.arity() != b.arity()) throw domain_error("tensor product arity mismatch");
    std::vector<Basis> p_slots(static_cast<size_t>(a.arity()), Basis::PowerSum);
    TensorExp ap = a.converted(p_slots);
    TensorExp bp = b.converted(p_slots);
    TensorExp out(p_slots, min_cap(a.cap(), b.cap()));
    for (const auto& [ka, ca] : ap.terms()) {
        for (const auto& [kb, cb] : bp.terms()) {
            // Diagonal slotwise: p_l * p_l picks up z_l.
            bool match = true;
            Rat factor = ca * cb;
            for (size_t i = 0; i < ka.size() && match; ++i) {
                if (ka[i] != kb[i])
                    match = false;
                else
                    factor *= Rat(z_value(ka[i]));
            }
            if (match) out.add(ka, factor);
        }
    }
    return out;
}

SymFunc inner_unit(int cap) {
    if (cap < 0) throw domain_error("inner_unit: negative cap");
    SymFunc out(Basis::Schur, cap);
    for (int n = 0; n <= cap; ++n)
        out.add(n == 0 ? Partition() : Partition{n}, Rat(1));
    return out;
}

Rat counit_inner(const SymFunc& f) {
    if (!f.exact())
        throw domain_error("inner counit requires an exact (finite) input");
    SymFunc fp = convert(f, Basis::PowerSum);
    Rat total(0);
    for (const auto& [lambda, c] : fp.terms()) total += c;
    return total;
}

SymFunc plethysm_pn(const SymFunc& f, int n, PlethysmSide) {
    if (n <= 0) throw domain_error("plethysm_pn: n must be positive");
    SymFunc fp = convert(f, Basis::PowerSum);
    std::optional<int> cap;
    if (f.cap()) cap = *f.cap() * n;
    SymFunc out(Basis::PowerSum, cap);
    for (const auto& [lambda, c] : fp.terms()) {
        std::vector<int> parts;
        parts.reserve(static_cast<size_t>(lambda.length()));
        for (int part : lambda.parts()) parts.push_back(part * n);
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

long long kronecker_coefficient(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
    if (lambda.weight() != mu.weight() || mu.weight() != nu.weight()) return 0;
    Rat g = schur_scalar(SymFunc::element(Basis::Schur, lambda),
                         inner_product(SymFunc::element(Basis::Schur, mu),
                                       SymFunc::element(Basis::Schur, nu)));
    if (!is_integral(g)) throw domain_error("non-integral Kronecker coefficient");
    return static_cast<long long>(g.get_num().get_si());
}

}  // namespace schurkit
