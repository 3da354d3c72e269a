#include "schurkit/outer_hopf.hpp"

#include <algorithm>
#include <functional>

namespace schurkit {

namespace {

bool multiplicative(Basis b) {
    return b == Basis::Complete || b == Basis::Elementary || b == Basis::PowerSum;
}

Partition concat_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(parts));
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Expand prod over part values v of (p_v ox 1 + 1 ox p_v)^{mult} into
// (left, right, binomial weight) splits of the multiset of parts.
void power_sum_splits(const Partition& lambda,
                      const std::function<void(const Partition&, const Partition&,
                                               long long)>& emit) {
    std::vector<std::pair<int, int>> mults;
    for (auto [v, r] : lambda.multiplicities()) mults.push_back({v, r});
    std::vector<int> left, right;
    std::function<void(size_t, long long)> rec = [&](size_t i, long long w) {
        if (i == mults.size()) {
            emit(Partition(std::vector<int>(left)), Partition(std::vector<int>(right)), w);
            return;
        }
        auto [v, r] = mults[i];
        for (int k = 0; k <= r; ++k) {
            for (int j = 0; j < k; ++j) left.push_back(v);
            for (int j = 0; j < r - k; ++j) right.push_back(v);
            rec(i + 1, w * binomial(r, k));
            for (int j = 0; j < k; ++j) left.pop_back();
            for (int j = 0; j < r - k; ++j) right.pop_back();
        }
    };
    rec(0, 1);
}

}  // namespace

SymFunc outer_product(const SymFunc& f, const SymFunc& g) {
    auto cap = min_cap(f.cap(), g.cap());
    if (f.basis() == g.basis() && multiplicative(f.basis())) {
        SymFunc out(f.basis(), cap);
        for (const auto& [a, ca] : f.terms())
            for (const auto& [b, cb] : g.terms()) out.add(concat_parts(a, b), ca * cb);
        return out;
    }
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc gs = convert(g, Basis::Schur);
    SymFunc out(Basis::Schur, cap);
    for (const auto& [a, ca] : fs.terms()) {
        for (const auto& [b, cb] : gs.terms()) {
            if (cap && a.weight() + b.weight() > *cap) continue;
            Rat c = ca * cb;
            for (const auto& [nu, mult] : lr_mult(a, b)) out.add(nu, c * to_rat(mult));
        }
    }
    return out;
}

TensorExp outer_coproduct(const SymFunc& f) {
    if (f.basis() == Basis::PowerSum) {
        TensorExp out({Basis::PowerSum, Basis::PowerSum}, f.cap());
        for (const auto& [lambda, c] : f.terms()) {
            const Rat& cc = c;
            power_sum_splits(lambda, [&](const Partition& l, const Partition& r,
                                          long long w) {
                out.add({l, r}, cc * to_rat(w));
            });
        }
        return out;
    }
    SymFunc fs = convert(f, Basis::Schur);
    TensorExp out({Basis::Schur, Basis::Schur}, f.cap());
    for (const auto& [lambda, c] : fs.terms()) {
        for (const auto& [first, second, mult] : coproduct_table(lambda))
            out.add({first, second}, c * to_rat(mult));
    }
    return out;
}

TensorExp coproduct_slot(const TensorExp& t, int slot) {
    if (slot < 0 || slot >= t.arity()) throw domain_error("coproduct slot out of range");
    size_t s = static_cast<size_t>(slot);
    std::vector<Basis> bases = t.slot_bases();
    Basis slot_basis = bases[s];
    if (slot_basis != Basis::Schur && slot_basis != Basis::PowerSum) {
        std::vector<Basis> conv = bases;
        conv[s] = Basis::Schur;
        return coproduct_slot(t.converted(conv), slot);
    }
    bases.insert(bases.begin() + slot, slot_basis);
    TensorExp out(bases, t.cap());
    for (const auto& [key, c] : t.terms()) {
        TensorExp local = outer_coproduct(SymFunc::element(slot_basis, key[s]));
        for (const auto& [pair_key, d] : local.terms()) {
            TensorExp::Key nk = key;
            nk[s] = pair_key[0];
            nk.insert(nk.begin() + slot + 1, pair_key[1]);
            out.add(nk, c * d);
        }
    }
    return out;
}

TensorExp tensor_outer_mult(const TensorExp& a, const TensorExp& b) {
    if (a.arity() != b.arity()) throw domain_error("tensor product arity mismatch");
    std::vector<Basis> schur_slots(static_cast<size_t>(a.arity()), Basis::Schur);
    TensorExp as = a.slot_bases() == b.slot_bases() ? a : a.converted(schur_slots);
    TensorExp bs = a.slot_bases() == b.slot_bases() ? b : b.converted(schur_slots);
    TensorExp out(as.slot_bases(), min_cap(as.cap(), bs.cap()));
    for (const auto& [ka, ca] : as.terms()) {
        for (const auto& [kb, cb] : bs.terms()) {
            // Slotwise products, distributing each expansion.
            std::vector<SymFunc> prods;
            prods.reserve(ka.size());
            for (size_t i = 0; i < ka.size(); ++i)
                prods.push_back(outer_product(
                    SymFunc::element(as.slot_bases()[i], ka[i]),
                    SymFunc::element(bs.slot_bases()[i], kb[i])));
            TensorExp::Key pick(ka.size());
            Rat base = ca * cb;
            std::function<void(size_t, Rat)> walk = [&](size_t i, Rat acc) {
                if (i == prods.size()) {
                    out.add(pick, acc);
                    return;
                }
                if (prods[i].basis() != out.slot_bases()[i])
                    throw domain_error("tensor slot basis drift");
                for (const auto& [p, v] : prods[i].terms()) {
                    pick[i] = p;
                    walk(i + 1, acc * v);
                }
            };
            walk(0, base);
        }
    }
    return out;
}

SymFunc skew(const SymFunc& f, const SymFunc& by) {
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc bys = convert(by, Basis::Schur);
    SymFunc out(Basis::Schur, min_cap(f.cap(), by.cap()));
    for (const auto& [lambda, c] : fs.terms()) {
        for (const auto& [mu, d] : bys.terms()) {
            if (mu.weight() > lambda.weight()) continue;
            Rat cd = c * d;
            for (const auto& [nu, mult] : lr_skew(lambda, mu)) out.add(nu, cd * to_rat(mult));
        }
    }
    return out;
}

Rat counit_outer(const SymFunc& f) {
    // In all five bases the empty partition indexes the constant function.
    return f.coeff(Partition());
}

SymFunc antipode(const SymFunc& f) {
    if (f.basis() == Basis::PowerSum) {
        SymFunc out(Basis::PowerSum, f.cap());
        for (const auto& [lambda, c] : f.terms())
            out.add(lambda, lambda.length() % 2 == 0 ? c : -c);
        return out;
    }
    SymFunc fs = convert(f, Basis::Schur);
    SymFunc out(Basis::Schur, f.cap());
    for (const auto& [lambda, c] : fs.terms())
        out.add(lambda.conjugate(), lambda.weight() % 2 == 0 ? c : -c);
    return out;
}

HopfCase hopf_case_from_name(const std::string& name) {
    if (name == "I" || name == "1") return HopfCase::I;
    if (name == "II" || name == "2") return HopfCase::II;
    if (name == "III" || name == "3") return HopfCase::III;
    if (name == "IV" || name == "4") return HopfCase::IV;
    throw domain_error("unknown case: " + name);
}

}  // namespace schurkit
