#include "schurkit/cohomology.hpp"

#include <algorithm>
#include <mutex>

#include "schurkit/lr.hpp"
#include "schurkit/outer_hopf.hpp"

namespace schurkit {

bool Cochain::KeyLess::operator()(const Key& a, const Key& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    int wa = 0, wb = 0;
    for (const auto& p : a) wa += p.weight();
    for (const auto& p : b) wb += p.weight();
    if (wa != wb) return wa < wb;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return canonical_less(a[i], b[i]);
    return false;
}

struct Cochain::Impl {
    int arity = 1;
    std::function<Rat(const Key&)> fn;
    std::string name;
    mutable std::mutex mu;
    mutable Table memo;
};

int Cochain::arity() const {
    if (!impl_) throw domain_error("empty cochain");
    return impl_->arity;
}

const std::string& Cochain::name() const {
    if (!impl_) throw domain_error("empty cochain");
    return impl_->name;
}

Rat Cochain::operator()(const Key& key) const {
    if (!impl_) throw domain_error("empty cochain");
    if (static_cast<int>(key.size()) != impl_->arity)
        throw domain_error("cochain arity mismatch");
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->memo.find(key);
        if (it != impl_->memo.end()) return it->second;
    }
    Rat v = impl_->fn(key);
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->memo.emplace(key, std::move(v)).first->second;
}

Rat Cochain::operator()(const Partition& a) const { return (*this)(Key{a}); }

Rat Cochain::operator()(const Partition& a, const Partition& b) const {
    return (*this)(Key{a, b});
}

Rat Cochain::eval(const std::vector<SymFunc>& slots) const {
    if (static_cast<int>(slots.size()) != arity())
        throw domain_error("cochain arity mismatch");
    std::vector<SymFunc> s;
    s.reserve(slots.size());
    for (const auto& f : slots) s.push_back(convert(f, Basis::Schur));
    Rat total(0);
    Key key(slots.size());
    std::function<void(size_t, Rat)> walk = [&](size_t i, Rat acc) {
        if (i == s.size()) {
            total += acc * (*this)(key);
            return;
        }
        for (const auto& [p, c] : s[i].terms()) {
            key[i] = p;
            walk(i + 1, acc * c);
        }
    };
    walk(0, Rat(1));
    return total;
}

Rat Cochain::eval(const SymFunc& f) const { return eval(std::vector<SymFunc>{f}); }

Rat Cochain::eval(const TensorExp& t) const {
    if (t.arity() != arity()) throw domain_error("cochain arity mismatch");
    std::vector<Basis> schur_slots(static_cast<size_t>(t.arity()), Basis::Schur);
    TensorExp ts = t.converted(schur_slots);
    Rat total(0);
    for (const auto& [key, c] : ts.terms()) total += c * (*this)(key);
    return total;
}

namespace {

bool all_empty(const Cochain::Key& key) {
    for (const auto& p : key)
        if (!p.empty()) return false;
    return true;
}

}  // namespace

Cochain Cochain::counit(int arity) {
    if (arity < 1) throw domain_error("cochain arity must be positive");
    auto impl = std::make_shared<Impl>();
    impl->arity = arity;
    impl->name = arity == 1 ? "counit" : "counit^" + std::to_string(arity);
    impl->fn = [](const Key& key) { return all_empty(key) ? Rat(1) : Rat(0); };
    return Cochain(std::move(impl));
}

Cochain Cochain::table(int arity, Table values, std::string name) {
    if (arity < 1) throw domain_error("cochain arity must be positive");
    for (const auto& [key, v] : values) {
        if (static_cast<int>(key.size()) != arity)
            throw domain_error("table key arity mismatch");
        for (const auto& p : key)
            if (p.empty())
                throw domain_error(
                    "table keys must have nonempty slots; unital values are implied");
    }
    auto impl = std::make_shared<Impl>();
    impl->arity = arity;
    impl->name = std::move(name);
    auto shared = std::make_shared<Table>(std::move(values));
    impl->fn = [shared](const Key& key) -> Rat {
        for (const auto& p : key) {
            // Unital convention on keys with an empty slot.
            if (p.empty()) return all_empty(key) ? Rat(1) : Rat(0);
        }
        auto it = shared->find(key);
        return it == shared->end() ? Rat(0) : it->second;
    };
    return Cochain(std::move(impl));
}

Cochain Cochain::function(int arity, std::function<Rat(const Key&)> fn,
                          std::string name) {
    if (arity < 1) throw domain_error("cochain arity must be positive");
    auto impl = std::make_shared<Impl>();
    impl->arity = arity;
    impl->name = std::move(name);
    impl->fn = std::move(fn);
    return Cochain(std::move(impl));
}

Cochain convolve(const Cochain& a, const Cochain& b) {
    if (a.arity() != b.arity())
        throw domain_error("convolution requires equal cochain arity");
    int n = a.arity();
    auto fn = [a, b](const Cochain::Key& key) -> Rat {
        // Sum over per-slot splittings from the comultiplication tables.
        Rat total(0);
        Cochain::Key first(key.size()), second(key.size());
        std::function<void(size_t, Rat)> walk = [&](size_t i, Rat acc) {
            if (i == key.size()) {
                Rat va = a(first);
                if (va == 0) return;
                Rat vb = b(second);
                if (vb == 0) return;
                total += acc * va * vb;
                return;
            }
            for (const auto& [f, s, c] : coproduct_table(key[i])) {
                first[i] = f;
                second[i] = s;
                walk(i + 1, acc * to_rat(c));
            }
        };
        walk(0, Rat(1));
        return total;
    };
    return Cochain::function(n, fn, "(" + a.name() + " * " + b.name() + ")");
}

Cochain invert(const Cochain& c) {
    int n = c.arity();
    auto holder = std::make_shared<Cochain>();
    auto fn = [c, holder](const Cochain::Key& key) -> Rat {
        // Graded Milnor-Moore recursion: peel the identity splitting off the
        // convolution identity inv * c = e and solve for the top value.
        if (all_empty(key)) return Rat(1);
        Rat total(0);
        Cochain::Key first(key.size()), second(key.size());
        std::function<void(size_t, Rat, bool)> walk = [&](size_t i, Rat acc,
                                                          bool all_trivial) {
            if (i == key.size()) {
                if (all_trivial) return;  // the inv(key) * c(empty) term itself
                Rat vc = c(second);
                if (vc == 0) return;
                total += acc * (*holder)(first)*vc;
                return;
            }
            for (const auto& [f, s, co] : coproduct_table(key[i])) {
                first[i] = f;
                second[i] = s;
                walk(i + 1, acc * to_rat(co), all_trivial && s.empty());
            }
        };
        walk(0, Rat(1), true);
        return -total;
    };
    Cochain inv = Cochain::function(n, fn, c.name() + "^-1");
    *holder = inv;
    return inv;
}

Cochain face_map(const Cochain& c, int i) {
    int n = c.arity();
    if (i < 0 || i > n + 1) throw domain_error("face index out of range");
    std::string nm = "d" + std::to_string(i) + "(" + c.name() + ")";
    if (i == 0) {
        return Cochain::function(
            n + 1,
            [c](const Cochain::Key& key) -> Rat {
                if (!key.front().empty()) return Rat(0);
                return c(Cochain::Key(key.begin() + 1, key.end()));
            },
            nm);
    }
    if (i == n + 1) {
        return Cochain::function(
            n + 1,
            [c](const Cochain::Key& key) -> Rat {
                if (!key.back().empty()) return Rat(0);
                return c(Cochain::Key(key.begin(), key.end() - 1));
            },
            nm);
    }
    size_t pos = static_cast<size_t>(i - 1);  // multiply slots pos and pos+1
    return Cochain::function(
        n + 1,
        [c, pos](const Cochain::Key& key) -> Rat {
            Rat total(0);
            for (const auto& [nu, mult] : lr_mult(key[pos], key[pos + 1])) {
                Cochain::Key k;
                k.reserve(key.size() - 1);
                k.insert(k.end(), key.begin(), key.begin() + static_cast<long>(pos));
                k.push_back(nu);
                k.insert(k.end(), key.begin() + static_cast<long>(pos) + 2, key.end());
                Rat v = c(k);
                if (v != 0) total += to_rat(mult) * v;
            }
            return total;
        },
        nm);
}

Cochain coboundary(const Cochain& c) {
    int n = c.arity();
    if (n != 1 && n != 2)
        throw domain_error("coboundary supported for 1- and 2-cochains");
    Cochain inv = invert(c);
    Cochain acc = face_map(c, 0);
    for (int i = 1; i <= n + 1; ++i)
        acc = convolve(acc, face_map(i % 2 == 1 ? inv : c, i));
    return acc;
}

std::string to_string(CochainClass c) {
    switch (c) {
        case CochainClass::Trivial: return "trivial";
        case CochainClass::Coboundary: return "coboundary";
        case CochainClass::Cocycle: return "cocycle";
        case CochainClass::Generic: return "generic";
    }
    return "?";
}

Classify1Result classify1(const Cochain& phi, int max_weight) {
    if (phi.arity() != 1) throw domain_error("classify1 needs a 1-cochain");
    Classify1Result res;
    res.max_weight = max_weight;
    bool trivial = true;
    for (const Partition& p : partitions_up_to(max_weight)) {
        if (p.empty()) continue;
        if (phi(p) != 0) {
            trivial = false;
            break;
        }
    }
    if (trivial) {
        res.verdict = CochainClass::Trivial;
        return res;
    }
    for (const Partition& a : partitions_up_to(max_weight)) {
        if (a.empty()) continue;
        for (const Partition& b : partitions_up_to(max_weight - a.weight())) {
            if (b.empty()) continue;
            Rat lhs(0);
            for (const auto& [nu, mult] : lr_mult(a, b)) lhs += to_rat(mult) * phi(nu);
            if (lhs != phi(a) * phi(b)) {
                res.verdict = CochainClass::Generic;
                res.witness = {a, b};
                return res;
            }
        }
    }
    res.verdict = CochainClass::Cocycle;
    return res;
}

namespace {

// One gradewise step of the coboundary solver: extend phi (known below
// weight w) to weight w so that d(phi) = pi on pairs of total weight w, or
// report the first inconsistent pair. Free directions (the one-dimensional
// gauge per grade) are pinned to zero.
struct CoboundarySolver {
    const Cochain& pi;
    std::map<Partition, Rat, PartitionLess> phi;
    std::map<Partition, Rat, PartitionLess> phi_inv;

    explicit CoboundarySolver(const Cochain& pi_in) : pi(pi_in) {
        phi[Partition()] = 1;
        phi_inv[Partition()] = 1;
    }

    Rat phi_of(const Partition& p) const {
        auto it = phi.find(p);
        if (it == phi.end()) throw domain_error("solver referenced unknown value");
        return it->second;
    }
    Rat phi_inv_of(const Partition& p) const {
        auto it = phi_inv.find(p);
        if (it == phi_inv.end()) throw domain_error("solver referenced unknown value");
        return it->second;
    }

    // sum over proper splittings: the part of the inverse recursion that only
    // involves weights below |nu|.
    Rat inverse_tail(const Partition& nu) const {
        Rat total(0);
        for (const auto& [first, second, mult] : coproduct_table(nu)) {
            if (second.empty() || second == nu) continue;
            total += to_rat(mult) * phi_inv_of(first) * phi_of(second);
        }
        return total;
    }

    // d(phi)(a ox b) with the top term phi^{-1}(s_a s_b) left out.
    Rat known_part(const Partition& a, const Partition& b) const {
        Rat total(0);
        for (const auto& [fa, sa, ca] : coproduct_table(a)) {
            for (const auto& [fb, sb, cb] : coproduct_table(b)) {
                if (sa == a && sb == b) continue;  // the unknown top term
                Rat v = phi_of(fa) * phi_of(fb);
                if (v == 0) continue;
                Rat inner(0);
                for (const auto& [nu, mult] : lr_mult(sa, sb))
                    inner += to_rat(mult) * phi_inv_of(nu);
                total += to_rat(ca) * to_rat(cb) * v * inner;
            }
        }
        return total;
    }

    // Returns the first inconsistent pair, if any.
    std::optional<std::pair<Partition, Partition>> solve_weight(int w) {
        const auto unknowns = partitions_of(w);
        size_t k = unknowns.size();
        auto col_of = [&](const Partition& p) -> size_t {
            for (size_t j = 0; j < k; ++j)
                if (unknowns[j] == p) return j;
            throw domain_error("unknown column");
        };
        // Incremental row reduction; pivot_row[j] is reduced against earlier pivots.
        std::vector<std::optional<std::vector<Rat>>> pivot_row(k);
        std::vector<Rat> pivot_rhs(k, Rat(0));
        for (int wa = 1; wa < w; ++wa) {
            for (const Partition& a : partitions_of(wa)) {
                for (const Partition& b : partitions_of(w - wa)) {
                    std::vector<Rat> row(k, Rat(0));
                    Rat rhs = pi({a, b}) - known_part(a, b);
                    for (const auto& [nu, mult] : lr_mult(a, b)) {
                        // phi^{-1}(s_nu) = -x_nu - inverse_tail(nu)
                        row[col_of(nu)] -= to_rat(mult);
                        rhs += to_rat(mult) * inverse_tail(nu);
                    }
                    // reduce against existing pivots
                    for (size_t j = 0; j < k; ++j) {
                        if (row[j] == 0 || !pivot_row[j]) continue;
                        Rat f = row[j];
                        const auto& pr = *pivot_row[j];
                        for (size_t t = j; t < k; ++t) row[t] -= f * pr[t];
                        rhs -= f * pivot_rhs[j];
                    }
                    size_t lead = k;
                    for (size_t j = 0; j < k; ++j)
                        if (row[j] != 0) {
                            lead = j;
                            break;
                        }
                    if (lead == k) {
                        if (rhs != 0) return std::make_pair(a, b);
                        continue;
                    }
                    Rat d = row[lead];
                    for (size_t t = lead; t < k; ++t) row[t] /= d;
                    rhs /= d;
                    pivot_row[lead] = std::move(row);
                    pivot_rhs[lead] = rhs;
                }
            }
        }
        // Back-substitute, free variables pinned to zero.
        std::vector<Rat> x(k, Rat(0));
        for (size_t j = k; j-- > 0;) {
            if (!pivot_row[j]) continue;
            Rat v = pivot_rhs[j];
            const auto& pr = *pivot_row[j];
            for (size_t t = j + 1; t < k; ++t) v -= pr[t] * x[t];
            x[j] = v;
        }
        for (size_t j = 0; j < k; ++j) {
            phi[unknowns[j]] = x[j];
            phi_inv[unknowns[j]] = -x[j] - inverse_tail(unknowns[j]);
        }
        return std::nullopt;
    }
};

}  // namespace

Classify2Result classify2(const Cochain& pi, int max_weight) {
    if (pi.arity() != 2) throw domain_error("classify2 needs a 2-cochain");
    Classify2Result res;
    res.max_weight = max_weight;

    bool trivial = true;
    for (const Partition& a : partitions_up_to(max_weight)) {
        for (const Partition& b : partitions_up_to(max_weight - a.weight())) {
            Rat expected = (a.empty() && b.empty()) ? Rat(1) : Rat(0);
            if (pi(a, b) != expected) {
                trivial = false;
                break;
            }
        }
        if (!trivial) break;
    }

    // Cocycle test: d(pi) trivial on every triple up to the bound.
    Cochain dpi = coboundary(pi);
    res.is_cocycle = true;
    for (const Partition& a : partitions_up_to(max_weight)) {
        if (a.empty() || !res.is_cocycle) continue;
        for (const Partition& b : partitions_up_to(max_weight - a.weight())) {
            if (b.empty() || !res.is_cocycle) continue;
            for (const Partition& c :
                 partitions_up_to(max_weight - a.weight() - b.weight())) {
                if (c.empty()) continue;
                if (dpi({a, b, c}) != 0) {
                    res.is_cocycle = false;
                    res.cocycle_witness = std::vector<Partition>{a, b, c};
                    break;
                }
            }
        }
    }

    // Coboundary test: solve d(phi) = pi grade by grade.
    CoboundarySolver solver(pi);
    std::optional<std::pair<Partition, Partition>> obstruction;
    for (int w = 1; w <= max_weight && !obstruction; ++w)
        obstruction = solver.solve_weight(w);

    if (trivial) {
        res.verdict = CochainClass::Trivial;
        return res;
    }
    if (!obstruction) {
        res.verdict = CochainClass::Coboundary;
        res.preimage = std::move(solver.phi);
        return res;
    }
    res.coboundary_obstruction = obstruction;
    res.verdict = res.is_cocycle ? CochainClass::Cocycle : CochainClass::Generic;
    return res;
}

}  // namespace schurkit
