#include "schurkit/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "schurkit/characters.hpp"
#include "schurkit/lr.hpp"

namespace schurkit {

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char c) {
    switch (c) {
        case 's': return Basis::Schur;
        case 'h': return Basis::Complete;
        case 'e': return Basis::Elementary;
        case 'm': return Basis::Monomial;
        case 'p': return Basis::PowerSum;
        default: throw domain_error(std::string("unknown basis letter '") + c + "'");
    }
}

SymFunc SymFunc::unit(Basis b) { return element(b, Partition()); }

SymFunc SymFunc::element(Basis b, const Partition& p, const Rat& coeff) {
    SymFunc f(b);
    f.add(p, coeff);
    return f;
}

Rat SymFunc::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void SymFunc::add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    if (cap_ && p.weight() > *cap_) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SymFunc::max_term_weight() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

SymFunc SymFunc::homogeneous(int w) const {
    SymFunc out(basis_, cap_);
    for (const auto& [p, c] : terms_)
        if (p.weight() == w) out.add(p, c);
    return out;
}

bool SymFunc::integral() const {
    for (const auto& [p, c] : terms_)
        if (!is_integral(c)) return false;
    return true;
}

void SymFunc::set_cap(std::optional<int> cap) {
    cap_ = cap;
    if (cap_) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.weight() > *cap_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
}

SymFunc SymFunc::truncated(int cap) const {
    SymFunc out = *this;
    out.set_cap(min_cap(cap_, cap));
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw domain_error("cannot add expansions in different bases; convert first");
    cap_ = min_cap(cap_, o.cap_);
    if (cap_) set_cap(cap_);
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    if (basis_ != o.basis_)
        throw domain_error("cannot subtract expansions in different bases; convert first");
    cap_ = min_cap(cap_, o.cap_);
    if (cap_) set_cap(cap_);
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, v] : terms_) v *= c;
    return *this;
}

SymFunc SymFunc::operator-() const {
    SymFunc out = *this;
    for (auto& [p, v] : out.terms_) v = -v;
    return out;
}

bool SymFunc::operator==(const SymFunc& o) const {
    return basis_ == o.basis_ && cap_ == o.cap_ && terms_ == o.terms_;
}

std::optional<int> min_cap(std::optional<int> a, std::optional<int> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

bool TensorExp::KeyLess::operator()(const Key& a, const Key& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return canonical_less(a[i], b[i]);
    }
    return false;
}

TensorExp::TensorExp(std::vector<Basis> slot_bases, std::optional<int> cap)
    : bases_(std::move(slot_bases)), cap_(cap) {}

Rat TensorExp::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorExp::add(const Key& k, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(k.size()) != arity())
        throw domain_error("tensor term arity mismatch");
    if (cap_) {
        int w = 0;
        for (const auto& p : k) w += p.weight();
        if (w > *cap_) return;
    }
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorExp& TensorExp::operator+=(const TensorExp& o) {
    if (bases_ != o.bases_)
        throw domain_error("tensor slot bases differ; convert first");
    cap_ = min_cap(cap_, o.cap_);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

TensorExp& TensorExp::operator-=(const TensorExp& o) {
    if (bases_ != o.bases_)
        throw domain_error("tensor slot bases differ; convert first");
    cap_ = min_cap(cap_, o.cap_);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

TensorExp& TensorExp::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool TensorExp::operator==(const TensorExp& o) const {
    return bases_ == o.bases_ && terms_ == o.terms_;
}

TensorExp TensorExp::converted(const std::vector<Basis>& targets) const {
    if (static_cast<int>(targets.size()) != arity())
        throw domain_error("tensor conversion arity mismatch");
    if (targets == bases_) return *this;
    TensorExp out(targets, cap_);
    for (const auto& [key, c] : terms_) {
        // Expand every slot in its target basis and distribute.
        std::vector<SymFunc> slots;
        slots.reserve(key.size());
        for (size_t i = 0; i < key.size(); ++i)
            slots.push_back(convert(SymFunc::element(bases_[i], key[i]), targets[i]));
        Key pick(key.size());
        std::function<void(size_t, Rat)> walk = [&](size_t slot, Rat acc) {
            if (slot == slots.size()) {
                out.add(pick, acc);
                return;
            }
            for (const auto& [p, v] : slots[slot].terms()) {
                pick[slot] = p;
                walk(slot + 1, acc * v);
            }
        };
        walk(0, c);
    }
    return out;
}

TensorExp tensor2(const SymFunc& f, const SymFunc& g) {
    TensorExp out({f.basis(), g.basis()}, min_cap(f.cap(), g.cap()));
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) out.add({a, b}, ca * cb);
    return out;
}

// ---------------------------------------------------------------------------
// Basis conversion machinery. Per-weight transition blocks through the Schur
// hub: h and e rows come from iterated Littlewood-Richardson products, p rows
// from symmetric-group characters, m from the (unitriangular) Kostka matrix.
// Blocks are memoized behind one mutex; recomputation is harmless.
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Rat>>;

const std::vector<Partition>& weight_index(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, partitions_of(n)).first;
    return it->second;
}

int index_of(const std::vector<Partition>& idx, const Partition& p) {
    for (size_t i = 0; i < idx.size(); ++i)
        if (idx[i] == p) return static_cast<int>(i);
    throw domain_error("partition not found in weight block");
}

Matrix identity_matrix(size_t n) {
    Matrix m(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Matrix matrix_mult(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b[k][j] == 0) continue;
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    return out;
}

Matrix matrix_inverse(Matrix a) {
    size_t n = a.size();
    Matrix inv = identity_matrix(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw domain_error("singular transition block");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Schur expansion of a product of one-row or one-column factors.
IntExpansion product_of_strips(const Partition& lambda, bool columns) {
    IntExpansion acc{{Partition(), 1}};
    for (int i = 0; i < lambda.length(); ++i) {
        Partition factor = columns ? Partition(std::vector<int>(
                                         static_cast<size_t>(lambda.row(i)), 1))
                                   : Partition{lambda.row(i)};
        IntExpansion next;
        for (const auto& [p, c] : acc)
            for (const auto& [q, d] : lr_mult(p, factor)) next[q] += c * d;
        acc = std::move(next);
    }
    return acc;
}

// Row lambda = expansion of basis element lambda in the Schur basis.
Matrix build_to_schur(Basis basis, int n) {
    const auto& idx = weight_index(n);
    size_t k = idx.size();
    Matrix m(k, std::vector<Rat>(k, Rat(0)));
    for (size_t r = 0; r < k; ++r) {
        switch (basis) {
            case Basis::Schur:
                m[r][r] = 1;
                break;
            case Basis::Complete:
            case Basis::Elementary: {
                auto exp = product_of_strips(idx[r], basis == Basis::Elementary);
                for (const auto& [p, c] : exp)
                    m[r][static_cast<size_t>(index_of(idx, p))] = to_rat(c);
                break;
            }
            case Basis::PowerSum: {
                for (size_t cidx = 0; cidx < k; ++cidx)
                    m[r][cidx] = to_rat(sn_character(idx[cidx], idx[r]));
                break;
            }
            case Basis::Monomial:
                break;  // handled by inversion below
        }
    }
    if (basis == Basis::Monomial) {
        // m_lambda rows invert the Kostka block K = M(s,m) = M(h,s)^T.
        Matrix hs = build_to_schur(Basis::Complete, n);
        Matrix kostka_block(k, std::vector<Rat>(k, Rat(0)));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) kostka_block[i][j] = hs[j][i];
        m = matrix_inverse(std::move(kostka_block));
    }
    return m;
}

// Row lambda = expansion of s_lambda in the given basis.
Matrix build_from_schur(Basis basis, int n) {
    const auto& idx = weight_index(n);
    size_t k = idx.size();
    switch (basis) {
        case Basis::Schur:
            return identity_matrix(k);
        case Basis::PowerSum: {
            Matrix m(k, std::vector<Rat>(k, Rat(0)));
            for (size_t r = 0; r < k; ++r) {
                for (size_t c = 0; c < k; ++c) {
                    long long chi = sn_character(idx[r], idx[c]);
                    if (chi == 0) continue;
                    Rat entry = to_rat(chi);
                    entry /= Rat(z_value(idx[c]));
                    m[r][c] = entry;
                }
            }
            return m;
        }
        case Basis::Monomial: {
            Matrix hs = build_to_schur(Basis::Complete, n);
            Matrix kostka_block(k, std::vector<Rat>(k, Rat(0)));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) kostka_block[i][j] = hs[j][i];
            return kostka_block;
        }
        case Basis::Complete:
        case Basis::Elementary:
            return matrix_inverse(build_to_schur(basis, n));
    }
    throw domain_error("unreachable basis");
}

std::mutex g_block_mutex;
std::map<std::pair<char, int>, Matrix>& to_schur_cache() {
    static std::map<std::pair<char, int>, Matrix> cache;
    return cache;
}
std::map<std::pair<char, int>, Matrix>& from_schur_cache() {
    static std::map<std::pair<char, int>, Matrix> cache;
    return cache;
}

const Matrix& to_schur_block(Basis basis, int n) {
    std::pair<char, int> key{basis_letter(basis), n};
    {
        std::lock_guard<std::mutex> lock(g_block_mutex);
        auto it = to_schur_cache().find(key);
        if (it != to_schur_cache().end()) return it->second;
    }
    Matrix m = build_to_schur(basis, n);
    std::lock_guard<std::mutex> lock(g_block_mutex);
    return to_schur_cache().emplace(key, std::move(m)).first->second;
}

const Matrix& from_schur_block(Basis basis, int n) {
    std::pair<char, int> key{basis_letter(basis), n};
    {
        std::lock_guard<std::mutex> lock(g_block_mutex);
        auto it = from_schur_cache().find(key);
        if (it != from_schur_cache().end()) return it->second;
    }
    Matrix m = build_from_schur(basis, n);
    std::lock_guard<std::mutex> lock(g_block_mutex);
    return from_schur_cache().emplace(key, std::move(m)).first->second;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(target, f.cap());
    // Group the terms by weight and push each block through the Schur hub.
    std::map<int, std::vector<std::pair<Partition, Rat>>> blocks;
    for (const auto& [p, c] : f.terms()) blocks[p.weight()].push_back({p, c});
    for (const auto& [w, entries] : blocks) {
        const auto& idx = weight_index(w);
        std::vector<Rat> coeffs(idx.size(), Rat(0));
        for (const auto& [p, c] : entries)
            coeffs[static_cast<size_t>(index_of(idx, p))] = c;
        if (f.basis() != Basis::Schur) {
            const Matrix& m = to_schur_block(f.basis(), w);
            std::vector<Rat> next(idx.size(), Rat(0));
            for (size_t i = 0; i < idx.size(); ++i) {
                if (coeffs[i] == 0) continue;
                for (size_t j = 0; j < idx.size(); ++j)
                    next[j] += coeffs[i] * m[i][j];
            }
            coeffs = std::move(next);
        }
        if (target != Basis::Schur) {
            const Matrix& m = from_schur_block(target, w);
            std::vector<Rat> next(idx.size(), Rat(0));
            for (size_t i = 0; i < idx.size(); ++i) {
                if (coeffs[i] == 0) continue;
                for (size_t j = 0; j < idx.size(); ++j)
                    next[j] += coeffs[i] * m[i][j];
            }
            coeffs = std::move(next);
        }
        for (size_t i = 0; i < idx.size(); ++i) out.add(idx[i], coeffs[i]);
    }
    return out;
}

bool equal_symfunc(const SymFunc& f, const SymFunc& g) {
    SymFunc a = convert(f, Basis::Schur);
    SymFunc b = convert(g, Basis::Schur);
    return a.terms() == b.terms();
}

Rat schur_scalar(const SymFunc& f, const SymFunc& g) {
    if (f.basis() == Basis::PowerSum && g.basis() == Basis::PowerSum) {
        // (p_lambda | p_mu) = z_lambda delta.
        Rat total(0);
        for (const auto& [p, c] : f.terms()) {
            Rat d = g.coeff(p);
            if (d != 0) total += c * d * Rat(z_value(p));
        }
        return total;
    }
    SymFunc a = convert(f, Basis::Schur);
    SymFunc b = convert(g, Basis::Schur);
    Rat total(0);
    for (const auto& [p, c] : a.terms()) {
        Rat d = b.coeff(p);
        if (d != 0) total += c * d;
    }
    return total;
}

int schur_scalar_inverse(const Partition& lambda, const Partition& mu) {
    if (lambda != mu.conjugate()) return 0;
    return mu.weight() % 2 == 0 ? 1 : -1;
}

Rat schur_scalar_tensor(const TensorExp& a, const TensorExp& b) {
    if (a.arity() != b.arity())
        throw domain_error("tensor scalar product needs equal arity");
    std::vector<Basis> schur_slots(static_cast<size_t>(a.arity()), Basis::Schur);
    TensorExp as = a.converted(schur_slots);
    TensorExp bs = b.converted(schur_slots);
    Rat total(0);
    for (const auto& [k, c] : as.terms()) {
        Rat d = bs.coeff(k);
        if (d != 0) total += c * d;
    }
    return total;
}

long long kostka(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight()) return 0;
    auto exp = product_of_strips(lambda, false);
    auto it = exp.find(mu);
    return it == exp.end() ? 0 : it->second;
}

TransitionMatrix transition_matrix(Basis from, Basis to, int n) {
    TransitionMatrix tm;
    tm.from = from;
    tm.to = to;
    tm.index = weight_index(n);
    if (from == to) {
        tm.entries = identity_matrix(tm.index.size());
        return tm;
    }
    if (to == Basis::Schur) {
        tm.entries = to_schur_block(from, n);
    } else if (from == Basis::Schur) {
        tm.entries = from_schur_block(to, n);
    } else {
        tm.entries = matrix_mult(to_schur_block(from, n), from_schur_block(to, n));
    }
    return tm;
}

namespace {

long long count_matrices(const std::vector<int>& rows, std::vector<int>& colcap,
                         size_t r, int maxentry) {
    if (r == rows.size()) return 1;
    // Distribute rows[r] over the columns within the remaining capacities.
    long long total = 0;
    std::function<long long(size_t, int)> rec = [&](size_t j, int left) -> long long {
        if (left == 0) {
            return count_matrices(rows, colcap, r + 1, maxentry);
        }
        if (j == colcap.size()) return 0;
        long long sum = 0;
        int hi = std::min(left, colcap[j]);
        if (maxentry > 0) hi = std::min(hi, maxentry);
        for (int t = 0; t <= hi; ++t) {
            colcap[j] -= t;
            sum += rec(j + 1, left - t);
            colcap[j] += t;
        }
        return sum;
    };
    total = rec(0, rows[static_cast<size_t>(r)]);
    return total;
}

}  // namespace

long long matrix_count_check(MatrixCountKind kind, const Partition& lambda,
                             const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    std::vector<int> rows = lambda.parts();
    std::vector<int> cols = mu.parts();
    return count_matrices(rows, cols, 0, kind == MatrixCountKind::ZeroOne ? 1 : 0);
}

}  // namespace schurkit
