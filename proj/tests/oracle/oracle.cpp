#include "oracle/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "schurkit/outer_hopf.hpp"

namespace schurkit::oracle {

namespace {

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

}  // namespace

Poly poly_const(int nvars, const Rat& c) {
    Poly p;
    if (c != 0) p[Monomial(static_cast<size_t>(nvars), 0)] = c;
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
    Poly out;
    for (const auto& [ma, ca] : a) {
        int da = degree(ma);
        for (const auto& [mb, cb] : b) {
            if (da + degree(mb) > max_degree) continue;
            Monomial m(ma.size());
            for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = out.emplace(std::move(m), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.erase(it);
            }
        }
    }
    return out;
}

Poly schur_polynomial(const Partition& lambda, int nvars) {
    Poly out;
    if (lambda.empty()) return poly_const(nvars, Rat(1));
    if (lambda.length() > nvars) return out;  // needs at least length variables
    // Fill the diagram cell by cell: rows weakly increase, columns strictly.
    std::vector<std::vector<int>> fill(static_cast<size_t>(lambda.length()));
    for (int i = 0; i < lambda.length(); ++i)
        fill[static_cast<size_t>(i)].assign(static_cast<size_t>(lambda.row(i)), 0);
    Monomial expo(static_cast<size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == lambda.length()) {
            auto [it, inserted] = out.emplace(expo, Rat(1));
            if (!inserted) it->second += 1;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= lambda.row(i)) {
            ++ni;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        if (i > 0 && j < lambda.row(i - 1))
            lo = std::max(lo, fill[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            fill[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            expo[static_cast<size_t>(v - 1)] += 1;
            rec(ni, nj);
            expo[static_cast<size_t>(v - 1)] -= 1;
        }
    };
    rec(0, 0);
    return out;
}

std::map<Partition, Rat, PartitionLess> schur_decompose(Poly p, int nvars) {
    std::map<Partition, Rat, PartitionLess> out;
    // Split by total degree, then peel within each homogeneous component.
    std::map<int, Poly> by_degree;
    for (auto& [m, c] : p) by_degree[degree(m)].emplace(m, c);
    for (auto& [d, comp] : by_degree) {
        while (!comp.empty()) {
            auto top = std::prev(comp.end());  // lexicographically largest
            Monomial lead = top->first;
            Rat c = top->second;
            std::vector<int> parts;
            for (int e : lead)
                if (e != 0) parts.push_back(e);
            if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
                throw domain_error("polynomial is not symmetric");
            Partition shape(std::move(parts));
            out[shape] += c;
            Poly sp = schur_polynomial(shape, nvars);
            for (const auto& [m, v] : sp) {
                auto it = comp.find(m);
                Rat nv = (it == comp.end() ? Rat(0) : it->second) - c * v;
                if (nv == 0) {
                    if (it != comp.end()) comp.erase(it);
                } else {
                    comp[m] = nv;
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

long long ssyt_count(const Partition& shape, const Partition& content) {
    if (shape.weight() != content.weight()) return 0;
    // Same cell-by-cell fill, with the multiset of entries pinned.
    std::vector<int> remaining(static_cast<size_t>(content.length()) + 1, 0);
    for (int i = 0; i < content.length(); ++i)
        remaining[static_cast<size_t>(i) + 1] = content.row(i);
    std::vector<std::vector<int>> fill(static_cast<size_t>(shape.length()));
    for (int i = 0; i < shape.length(); ++i)
        fill[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.row(i)), 0);
    long long count = 0;
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == shape.length()) {
            ++count;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj >= shape.row(i)) {
            ++ni;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, fill[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        if (i > 0 && j < shape.row(i - 1))
            lo = std::max(lo, fill[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
        for (int v = lo; v <= content.length(); ++v) {
            if (remaining[static_cast<size_t>(v)] == 0) continue;
            remaining[static_cast<size_t>(v)] -= 1;
            fill[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
            rec(ni, nj);
            remaining[static_cast<size_t>(v)] += 1;
        }
    };
    rec(0, 0);
    return count;
}

long long standard_tableaux_count(const Partition& lambda) {
    return ssyt_count(lambda,
                      Partition(std::vector<int>(static_cast<size_t>(lambda.weight()), 1)));
}

long long partition_count_pentagonal(int n) {
    static std::vector<long long> table{1};
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        long long total = 0;
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long term = 0;
            if (g1 <= m) term += table[static_cast<size_t>(m - g1)];
            if (g2 <= m) term += table[static_cast<size_t>(m - g2)];
            total += (k % 2 == 1) ? term : -term;
        }
        table.push_back(total);
    }
    return table[static_cast<size_t>(n)];
}

SymFunc antipode_by_recursion(const SymFunc& f) {
    SymFunc fs = convert(f, Basis::Schur);
    std::map<Partition, SymFunc, PartitionLess> memo;
    std::function<const SymFunc&(const Partition&)> s_of = [&](const Partition& lambda)
        -> const SymFunc& {
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
        SymFunc acc(Basis::Schur);
        if (lambda.empty()) {
            acc = SymFunc::unit(Basis::Schur);
        } else {
            for (const Partition& alpha : subdiagrams(lambda)) {
                if (alpha == lambda) continue;
                SymFunc skew_part(Basis::Schur);
                for (const auto& [nu, mult] : lr_skew(lambda, alpha))
                    skew_part.add(nu, to_rat(mult));
                acc -= outer_product(s_of(alpha), skew_part);
            }
        }
        return memo.emplace(lambda, std::move(acc)).first->second;
    };
    SymFunc out(Basis::Schur, f.cap());
    for (const auto& [lambda, c] : fs.terms()) out += c * s_of(lambda);
    return out;
}

namespace {

// (1 - u)^{eps} truncated: the factor for one monomial u, either the binomial
// 1 - u or the geometric series over powers of u.
Poly factor_poly(int nvars, const Monomial& u, bool inverse, int max_degree) {
    Poly out = poly_const(nvars, Rat(1));
    int du = degree(u);
    if (!inverse) {
        Monomial m = u;
        out[m] = Rat(-1);
        return out;
    }
    Monomial acc(u.size(), 0);
    for (int k = 1; k * du <= max_degree; ++k) {
        for (size_t i = 0; i < u.size(); ++i) acc[i] += u[i];
        out[acc] = Rat(1);
    }
    return out;
}

}  // namespace

Poly series_generating_poly(SeriesId id, int nvars, int max_degree) {
    std::vector<Monomial> factors;
    bool inverse = false;
    bool negate_variable = false;  // use (1 + u) instead of (1 - u)
    auto var = [&](int i) {
        Monomial m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(i)] = 1;
        return m;
    };
    auto pair_var = [&](int i, int j) {
        Monomial m(static_cast<size_t>(nvars), 0);
        m[static_cast<size_t>(i)] += 1;
        m[static_cast<size_t>(j)] += 1;
        return m;
    };
    switch (id) {
        case SeriesId::L:  // prod (1 - x_i)
            for (int i = 0; i < nvars; ++i) factors.push_back(var(i));
            break;
        case SeriesId::M:  // prod (1 - x_i)^{-1}
            inverse = true;
            for (int i = 0; i < nvars; ++i) factors.push_back(var(i));
            break;
        case SeriesId::P:  // prod (1 + x_i)^{-1}
            inverse = true;
            negate_variable = true;
            for (int i = 0; i < nvars; ++i) factors.push_back(var(i));
            break;
        case SeriesId::Q:  // prod (1 + x_i)
            negate_variable = true;
            for (int i = 0; i < nvars; ++i) factors.push_back(var(i));
            break;
        case SeriesId::A:  // prod_{i<j} (1 - x_i x_j)
            for (int i = 0; i < nvars; ++i)
                for (int j = i + 1; j < nvars; ++j) factors.push_back(pair_var(i, j));
            break;
        case SeriesId::B:
            inverse = true;
            for (int i = 0; i < nvars; ++i)
                for (int j = i + 1; j < nvars; ++j) factors.push_back(pair_var(i, j));
            break;
        case SeriesId::C:  // prod_{i<=j} (1 - x_i x_j)
            for (int i = 0; i < nvars; ++i)
                for (int j = i; j < nvars; ++j) factors.push_back(pair_var(i, j));
            break;
        case SeriesId::D:
            inverse = true;
            for (int i = 0; i < nvars; ++i)
                for (int j = i; j < nvars; ++j) factors.push_back(pair_var(i, j));
            break;
        case SeriesId::V:  // prod (1 - x_i^2)
            for (int i = 0; i < nvars; ++i) factors.push_back(pair_var(i, i));
            break;
        case SeriesId::W:
            inverse = true;
            for (int i = 0; i < nvars; ++i) factors.push_back(pair_var(i, i));
            break;
        default:
            throw domain_error("no generating product oracle for this series");
    }
    Poly acc = poly_const(nvars, Rat(1));
    for (const auto& u : factors) {
        Poly f = factor_poly(nvars, u, inverse, max_degree);
        if (negate_variable) {
            // substitute x -> -x in the factor: flip odd-degree signs
            Poly g;
            for (const auto& [m, c] : f)
                g[m] = degree(m) % 2 == 0 ? c : -c;
            f = std::move(g);
        }
        acc = poly_mul(acc, f, max_degree);
    }
    return acc;
}

}  // namespace schurkit::oracle
