#include "schurkit/lr.hpp"

#include <algorithm>
#include <mutex>

namespace schurkit {

namespace {

/*
  Product expansion. s_lambda * s_mu is computed by growing lambda with
  labelled horizontal strips, one label per row of mu. A placement is encoded
  by the box counts t[r][i] = number of label-r boxes in row i. The filling is
  a Littlewood-Richardson tableau exactly when, for every label r placed on
  top of the shape reached after label r-1:

    - the shape stays a partition after each row,
    - at most one new box lands in any column (horizontal strip),
    - the reverse reading word stays a lattice word, which in box counts is
      cum_r(i) <= cum_{r-1}(i-1), cum_r(i) = boxes of label r in rows <= i.

  Each completed placement contributes one unit to the coefficient of the
  final shape.
*/
struct MultEnumerator {
    const Partition& mu;
    std::vector<int> shape;  // current shape, grows as strips land
    int nrows;
    IntExpansion out;

    MultEnumerator(const Partition& lambda, const Partition& mu_in) : mu(mu_in) {
        nrows = lambda.length() + mu.length();
        shape.assign(static_cast<size_t>(nrows), 0);
        for (int i = 0; i < lambda.length(); ++i)
            shape[static_cast<size_t>(i)] = lambda.row(i);
    }

    void run() {
        std::vector<int> no_prev(static_cast<size_t>(nrows) + 1, 0);
        place_label(0, no_prev);
    }

    // prev_cum[i] = boxes of the previous label in rows < i.
    void place_label(int r, const std::vector<int>& prev_cum) {
        if (r == mu.length()) {
            std::vector<int> parts;
            for (int v : shape)
                if (v > 0) parts.push_back(v);
            out[Partition(std::move(parts))] += 1;
            return;
        }
        std::vector<int> prev_shape = shape;
        std::vector<int> cum(static_cast<size_t>(nrows) + 1, 0);
        place_row(r, r, mu.row(r), prev_shape, prev_cum, cum);
    }

    void place_row(int r, int i, int remaining, const std::vector<int>& prev_shape,
                   const std::vector<int>& prev_cum, std::vector<int>& cum) {
        if (remaining == 0) {
            for (size_t j = static_cast<size_t>(i); j + 1 < cum.size(); ++j)
                cum[j + 1] = cum[j];
            place_label(r + 1, cum);
            return;
        }
        if (i >= nrows) return;
        size_t si = static_cast<size_t>(i);
        int hi = remaining;
        if (i > 0) {
            hi = std::min(hi, shape[si - 1] - prev_shape[si]);       // partition shape
            hi = std::min(hi, prev_shape[si - 1] - prev_shape[si]);  // horizontal strip
            if (r > 0) hi = std::min(hi, prev_cum[si] - cum[si]);    // lattice word
        }
        for (int t = 0; t <= hi; ++t) {
            shape[si] = prev_shape[si] + t;
            cum[si + 1] = cum[si] + t;
            place_row(r, i + 1, remaining - t, prev_shape, prev_cum, cum);
        }
        shape[si] = prev_shape[si];
        cum[si + 1] = cum[si];
    }
};

/*
  Skew expansion. All lattice column-strict fillings of the fixed shape
  outer/inner are enumerated cell by cell in reverse reading order (rows top
  to bottom, each row right to left), which makes the lattice condition a
  local check on running label counts. The content of each completed filling
  is a partition nu and contributes to the coefficient of s_nu.
*/
struct SkewEnumerator {
    const Partition& outer;
    const Partition& inner;
    std::vector<std::vector<int>> fill;  // labels, 0-based rows/cols; 0 = empty
    std::vector<int> counts;             // boxes per label so far
    IntExpansion out;

    SkewEnumerator(const Partition& o, const Partition& in) : outer(o), inner(in) {
        fill.resize(static_cast<size_t>(outer.length()));
        for (int i = 0; i < outer.length(); ++i)
            fill[static_cast<size_t>(i)].assign(static_cast<size_t>(outer.row(i)), 0);
        counts.assign(static_cast<size_t>(outer.weight()) + 2, 0);
    }

    void run() { next_cell(0, outer.row(0) - 1); }

    void record() {
        std::vector<int> content;
        for (int c : counts)
            if (c > 0) content.push_back(c);
        out[Partition(std::move(content))] += 1;
    }

    void next_cell(int i, int j) {
        while (i < outer.length() && j < inner.row(i)) {
            ++i;
            j = (i < outer.length()) ? outer.row(i) - 1 : -1;
        }
        if (i >= outer.length()) {
            record();
            return;
        }
        size_t si = static_cast<size_t>(i), sj = static_cast<size_t>(j);
        int lo = 1, hi = i + 1;  // lattice condition caps labels by row index
        if (static_cast<int>(sj) + 1 < outer.row(i))
            hi = std::min(hi, fill[si][sj + 1]);  // weakly increasing row
        if (i > 0 && j < outer.row(i - 1) && j >= inner.row(i - 1))
            lo = std::max(lo, fill[si - 1][sj] + 1);  // strictly increasing column
        int ni = i, nj = j - 1;
        if (nj < inner.row(i)) {
            ++ni;
            nj = (ni < outer.length()) ? outer.row(ni) - 1 : -1;
        }
        for (int v = lo; v <= hi; ++v) {
            if (v >= 2 && counts[static_cast<size_t>(v)] + 1 > counts[static_cast<size_t>(v - 1)])
                continue;  // reverse reading word must stay a lattice word
            fill[si][sj] = v;
            counts[static_cast<size_t>(v)] += 1;
            next_cell(ni, nj);
            counts[static_cast<size_t>(v)] -= 1;
        }
        fill[si][sj] = 0;
    }
};

using PairKey = std::pair<Partition, Partition>;

std::mutex g_mult_mutex;
std::map<PairKey, IntExpansion, PartitionPairLess>& mult_cache() {
    static std::map<PairKey, IntExpansion, PartitionPairLess> cache;
    return cache;
}

std::mutex g_skew_mutex;
std::map<PairKey, IntExpansion, PartitionPairLess>& skew_cache() {
    static std::map<PairKey, IntExpansion, PartitionPairLess> cache;
    return cache;
}

std::mutex g_coproduct_mutex;
std::map<Partition, CoproductTable, PartitionLess>& coproduct_cache() {
    static std::map<Partition, CoproductTable, PartitionLess> cache;
    return cache;
}

}  // namespace

IntExpansion lr_mult(const Partition& a, const Partition& b) {
    // Symmetric; normalize the key so both orders share a cache entry.
    const Partition& x = canonical_less(a, b) ? a : b;
    const Partition& y = canonical_less(a, b) ? b : a;
    PairKey key{x, y};
    {
        std::lock_guard<std::mutex> lock(g_mult_mutex);
        auto it = mult_cache().find(key);
        if (it != mult_cache().end()) return it->second;
    }
    // Run the enumeration with the shorter content for fewer strips.
    MultEnumerator en(y.length() <= x.length() ? x : y,
                      y.length() <= x.length() ? y : x);
    en.run();
    {
        std::lock_guard<std::mutex> lock(g_mult_mutex);
        return mult_cache().emplace(std::move(key), std::move(en.out)).first->second;
    }
}

IntExpansion lr_skew(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return {};
    if (inner.empty()) return {{outer, 1}};
    PairKey key{outer, inner};
    {
        std::lock_guard<std::mutex> lock(g_skew_mutex);
        auto it = skew_cache().find(key);
        if (it != skew_cache().end()) return it->second;
    }
    SkewEnumerator en(outer, inner);
    en.run();
    {
        std::lock_guard<std::mutex> lock(g_skew_mutex);
        return skew_cache().emplace(std::move(key), std::move(en.out)).first->second;
    }
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    auto exp = lr_mult(lambda, mu);
    auto it = exp.find(nu);
    return it == exp.end() ? 0 : it->second;
}

const CoproductTable& coproduct_table(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(g_coproduct_mutex);
        auto it = coproduct_cache().find(lambda);
        if (it != coproduct_cache().end()) return it->second;
    }
    CoproductTable table;
    for (const Partition& alpha : subdiagrams(lambda)) {
        for (const auto& [nu, c] : lr_skew(lambda, alpha))
            table.emplace_back(nu, alpha, c);
    }
    {
        std::lock_guard<std::mutex> lock(g_coproduct_mutex);
        return coproduct_cache().emplace(lambda, std::move(table)).first->second;
    }
}

}  // namespace schurkit
