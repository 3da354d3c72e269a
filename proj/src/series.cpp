#include "schurkit/series.hpp"

#include <array>
#include <mutex>

#include "schurkit/outer_hopf.hpp"

namespace schurkit {

namespace {

constexpr std::array<const char*, 16> kNames = {"L", "M", "P", "Q", "A", "B",
                                                "C", "D", "E", "F", "G", "H",
                                                "R", "S", "V", "W"};

bool all_parts_even(const Partition& p) {
    for (int v : p.parts())
        if (v % 2 != 0) return false;
    return true;
}

// Frobenius shapes (a | a+1): every leg exceeds its arm by one.
bool frobenius_legs_exceed_arms(const Partition& p) {
    auto f = to_frobenius(p);
    for (int i = 0; i < f.rank(); ++i)
        if (f.legs[static_cast<size_t>(i)] != f.arms[static_cast<size_t>(i)] + 1)
            return false;
    return true;
}

// Frobenius shapes (a+1 | a): every arm exceeds its leg by one.
bool frobenius_arms_exceed_legs(const Partition& p) {
    auto f = to_frobenius(p);
    for (int i = 0; i < f.rank(); ++i)
        if (f.arms[static_cast<size_t>(i)] != f.legs[static_cast<size_t>(i)] + 1)
            return false;
    return true;
}

Rat sign_pow(int k) { return k % 2 == 0 ? Rat(1) : Rat(-1); }

// Closed content formulas for the ten primitive series; the remaining six
// are products of these.
std::optional<Rat> closed_coeff(SeriesId id, const Partition& lambda) {
    switch (id) {
        case SeriesId::L:  // sum_m (-1)^m {1^m}
            return (lambda.empty() || lambda.row(0) == 1) ? sign_pow(lambda.weight())
                                                          : Rat(0);
        case SeriesId::M:  // sum_m {m}
            return lambda.length() <= 1 ? Rat(1) : Rat(0);
        case SeriesId::P:  // sum_m (-1)^m {m}
            return lambda.length() <= 1 ? sign_pow(lambda.weight()) : Rat(0);
        case SeriesId::Q:  // sum_m {1^m}
            return (lambda.empty() || lambda.row(0) == 1) ? Rat(1) : Rat(0);
        case SeriesId::A:  // Frobenius (a | a+1), sign (-1)^{w/2}
            return frobenius_legs_exceed_arms(lambda) ? sign_pow(lambda.weight() / 2)
                                                      : Rat(0);
        case SeriesId::B:  // even columns
            return all_parts_even(lambda.conjugate()) ? Rat(1) : Rat(0);
        case SeriesId::C:  // Frobenius (a+1 | a), sign (-1)^{w/2}
            return frobenius_arms_exceed_legs(lambda) ? sign_pow(lambda.weight() / 2)
                                                      : Rat(0);
        case SeriesId::D:  // even rows
            return all_parts_even(lambda) ? Rat(1) : Rat(0);
        case SeriesId::V: {
            // transposes of (p+2q, p), sign (-1)^p
            Partition c = lambda.conjugate();
            if (c.length() > 2) return Rat(0);
            int a = c.row(0), b = c.row(1);
            return (a - b) % 2 == 0 ? sign_pow(b) : Rat(0);
        }
        case SeriesId::W: {
            // (p+2q, p), sign (-1)^p
            if (lambda.length() > 2) return Rat(0);
            int a = lambda.row(0), b = lambda.row(1);
            return (a - b) % 2 == 0 ? sign_pow(b) : Rat(0);
        }
        default:
            return std::nullopt;
    }
}

// E = L*A, F = M*B, G = Q*A, H = P*B, R = L*P, S = M*Q.
std::pair<SeriesId, SeriesId> product_factors(SeriesId id) {
    switch (id) {
        case SeriesId::E: return {SeriesId::L, SeriesId::A};
        case SeriesId::F: return {SeriesId::M, SeriesId::B};
        case SeriesId::G: return {SeriesId::Q, SeriesId::A};
        case SeriesId::H: return {SeriesId::P, SeriesId::B};
        case SeriesId::R: return {SeriesId::L, SeriesId::P};
        case SeriesId::S: return {SeriesId::M, SeriesId::Q};
        default: throw domain_error("series has a closed content formula");
    }
}

std::mutex g_series_mutex;
std::map<std::pair<int, int>, TruncatedSeries>& series_cache() {
    static std::map<std::pair<int, int>, TruncatedSeries> cache;
    return cache;
}

}  // namespace

const char* series_name(SeriesId id) { return kNames[static_cast<size_t>(id)]; }

SeriesId series_from_name(const std::string& name) {
    for (size_t i = 0; i < kNames.size(); ++i)
        if (name == kNames[i]) return static_cast<SeriesId>(i);
    throw domain_error("unknown series: " + name);
}

SeriesId series_inverse(SeriesId id) {
    // Consecutive names pair up.
    int v = static_cast<int>(id);
    return static_cast<SeriesId>(v % 2 == 0 ? v + 1 : v - 1);
}

bool series_group_like(SeriesId id) {
    switch (id) {
        case SeriesId::L:
        case SeriesId::M:
        case SeriesId::P:
        case SeriesId::Q:
        case SeriesId::R:
        case SeriesId::S:
        case SeriesId::V:
        case SeriesId::W:
            return true;
        default:
            return false;
    }
}

TruncatedSeries series(SeriesId id, int cap) {
    if (cap < 0) throw domain_error("series cap must be non-negative");
    std::pair<int, int> key{static_cast<int>(id), cap};
    {
        std::lock_guard<std::mutex> lock(g_series_mutex);
        auto it = series_cache().find(key);
        if (it != series_cache().end()) return it->second;
    }
    TruncatedSeries ts{id, cap, SymFunc(Basis::Schur, cap)};
    if (closed_coeff(id, Partition()).has_value()) {
        for (const Partition& p : partitions_up_to(cap))
            ts.expansion.add(p, *closed_coeff(id, p));
    } else {
        auto [x, y] = product_factors(id);
        ts.expansion = series_product(series(x, cap).expansion, series(y, cap).expansion);
    }
    std::lock_guard<std::mutex> lock(g_series_mutex);
    return series_cache().emplace(std::move(key), std::move(ts)).first->second;
}

SymFunc series_product(const SymFunc& a, const SymFunc& b) {
    return outer_product(a, b);  // truncates to the minimum cap
}

SymFunc series_product(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_product(a.expansion, b.expansion);
}

Rat series_coeff(SeriesId id, const Partition& lambda) {
    if (auto c = closed_coeff(id, lambda)) return *c;
    return series(id, lambda.weight()).expansion.coeff(lambda);
}

Cochain characteristic_cochain(SeriesId id, int cap) {
    std::string name = std::string("series:") + series_name(id);
    return Cochain::function(
        1,
        [id, cap](const Cochain::Key& key) -> Rat {
            const Partition& p = key[0];
            if (p.weight() > cap) return Rat(0);
            return series_coeff(id, p);
        },
        name);
}

}  // namespace schurkit
