#include "schurkit/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace schurkit {

namespace {

std::mutex g_char_mutex;
std::map<std::pair<Partition, Partition>, long long, PartitionPairLess>& char_cache() {
    static std::map<std::pair<Partition, Partition>, long long, PartitionPairLess> cache;
    return cache;
}

// Border strips of length t correspond to beta numbers b >= t with b - t not
// in the set; the strip height is the number of beta numbers passed over.
long long character_rec(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return 1;
    std::pair<Partition, Partition> key{lambda, mu};
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = char_cache().find(key);
        if (it != char_cache().end()) return it->second;
    }
    int t = mu.row(0);
    std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
    Partition rest(std::move(rest_parts));

    int len = lambda.length();
    std::vector<int> beta(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<size_t>(i)] = lambda.row(i) + (len - 1 - i);

    long long total = 0;
    for (int idx = 0; idx < len; ++idx) {
        int b = beta[static_cast<size_t>(idx)];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            int v = beta[static_cast<size_t>(j)];
            if (v == target) occupied = true;
            if (v > target && v < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[static_cast<size_t>(idx)] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int i = 0; i < len; ++i) {
            int part = nb[static_cast<size_t>(i)] - (len - 1 - i);
            if (part > 0) parts.push_back(part);
        }
        long long sub = character_rec(Partition(std::move(parts)), rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        char_cache().emplace(std::move(key), total);
    }
    return total;
}

}  // namespace

long long sn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    return character_rec(lambda, mu);
}

}  // namespace schurkit
