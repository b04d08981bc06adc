#pragma once

#include <numeric>
#include <vector>

namespace ffsg {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline std::vector<Partition> partitions_of(int n, int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        for (auto& rest : partitions_of(n - first, first)) {
            Partition p;
            p.reserve(rest.size() + 1);
            p.push_back(first);
            p.insert(p.end(), rest.begin(), rest.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

inline long partition_count(int n) {
    // P(n) by Euler recurrence
    static std::vector<long> cache{1};
    while ((int)cache.size() <= n) {
        int m = (int)cache.size();
        long total = 0;
        for (int k = 1;; ++k) {
            long g1 = (long)k * (3 * k - 1) / 2;
            long g2 = (long)k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * cache[m - g1];
            if (g2 <= m) total += sign * cache[m - g2];
        }
        cache.push_back(total);
    }
    return cache[n];
}

// mu <= lambda in dominance order (same weight assumed)
inline bool dominance_leq(const Partition& mu, const Partition& lam) {
    int sm = 0, sl = 0;
    size_t n = std::max(mu.size(), lam.size());
    for (size_t i = 0; i < n; ++i) {
        sm += i < mu.size() ? mu[i] : 0;
        sl += i < lam.size() ? lam[i] : 0;
        if (sm > sl) return false;
    }
    return true;
}

inline Partition rectangle(int s, int sp) {
    Partition p(s, sp);
    return p;
}

}  // namespace ffsg
