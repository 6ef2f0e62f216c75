#pragma once

// Small permutation utilities shared by the cover-group and Clifford layers.
// Permutations are one-line vectors of images on {0, .., n-1}; composition is
// function composition acting on the left: compose(a, b)(x) = a(b(x)).

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace spincover {

using Perm = std::vector<int>;

namespace perms {

inline Perm identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (size_t x = 0; x < a.size(); ++x) c[x] = a[b[x]];
    return c;
}

inline Perm inverse(const Perm& a) {
    Perm inv(a.size());
    for (size_t x = 0; x < a.size(); ++x) inv[a[x]] = static_cast<int>(x);
    return inv;
}

inline bool is_identity(const Perm& a) {
    for (size_t x = 0; x < a.size(); ++x)
        if (a[x] != static_cast<int>(x)) return false;
    return true;
}

inline Perm transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p[i], p[j]);
    return p;
}

// Cycle decomposition; each cycle starts at its smallest moved point, cycles
// sorted by that point.  Fixed points omitted.
inline std::vector<std::vector<int>> cycles(const Perm& a) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(a.size(), false);
    for (size_t start = 0; start < a.size(); ++start) {
        if (seen[start] || a[start] == static_cast<int>(start)) continue;
        std::vector<int> cyc;
        int x = static_cast<int>(start);
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = a[x];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

// Cycle type as a weakly decreasing partition of n (fixed points included).
inline std::vector<int> cycle_type(const Perm& a) {
    std::vector<int> type;
    std::vector<bool> seen(a.size(), false);
    for (size_t start = 0; start < a.size(); ++start) {
        if (seen[start]) continue;
        int len = 0, x = static_cast<int>(start);
        while (!seen[x]) {
            seen[x] = true;
            ++len;
            x = a[x];
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

inline int parity(const Perm& a) {  // +1 even, -1 odd
    int transpositions = 0;
    for (const auto& c : cycles(a)) transpositions += static_cast<int>(c.size()) - 1;
    return transpositions % 2 ? -1 : 1;
}

inline int order(const Perm& a) {
    int ord = 1;
    for (const auto& c : cycles(a)) ord = std::lcm(ord, static_cast<int>(c.size()));
    return ord;
}

// Fixed reduced word in adjacent transpositions s_j = (j, j+1):
// sigma = s_{w[0]} s_{w[1]} ... s_{w[L-1]}.  Deterministic (bubble sort).
inline std::vector<int> canonical_word(const Perm& sigma) {
    Perm arr = sigma;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < arr.size(); ++i) {
            if (arr[i] > arr[i + 1]) {
                std::swap(arr[i], arr[i + 1]);
                swaps.push_back(static_cast<int>(i));
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

}  // namespace perms
}  // namespace spincover
