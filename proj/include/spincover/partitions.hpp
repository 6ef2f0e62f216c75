#pragma once

// Partition combinatorics: hooks, bars, cores, quotients, leg lengths and the
// attached signs, plus the label sets the character theory runs over.
//
// Conventions fixed here and relied on everywhere else:
//  * beta-set of an ordinary partition: first-column hook lengths
//    {lambda_i + (len - i)}; removing a q-hook replaces b by b - q, with leg
//    length = #(beta values strictly between b - q and b).
//  * q-bar removals of a strict partition (q odd): slide a -> a - q (a - q
//    not a part; a - q = 0 deletes), leg = #(parts strictly between a - q and
//    a); or delete a pair a + b = q, leg = #(parts strictly between) + 1.
//  * delta_q / delta_qbar are the products of (-1)^leg along a removal
//    sequence to the core, normalized to +1 on cores.  Path independence is
//    enforced by tests.

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincover/cyclo.hpp"

namespace spincover {

// Weakly decreasing list of positive parts.
using Partition = std::vector<int>;
// Strictly decreasing list of positive parts.
using StrictPartition = std::vector<int>;

struct MultiPartition {
    StrictPartition first;          // lambda_0, strict
    std::vector<Partition> rest;    // lambda_1 .. lambda_{(p-1)/2}

    bool operator==(const MultiPartition&) const = default;
    bool operator<(const MultiPartition& o) const {
        if (first != o.first) return first < o.first;
        return rest < o.rest;
    }
};

namespace partitions {

inline int size_of(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }
inline int length(const Partition& p) { return static_cast<int>(p.size()); }
inline int sigma(const Partition& p) { return (size_of(p) - length(p)) % 2 == 0 ? 1 : -1; }

inline bool is_valid_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline bool is_strict(const Partition& p) {
    if (!is_valid_partition(p)) return false;
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

inline bool all_parts_odd(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int a) { return a % 2 == 1; });
}

inline int size_of(const MultiPartition& m) {
    int s = size_of(m.first);
    for (const auto& c : m.rest) s += size_of(c);
    return s;
}

inline int sigma(const MultiPartition& m) {
    int t = size_of(m), t0 = size_of(m.first);
    return sigma(m.first) * ((t - t0) % 2 == 0 ? 1 : -1);
}

// |C_{S_n}(g)| for g of cycle type pi: prod_j j^{m_j} m_j!.
inline BigInt centralizer_order(const Partition& pi) {
    std::map<int, int> mult;
    for (int a : pi) mult[a]++;
    BigInt z = 1;
    for (auto [j, m] : mult) {
        for (int k = 0; k < m; ++k) z *= j;
        for (int k = 2; k <= m; ++k) z *= k;
    }
    return z;
}

inline Partition sorted_desc(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

// ---------------------------------------------------------------------------
// Hooks (ordinary partitions).

struct Removal {
    Partition result;
    int leg = 0;
};

inline std::vector<int> beta_set(const Partition& p, int len) {
    std::vector<int> beta;
    for (int i = 0; i < len; ++i) {
        int part = i < length(p) ? p[i] : 0;
        beta.push_back(part + (len - 1 - i));
    }
    return beta;  // strictly decreasing
}

inline Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    Partition p;
    int len = static_cast<int>(beta.size());
    for (int i = 0; i < len; ++i) {
        int part = beta[i] - (len - 1 - i);
        if (part > 0) p.push_back(part);
    }
    return p;
}

// All single q-hook removals with leg lengths.
inline std::vector<Removal> remove_q_hooks(const Partition& lambda, int q) {
    if (q < 1) throw std::domain_error("remove_q_hooks: q must be positive");
    std::vector<Removal> out;
    int len = length(lambda);
    std::vector<int> beta = beta_set(lambda, len);
    for (int idx = 0; idx < len; ++idx) {
        int b = beta[idx];
        if (b < q) continue;
        int target = b - q;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        std::vector<int> nb = beta;
        nb[idx] = target;
        int leg = 0;
        for (int c : beta)
            if (c > target && c < b) ++leg;
        out.push_back({partition_from_beta(std::move(nb)), leg});
    }
    return out;
}

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;  // q components
    int weight = 0;
    int sign = 1;  // delta_q(lambda)
};

// q-core / q-quotient / weight / delta_q, cores reached by greedy removal.
inline CoreQuotient core_quotient(const Partition& lambda, int q) {
    if (q < 1) throw std::domain_error("core_quotient: q must be positive");
    CoreQuotient res;
    // Greedy removal sequence fixes delta_q (path independence is a theorem).
    Partition cur = lambda;
    int sign = 1, removed = 0;
    while (true) {
        auto hooks = remove_q_hooks(cur, q);
        if (hooks.empty()) break;
        sign *= (hooks.front().leg % 2 == 0) ? 1 : -1;
        cur = hooks.front().result;
        ++removed;
    }
    res.core = cur;
    res.weight = removed;
    res.sign = sign;
    // Quotient from the q-runner abacus with bead count a multiple of q.
    int len = length(lambda);
    int padded = ((len + q - 1) / q) * q;
    if (padded == 0) padded = q;
    std::vector<int> beta = beta_set(lambda, padded);
    res.quotient.assign(q, Partition{});
    std::vector<std::vector<int>> runner(q);
    for (int b : beta) runner[b % q].push_back(b / q);
    for (int r = 0; r < q; ++r) res.quotient[r] = partition_from_beta(std::move(runner[r]));
    return res;
}

inline int delta_q(const Partition& lambda, int q) { return core_quotient(lambda, q).sign; }

// ---------------------------------------------------------------------------
// Bars (strict partitions, q odd).

// All single q-bar removals with leg lengths.
inline std::vector<Removal> remove_q_bars(const StrictPartition& lambda, int q) {
    if (q < 1 || q % 2 == 0) throw std::domain_error("remove_q_bars: q must be odd and positive");
    std::vector<Removal> out;
    int len = length(lambda);
    auto contains = [&](int v) { return std::find(lambda.begin(), lambda.end(), v) != lambda.end(); };
    // Type 1: a -> a - q.
    for (int i = 0; i < len; ++i) {
        int a = lambda[i];
        if (a < q) continue;
        int target = a - q;
        if (target > 0 && contains(target)) continue;
        std::vector<int> parts;
        for (int j = 0; j < len; ++j)
            if (j != i) parts.push_back(lambda[j]);
        if (target > 0) parts.push_back(target);
        int leg = 0;
        for (int b : lambda)
            if (b > target && b < a) ++leg;
        out.push_back({sorted_desc(std::move(parts)), leg});
    }
    // Type 2: delete parts a > b with a + b = q; leg = rows strictly between
    // plus the smaller part b.  (Parity pinned by the leg-length lemma plus
    // the exact S~_3 and S~_5 tables; enforced again by the orthogonality
    // suite downstream.)
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            if (lambda[i] + lambda[j] != q) continue;
            std::vector<int> parts;
            for (int k = 0; k < len; ++k)
                if (k != i && k != j) parts.push_back(lambda[k]);
            out.push_back({sorted_desc(std::move(parts)), (j - i - 1) + lambda[j]});
        }
    }
    return out;
}

struct BarCoreQuotient {
    StrictPartition core;
    MultiPartition quotient;  // (p+1)/2 components: strict first, then ordinary
    int weight = 0;
    int sign = 1;  // delta_qbar(lambda)
};

// q-bar core / quotient / weight / sign, q odd.  The quotient has components
// lambda_0 (parts divisible by q, scaled) and lambda_i for the residue pairs
// {i, q-i}, built on a two-runner abacus: residue-i beads above the charge
// line, residue-(q-i) beads as holes below it.
inline BarCoreQuotient bar_core_quotient(const StrictPartition& lambda, int q) {
    if (q < 1 || q % 2 == 0) throw std::domain_error("bar_core_quotient: q must be odd and positive");
    BarCoreQuotient res;
    StrictPartition cur = lambda;
    int sign = 1, removed = 0;
    while (true) {
        auto bars = remove_q_bars(cur, q);
        if (bars.empty()) break;
        sign *= (bars.front().leg % 2 == 0) ? 1 : -1;
        cur = bars.front().result;
        ++removed;
    }
    res.core = cur;
    res.weight = removed;
    res.sign = sign;

    std::vector<int> zero;
    for (int a : lambda)
        if (a % q == 0) zero.push_back(a / q);
    res.quotient.first = sorted_desc(std::move(zero));
    res.quotient.rest.assign((q - 1) / 2, Partition{});
    for (int i = 1; i <= (q - 1) / 2; ++i) {
        std::vector<int> above, holes;
        for (int a : lambda) {
            if (a % q == i) above.push_back(a / q);
            else if (a % q == q - i) holes.push_back(a / q);
        }
        int d = holes.empty() ? -1 : *std::max_element(holes.begin(), holes.end());
        std::vector<int> beta;
        for (int v = 0; v <= d; ++v)
            if (std::find(holes.begin(), holes.end(), d - v) == holes.end()) beta.push_back(v);
        for (int x : above) beta.push_back(d + 1 + x);
        res.quotient.rest[i - 1] = partition_from_beta(std::move(beta));
    }
    return res;
}

inline int delta_qbar(const StrictPartition& lambda, int q) { return bar_core_quotient(lambda, q).sign; }

// delta_qbar of a q-bar quotient: delta_qbar(l0) * prod_i delta_q(l_i).
inline int quotient_sign(const MultiPartition& quot, int q) {
    int s = delta_qbar(quot.first, q);
    for (const auto& comp : quot.rest) s *= delta_q(comp, q);
    return s;
}

// ---------------------------------------------------------------------------
// Enumerations.

inline void enumerate_partitions_rec(int n, int maxPart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = std::min(n, maxPart); a >= 1; --a) {
        cur.push_back(a);
        enumerate_partitions_rec(n - a, a, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    enumerate_partitions_rec(n, n > 0 ? n : 1, cur, out);
    return out;
}

inline void enumerate_strict_rec(int n, int maxPart, StrictPartition& cur, std::vector<StrictPartition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int a = std::min(n, maxPart); a >= 1; --a) {
        cur.push_back(a);
        enumerate_strict_rec(n - a, a - 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<StrictPartition> strict_partitions(int n) {
    std::vector<StrictPartition> out;
    StrictPartition cur;
    enumerate_strict_rec(n, n > 0 ? n : 1, cur, out);
    return out;
}

inline std::vector<StrictPartition> strict_partitions_signed(int n, int sign) {
    std::vector<StrictPartition> out;
    for (auto& p : strict_partitions(n))
        if (sigma(p) == sign) out.push_back(p);
    return out;
}

inline std::vector<Partition> odd_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(n))
        if (all_parts_odd(p)) out.push_back(p);
    return out;
}

// Delta_t for odd prime p: tuples (l0 strict, l1..l_{(p-1)/2} ordinary).
inline std::vector<MultiPartition> delta_tuples(int t, int p) {
    int k = (p - 1) / 2;
    std::vector<MultiPartition> out;
    std::vector<std::vector<std::vector<Partition>>> comps;  // unused; direct recursion below
    (void)comps;
    // Choose |l0| = s, then distribute t - s over k ordinary components.
    std::vector<int> sizes(k, 0);
    auto rec = [&](auto&& self, int idx, int remaining, std::vector<Partition>& acc,
                   const StrictPartition& l0) -> void {
        if (idx == k) {
            if (remaining == 0) out.push_back({l0, acc});
            return;
        }
        if (idx == k - 1) {
            for (auto& comp : all_partitions(remaining)) {
                acc.push_back(comp);
                self(self, idx + 1, 0, acc, l0);
                acc.pop_back();
            }
            return;
        }
        for (int s = 0; s <= remaining; ++s) {
            for (auto& comp : all_partitions(s)) {
                acc.push_back(comp);
                self(self, idx + 1, remaining - s, acc, l0);
                acc.pop_back();
            }
        }
    };
    for (int s0 = 0; s0 <= t; ++s0) {
        for (auto& l0 : strict_partitions(s0)) {
            std::vector<Partition> acc;
            if (k == 0) {
                if (s0 == t) out.push_back({l0, {}});
            } else {
                rec(rec, 0, t - s0, acc, l0);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<MultiPartition> delta_tuples_signed(int t, int p, int sign) {
    std::vector<MultiPartition> out;
    for (auto& m : delta_tuples(t, p))
        if (sigma(m) == sign) out.push_back(m);
    return out;
}

// ---------------------------------------------------------------------------
// Rendering and parsing.

inline std::string to_string(const Partition& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) out << ",";
        out << p[i];
    }
    return out.str();
}

inline Partition parse_partition(const std::string& text) {
    Partition p;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        if (a == std::string::npos) continue;
        size_t b = tok.find_last_not_of(" \t");
        p.push_back(std::stoi(tok.substr(a, b - a + 1)));
    }
    if (!is_valid_partition(p)) throw std::invalid_argument("parse_partition: parts must be weakly decreasing and positive");
    return p;
}

inline std::string to_string(const MultiPartition& m) {
    std::ostringstream out;
    out << to_string(m.first);
    for (const auto& c : m.rest) out << "|" << to_string(c);
    return out.str();
}

inline MultiPartition parse_multipartition(const std::string& text, int p) {
    MultiPartition m;
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : text) {
        if (ch == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    int want = (p + 1) / 2;
    while (static_cast<int>(fields.size()) < want) fields.push_back("");
    if (static_cast<int>(fields.size()) != want)
        throw std::invalid_argument("parse_multipartition: wrong number of components");
    m.first = parse_partition(fields[0]);
    if (!is_strict(m.first)) throw std::invalid_argument("parse_multipartition: first component must be strict");
    for (int i = 1; i < want; ++i) m.rest.push_back(parse_partition(fields[i]));
    return m;
}

}  // namespace partitions
}  // namespace spincover
