#pragma once

// Ordinary irreducible characters of S_n via the classical Murnaghan-Nakayama
// recursion (only hook combinatorics needed).  Values are integers but kept
// as CycloNum for uniformity with the spin machinery.

#include <map>

#include "spincover/cyclo.hpp"
#include "spincover/partitions.hpp"

namespace spincover {

class SymCharTable {
public:
    // chi^lambda evaluated on the class of cycle type pi.
    CycloNum value(const Partition& lambda, const Partition& pi) {
        if (partitions::size_of(lambda) != partitions::size_of(pi))
            throw std::domain_error("sym char: size mismatch");
        long v = value_int(lambda, pi);
        return CycloNum(v);
    }

    long value_int(const Partition& lambda, const Partition& pi) {
        if (lambda.empty()) return 1;
        auto key = std::make_pair(lambda, pi);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        int q = pi.front();
        Partition rest(pi.begin() + 1, pi.end());
        long total = 0;
        for (const auto& h : partitions::remove_q_hooks(lambda, q)) {
            long term = value_int(h.result, rest);
            total += (h.leg % 2 ? -term : term);
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::map<std::pair<Partition, Partition>, long> memo_;
};

}  // namespace spincover
