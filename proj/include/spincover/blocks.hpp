#pragma once

// p-block bookkeeping for the double covers: bar-core blocks, weights, the
// weight-zero sign splits, block character lists, the quotient bijection, and
// symbolic Brauer-correspondent data.

#include <sstream>
#include <string>
#include <vector>

#include "spincover/partitions.hpp"
#include "spincover/spin_sym.hpp"

namespace spincover {

enum class Side { sym, alt };

struct BlockDescriptor {
    int p = 3;
    int n = 0;
    StrictPartition barCore;
    int weight = 0;
    Side side = Side::sym;
    // Weight-zero blocks can split into a +- pair of single-character blocks;
    // 0 when the block is not of that kind.
    int signVariant = 0;

    bool abelian_defect() const { return weight < p; }
    bool operator==(const BlockDescriptor&) const = default;
};

namespace blocks {

inline BlockDescriptor block_of(const StrictPartition& lambda, int p, Side side) {
    BlockDescriptor B;
    B.p = p;
    B.n = partitions::size_of(lambda);
    auto bc = partitions::bar_core_quotient(lambda, p);
    B.barCore = bc.core;
    B.weight = bc.weight;
    B.side = side;
    if (bc.weight == 0) {
        int s = partitions::sigma(lambda);
        if (side == Side::sym && s == -1) B.signVariant = +1;  // descriptor of the xi^+ block
        if (side == Side::alt && s == 1) B.signVariant = +1;
    }
    return B;
}

// All spin character labels lying in B (for the split weight-0 blocks the
// variant is pinned by the descriptor).
inline std::vector<SpinCharLabel> block_characters(const BlockDescriptor& B) {
    std::vector<SpinCharLabel> out;
    for (const auto& lambda : partitions::strict_partitions(B.n)) {
        auto bc = partitions::bar_core_quotient(lambda, B.p);
        if (!(bc.core == B.barCore)) continue;
        int s = partitions::sigma(lambda);
        bool pairOnSide = (B.side == Side::sym) ? (s == -1) : (s == 1);
        if (B.weight == 0 && B.signVariant != 0) {
            out.push_back({lambda, B.signVariant});
        } else if (pairOnSide) {
            out.push_back({lambda, +1});
            out.push_back({lambda, -1});
        } else {
            out.push_back({lambda, 0});
        }
    }
    return out;
}

// The bijection Psi: lambda with bar core gamma -> its bar quotient.
inline MultiPartition psi(const StrictPartition& lambda, int p, const StrictPartition& expectedCore) {
    auto bc = partitions::bar_core_quotient(lambda, p);
    if (!(bc.core == expectedCore)) throw std::domain_error("psi: bar core mismatch");
    return bc.quotient;
}

struct BrauerData {
    bool abelianDefect = false;
    std::string defectGroup;
    std::string correspondentIdempotent;
};

inline BrauerData brauer_data(const BlockDescriptor& B) {
    BrauerData D;
    D.abelianDefect = B.weight < B.p;
    if (!D.abelianDefect) {
        D.defectGroup = "non-abelian defect (w >= p)";
        return D;
    }
    std::ostringstream dg;
    if (B.weight == 0) dg << "trivial";
    else dg << "C_" << B.p << "^" << B.weight;
    D.defectGroup = dg.str();
    std::ostringstream idem;
    int m = B.n - B.p * B.weight;
    std::string coreStr = partitions::to_string(B.barCore);
    if (B.weight == 0) {
        idem << "e(" << coreStr << ")";
    } else if (B.side == Side::sym) {
        if (partitions::sigma(B.barCore) == 1) idem << "e[" << m << "," << coreStr << "]";
        else idem << "e+[" << m << "," << coreStr << "] + e-[" << m << "," << coreStr << "]";
    } else {
        if (partitions::sigma(B.barCore) == -1) idem << "ebar[" << m << "," << coreStr << "]";
        else idem << "ebar+[" << m << "," << coreStr << "] + ebar-[" << m << "," << coreStr << "]";
    }
    D.correspondentIdempotent = idem.str();
    return D;
}

}  // namespace blocks
}  // namespace spincover
