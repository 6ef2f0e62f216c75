#pragma once

// The signed character bijections between a bar-core block of the double
// cover and the spin characters of the local subgroup, the kernel pairing,
// and the exact verification of both Broue axioms over every class pair.

#include <atomic>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "spincover/blocks.hpp"
#include "spincover/covers.hpp"
#include "spincover/spin_sym.hpp"
#include "spincover/wreath.hpp"

namespace spincover {

struct IsometryEntry {
    SpinCharLabel source;
    int sign = 1;
    WreathCharLabel target;
};

struct IsometryMap {
    int n = 0, p = 3, w = 0;
    StrictPartition core;
    Side side = Side::sym;     // source side
    bool targetAlt = false;    // target is the even part of the local group
    std::vector<IsometryEntry> entries;
};

namespace isometry {

// The variant-correlation factor: source variant eps maps to target variant
// eps * c(lambda).
inline int eta_variant_factor(const StrictPartition& lambda, const MultiPartition& q, int p, int w) {
    int d1 = partitions::delta_qbar(lambda, p);
    int d2 = partitions::quotient_sign(q, p);
    const auto& q0 = q.first;
    int e = partitions::size_of(q0) - partitions::length(q0);
    if (partitions::sigma(q0) == -1) e += 1;
    if ((static_cast<long>(e) * (p - 1)) % 4 != 0)
        throw std::logic_error("eta factor: exponent not integral");
    long expo = w + (static_cast<long>(e) * (p - 1)) / 4;
    return d1 * d2 * (expo % 2 == 0 ? 1 : -1);
}

// Builds the signed bijection from the bar-core block (source side `side`) to
// the spin characters of the local group.  Positive cores pair sym with the
// full local group and alt with its even part (the displayed theorems);
// negative cores cross sides, matching the Morita structure of the
// correspondents.  A core that is not a p-bar core is rejected.
inline IsometryMap build_map(int n, int p, const StrictPartition& core, Side side) {
    if (!partitions::remove_q_bars(core, p).empty())
        throw std::domain_error("isometry: gamma is not a p-bar core");
    int coreSize = partitions::size_of(core);
    if ((n - coreSize) % p != 0) throw std::domain_error("isometry: weight is not integral");
    int w = (n - coreSize) / p;
    if (w <= 0 || w >= p) throw std::domain_error("isometry: weight out of range (need 0 < w < p)");
    int sc = partitions::sigma(core);
    IsometryMap I{n, p, w, core, side, (sc == 1) == (side == Side::alt), {}};
    for (const auto& lambda : partitions::strict_partitions(n)) {
        auto bc = partitions::bar_core_quotient(lambda, p);
        if (!(bc.core == core)) continue;
        const MultiPartition& q = bc.quotient;
        int base = bc.sign * partitions::quotient_sign(q, p);
        long expo = static_cast<long>(w) * ((static_cast<long>(p) * p - 1) / 8) +
                    partitions::size_of(q.first);
        if (expo % 2 != 0) base = -base;
        int sl = partitions::sigma(lambda);
        bool sourceSelf = (side == Side::sym) ? (sl == 1) : (sl == -1);
        if (sourceSelf) {
            I.entries.push_back({{lambda, 0}, base, {q, 0}});
        } else if (!I.targetAlt) {
            int c = eta_variant_factor(lambda, q, p, w);
            I.entries.push_back({{lambda, +1}, base, {q, c}});
            I.entries.push_back({{lambda, -1}, base, {q, -c}});
        } else {
            I.entries.push_back({{lambda, +1}, base, {q, +1}});
            I.entries.push_back({{lambda, -1}, base, {q, -1}});
        }
    }
    return I;
}

inline IsometryMap build_I(int n, int p, const StrictPartition& core) {
    return build_map(n, p, core, Side::sym);
}
inline IsometryMap build_IA(int n, int p, const StrictPartition& core) {
    return build_map(n, p, core, Side::alt);
}

// ---------------------------------------------------------------------------
// Class-pair verification.

// One side of the pairing: class data plus the per-entry value rows.
struct SideTable {
    std::vector<std::string> classNames;
    std::vector<BigInt> centralizer;
    std::vector<bool> pSingular;
    std::vector<bool> inC;
    std::vector<std::vector<CycloNum>> values;  // [entry][class]
};

struct VerifyReport {
    long pairsChecked = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

inline bool type_in_C_sym(const Partition& type, int p) {
    for (int part : type)
        if (part % p == 0 && (part / p) % 2 == 1) return false;
    return true;
}

inline bool type_p_regular_sym(const Partition& type, int p) {
    for (int part : type)
        if (part % p == 0) return false;
    return true;
}

// Source side values over S~_n classes.
inline SideTable sym_source_table(const IsometryMap& I, SpinSymTable& spin) {
    SideTable T;
    auto classes = covers::sym_classes(I.n);
    for (auto& ci : classes) {
        std::ostringstream name;
        name << partitions::to_string(ci.label.type)
             << (ci.label.tag == Tag::plus ? "+" : ci.label.tag == Tag::minus ? "-" : "");
        T.classNames.push_back(name.str());
        T.centralizer.push_back(ci.centralizer);
        T.pSingular.push_back(!type_p_regular_sym(ci.label.type, I.p));
        T.inC.push_back(type_in_C_sym(ci.label.type, I.p));
    }
    for (const auto& e : I.entries) {
        std::vector<CycloNum> row;
        for (auto& ci : classes)
            row.push_back(spin.value(e.source.lambda, e.source.variant, ci.label.type, ci.label.tag));
        T.values.push_back(std::move(row));
    }
    return T;
}

inline SideTable alt_source_table(const IsometryMap& I, SpinSymTable& spin) {
    SideTable T;
    auto classes = covers::alt_classes(I.n);
    for (auto& ci : classes) {
        std::ostringstream name;
        name << partitions::to_string(ci.label.type) << "/z" << ci.label.zTag << "/h" << ci.label.half;
        T.classNames.push_back(name.str());
        T.centralizer.push_back(ci.centralizer);
        T.pSingular.push_back(!type_p_regular_sym(ci.label.type, I.p));
        T.inC.push_back(type_in_C_sym(ci.label.type, I.p));
    }
    for (const auto& e : I.entries) {
        std::vector<CycloNum> row;
        for (auto& ci : classes) row.push_back(spin.alt_value(e.source.lambda, e.source.variant, ci.label));
        T.values.push_back(std::move(row));
    }
    return T;
}

// Target side values over the local group (or its even part).
inline SideTable wreath_target_table(const IsometryMap& I, WreathContext& W) {
    SideTable T;
    if (!I.targetAlt) {
        for (auto& ci : W.classes()) {
            std::ostringstream name;
            for (auto& pr : ci.type.parts) name << "[" << partitions::to_string(pr) << "]";
            name << (ci.tag == Tag::plus ? "+" : ci.tag == Tag::minus ? "-" : "");
            T.classNames.push_back(name.str());
            T.centralizer.push_back(ci.centralizer);
            T.pSingular.push_back(!ci.pRegular);
            bool allEven = true;
            for (int part : ci.type.parts[0])
                if (part % 2 == 1) allEven = false;
            T.inC.push_back(allEven);
        }
        for (const auto& e : I.entries) {
            const auto& tab = W.character(e.target);
            std::vector<CycloNum> row;
            for (auto& ci : W.classes()) row.push_back(tab[ci.classId]);
            T.values.push_back(std::move(row));
        }
    } else {
        const auto& EA = W.EA();
        for (int c = 0; c < EA.num_classes(); ++c) {
            auto ty = W.type_of(EA.class_rep(c));
            std::ostringstream name;
            for (auto& pr : ty.parts) name << "[" << partitions::to_string(pr) << "]";
            name << "#" << c;
            T.classNames.push_back(name.str());
            T.centralizer.push_back(EA.centralizer_order(c));
            T.pSingular.push_back(!covers::wreath_type_p_regular(ty));
            bool allEven = true;
            for (int part : ty.parts[0])
                if (part % 2 == 1) allEven = false;
            T.inC.push_back(allEven);
        }
        for (const auto& e : I.entries) {
            const auto& tab = W.alt_character(e.target);
            T.values.push_back(tab);
        }
    }
    return T;
}

// Class-pair verification; the pair loop parallelizes over source classes and
// violations are assembled in source-major order, so the report is identical
// for every worker count.
inline VerifyReport verify_pairing(const IsometryMap& I, const SideTable& src, const SideTable& tgt,
                                   int jobs = 1) {
    size_t nx = src.centralizer.size();
    std::vector<VerifyReport> partial(nx);
    auto checkRow = [&](size_t x) {
        VerifyReport& R = partial[x];
        size_t ne = I.entries.size();
        for (size_t y = 0; y < tgt.centralizer.size(); ++y) {
            CycloNum k;
            for (size_t e = 0; e < ne; ++e) {
                if (src.values[e][x].is_zero() || tgt.values[e][y].is_zero()) continue;
                CycloNum term = src.values[e][x].conjugate() * tgt.values[e][y];
                k += I.entries[e].sign > 0 ? term : -term;
            }
            ++R.pairsChecked;
            bool singX = src.pSingular[x], singY = tgt.pSingular[y];
            if (singX != singY && !k.is_zero()) {
                R.violations.push_back("regular/singular vanishing fails at (" + src.classNames[x] +
                                       ", " + tgt.classNames[y] + "): " + k.to_string());
                continue;
            }
            if (src.inC[x] != tgt.inC[y] && !k.is_zero()) {
                R.violations.push_back("C-set vanishing fails at (" + src.classNames[x] + ", " +
                                       tgt.classNames[y] + "): " + k.to_string());
                continue;
            }
            if (!k.is_zero()) {
                CycloNum kx = k / CycloNum(Rational(src.centralizer[x]));
                CycloNum ky = k / CycloNum(Rational(tgt.centralizer[y]));
                if (!kx.is_p_integral(I.p) || !ky.is_p_integral(I.p)) {
                    R.violations.push_back("integrality fails at (" + src.classNames[x] + ", " +
                                           tgt.classNames[y] + "): " + k.to_string());
                }
            }
        }
    };
    if (jobs <= 1) {
        for (size_t x = 0; x < nx; ++x) checkRow(x);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (size_t x = next.fetch_add(1); x < nx; x = next.fetch_add(1)) checkRow(x);
            });
        for (auto& th : pool) th.join();
    }
    VerifyReport R;
    for (size_t x = 0; x < nx; ++x) {
        R.pairsChecked += partial[x].pairsChecked;
        for (auto& v : partial[x].violations) R.violations.push_back(std::move(v));
    }
    return R;
}

inline VerifyReport verify_broue(const IsometryMap& I, SpinSymTable& spin, WreathCache& cache) {
    WreathContext& W = cache.get(I.p, I.w);
    SideTable src = I.side == Side::sym ? sym_source_table(I, spin) : alt_source_table(I, spin);
    SideTable tgt = wreath_target_table(I, W);
    return verify_pairing(I, src, tgt);
}

// Mutation harness: flipping one sign or swapping one pair must break at
// least one axiom.
inline IsometryMap with_flipped_sign(IsometryMap I, size_t entryIdx) {
    I.entries.at(entryIdx).sign = -I.entries.at(entryIdx).sign;
    return I;
}

inline IsometryMap with_swapped_pair(IsometryMap I, const StrictPartition& lambda) {
    std::vector<size_t> idx;
    for (size_t e = 0; e < I.entries.size(); ++e)
        if (I.entries[e].source.lambda == lambda && I.entries[e].source.variant != 0)
            idx.push_back(e);
    if (idx.size() != 2) throw std::domain_error("pair swap: label is not an associate pair");
    std::swap(I.entries[idx[0]].target, I.entries[idx[1]].target);
    return I;
}

// ---------------------------------------------------------------------------
// Composition with the Brauer correspondent: the block of
// S~_m (N~_p^w S~_w [m]) with m = n - pw, for positive-sign cores on the sym
// side.  Characters are the t=2 products of xi_core with the local spin
// characters; verification runs over honest enumerated classes.

class ComposedCorrespondent {
public:
    ComposedCorrespondent(const IsometryMap& I, SpinSymTable& spin, WreathCache& cache)
        : I_(I), spin_(spin), W_(cache.get(I.p, I.w)), m_(I.n - I.p * I.w) {
        if (I.side != Side::sym || partitions::sigma(I.core) != 1)
            throw std::domain_error("composed correspondent: sym side with positive core only");
        build_group();
        build_values();
    }

    const EnumeratedCover& group() const { return *NG_; }

    VerifyReport verify() {
        SideTable src = sym_source_table(I_, spin_);
        return verify_pairing(I_, src, tgt_);
    }

    const SideTable& target_table() const { return tgt_; }

private:
    const IsometryMap& I_;
    SpinSymTable& spin_;
    WreathContext& W_;
    int m_;
    std::shared_ptr<CoverGroup> G_;
    std::shared_ptr<EnumeratedCover> NG_;
    std::unique_ptr<SmallSymModel> symModel_;
    SideTable tgt_;

    void build_group() {
        int n = I_.n, p = I_.p, w = I_.w;
        G_ = std::make_shared<CoverGroup>(n, WreathContext::ambient_cover_for(p));
        std::vector<CoverElt> gens;
        for (int j = 1; j < m_; ++j) gens.push_back(G_->t(j));
        // Wreath generators shifted past the first m points.
        auto np = covers::np_structure(p);
        for (int b = 0; b < w; ++b) {
            gens.push_back(shift_up(covers::embed_block(np.y0, p, w, b)));
            gens.push_back(shift_up(covers::embed_block(np.y1, p, w, b)));
        }
        for (int k = 1; k < w; ++k) {
            Perm swapBlocks = perms::identity(w);
            std::swap(swapBlocks[k - 1], swapBlocks[k]);
            gens.push_back(shift_up(covers::block_perm(swapBlocks, p)));
        }
        NG_ = std::make_shared<EnumeratedCover>(G_, gens);
        symModel_ = std::make_unique<SmallSymModel>(m_, G_->cover());
    }

    CoverElt shift_up(const Perm& q) const {
        Perm big = perms::identity(I_.n);
        for (size_t x = 0; x < q.size(); ++x) big[m_ + x] = m_ + q[x];
        return {big, 0};
    }

    void build_values() {
        for (int c = 0; c < NG_->num_classes(); ++c) {
            const CoverElt& rep = NG_->class_rep(c);
            std::ostringstream name;
            name << "ng#" << c;
            tgt_.classNames.push_back(name.str());
            tgt_.centralizer.push_back(NG_->centralizer_order(c));
            // p-singularity and the C-condition from the two parts.
            auto [y1, y2small] = split(rep);
            auto wty = W_.type_of(y2small);
            bool sing = !type_p_regular_sym(perms::cycle_type(restrict_low(rep)), I_.p) ||
                        !covers::wreath_type_p_regular(wty);
            tgt_.pSingular.push_back(sing);
            bool inC = type_in_C_sym(perms::cycle_type(restrict_low(rep)), I_.p);
            for (int part : wty.parts[0])
                if (part % 2 == 1) inC = false;
            tgt_.inC.push_back(inC);
        }
        for (const auto& e : I_.entries) {
            std::vector<CycloNum> row(NG_->num_classes());
            for (int c = 0; c < NG_->num_classes(); ++c) row[c] = value_at(e, NG_->class_rep(c));
            tgt_.values.push_back(std::move(row));
        }
    }

    Perm restrict_low(const CoverElt& y) const {
        Perm q(m_);
        for (int x = 0; x < m_; ++x) q[x] = y.perm[x];
        return q;
    }

    // Split y = y1 * y2 with y1 the sign-0 lift of the S_m part; y2 returned
    // already shifted down into the (p, w) context's group.
    std::pair<CoverElt, CoverElt> split(const CoverElt& y) const {
        Perm low = perms::identity(I_.n);
        for (int x = 0; x < m_; ++x) low[x] = y.perm[x];
        CoverElt y1{low, 0};
        CoverElt y2big = G_->multiply(G_->inverse(y1), y);
        Perm down(I_.p * I_.w);
        for (int x = 0; x < I_.p * I_.w; ++x) down[x] = y2big.perm[m_ + x] - m_;
        return {y1, CoverElt{down, y2big.sign}};
    }

    CycloNum value_at(const IsometryEntry& e, const CoverElt& y) {
        auto [y1, y2] = split(y);
        // xi_core factor on the S~_m part (self-associate).
        CoverElt abs1{restrict_low(y1), y1.sign};
        int sigmaTarget = partitions::sigma(e.target.lambda);
        if (sigmaTarget == 1) {
            // both factors self-associate: plain product
            auto [type, tag] = symModel_->classify(abs1);
            CycloNum a = spin_.value(I_.core, 0, type, tag);
            if (a.is_zero()) return a;
            int cls = W_.E().class_of(y2);
            return a * W_.character(e.target)[cls];
        }
        // (self, pair): sum over the alt constituents of xi_core.
        if (perms::parity(abs1.perm) != 1) return CycloNum();
        AltClassLabel acls = symModel_->classify_alt(abs1);
        CycloNum total;
        int cls = W_.E().class_of(y2);
        for (int d : {+1, -1}) {
            CycloNum a = spin_.alt_value(I_.core, d, acls);
            if (a.is_zero()) continue;
            WreathCharLabel t2{e.target.lambda, e.target.variant * d};
            total += a * W_.character(t2)[cls];
        }
        return total;
    }
};

}  // namespace isometry
}  // namespace spincover
