#pragma once

// Element and conjugacy-class models for the double covers: S~_n, A~_n, and
// the local subgroups built from N_p inside S~_{pt}.
//
// Elements are (permutation, sign) pairs; the sign bit is relative to the
// canonical lift (the product of phi-images of the fixed reduced word), and
// multiplication routes through the Clifford 2-cocycle.  z = (id, 1).

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincover/clifford.hpp"
#include "spincover/partitions.hpp"
#include "spincover/permutations.hpp"

namespace spincover {

struct CoverElt {
    Perm perm;
    int sign = 0;  // 0 or 1; element = z^sign * canonical_lift(perm)

    bool operator==(const CoverElt&) const = default;
    bool operator<(const CoverElt& o) const {
        if (perm != o.perm) return perm < o.perm;
        return sign < o.sign;
    }
};

// Shared per-(n, cover) arithmetic context.
class CoverGroup {
public:
    CoverGroup(int n, Cover cover) : n_(n), cover_(cover), lifts_(n) {}

    int n() const { return n_; }
    Cover cover() const { return cover_; }

    CoverElt identity() const { return {perms::identity(n_), 0}; }
    CoverElt z() const { return {perms::identity(n_), 1}; }
    CoverElt canonical_lift(const Perm& p) const { return {p, 0}; }
    // Coxeter generator t_j, 1 <= j <= n-1.
    CoverElt t(int j) const { return {perms::transposition(n_, j - 1, j), 0}; }

    CoverElt multiply(const CoverElt& a, const CoverElt& b) const {
        int c = lifts_.cocycle_sign(cover_, a.perm, b.perm);
        return {perms::compose(a.perm, b.perm), (a.sign + b.sign + (c < 0 ? 1 : 0)) % 2};
    }

    CoverElt inverse(const CoverElt& a) const {
        Perm inv = perms::inverse(a.perm);
        int c = lifts_.cocycle_sign(cover_, a.perm, inv);
        return {inv, (a.sign + (c < 0 ? 1 : 0)) % 2};
    }

    CoverElt conjugate(const CoverElt& g, const CoverElt& x) const {
        return multiply(multiply(g, x), inverse(g));
    }

    CoverElt power(const CoverElt& a, long k) const {
        CoverElt r = identity(), base = a;
        bool neg = k < 0;
        unsigned long e = neg ? -k : k;
        while (e) {
            if (e & 1) r = multiply(r, base);
            base = multiply(base, base);
            e >>= 1;
        }
        return neg ? inverse(r) : r;
    }

    // The unique odd-order lift of an odd-order permutation.
    CoverElt odd_order_lift(const Perm& g) const {
        int m = perms::order(g);
        if (m % 2 == 0) throw std::domain_error("odd_order_lift: permutation has even order");
        return power({g, 0}, m + 1);
    }

    int parity(const CoverElt& a) const { return perms::parity(a.perm); }
    bool in_alternating(const CoverElt& a) const { return parity(a.perm) == 1; }
    int parity(const Perm& p) const { return perms::parity(p); }

private:
    int n_;
    Cover cover_;
    mutable clifford::LiftTable lifts_;
};

// ---------------------------------------------------------------------------
// Label-level class data for S~_n.

enum class Tag { unsplit, plus, minus };

struct SymClassLabel {
    Partition type;
    Tag tag = Tag::unsplit;

    bool operator==(const SymClassLabel&) const = default;
    bool operator<(const SymClassLabel& o) const {
        if (type != o.type) return type < o.type;
        return tag < o.tag;
    }
};

struct SymClassInfo {
    SymClassLabel label;
    BigInt size;
    BigInt centralizer;
};

namespace covers {

// Schur: the preimage class of type pi splits iff pi is all-odd or strict with
// negative sign.
inline bool sym_class_splits(const Partition& pi) {
    using namespace partitions;
    return all_parts_odd(pi) || (is_strict(pi) && sigma(pi) == -1);
}

inline BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline bool is_p_regular_type(const Partition& pi, int p) {
    for (int a : pi)
        if (a % p == 0) return false;
    return true;
}

inline std::vector<SymClassInfo> sym_classes(int n) {
    std::vector<SymClassInfo> out;
    BigInt nfact = factorial(n);
    for (const auto& pi : partitions::all_partitions(n)) {
        BigInt zpi = partitions::centralizer_order(pi);
        if (sym_class_splits(pi)) {
            BigInt size = nfact / zpi;
            out.push_back({{pi, Tag::plus}, size, 2 * zpi});
            out.push_back({{pi, Tag::minus}, size, 2 * zpi});
        } else {
            out.push_back({{pi, Tag::unsplit}, 2 * nfact / zpi, zpi});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SymClassInfo& a, const SymClassInfo& b) { return a.label < b.label; });
    return out;
}

// Canonical permutation of cycle type pi: parts in decreasing order on
// consecutive points.
inline Perm canonical_perm(int n, const Partition& pi) {
    Perm p = perms::identity(n);
    int base = 0;
    for (int part : pi) {
        for (int j = 0; j < part; ++j) p[base + j] = base + (j + 1) % part;
        base += part;
    }
    return p;
}

// Canonical representative of the plus-tagged class: the odd-order lift for
// all-odd types, the sign-0 canonical lift otherwise.
inline CoverElt canonical_sym_rep(const CoverGroup& G, const Partition& pi) {
    Perm p = canonical_perm(G.n(), pi);
    if (partitions::all_parts_odd(pi)) return G.odd_order_lift(p);
    return G.canonical_lift(p);
}

// Commuting C x S factorization: S-part = odd-order lift of the cycles whose
// length is an odd multiple of p, C-part absorbs any z.
inline std::pair<CoverElt, CoverElt> decompose_CS_sym(const CoverGroup& G, const CoverElt& x, int p) {
    Perm sPart = perms::identity(G.n());
    for (const auto& cyc : perms::cycles(x.perm)) {
        int len = static_cast<int>(cyc.size());
        if (len % p == 0 && (len / p) % 2 == 1)
            for (size_t i = 0; i < cyc.size(); ++i) sPart[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    CoverElt xS = G.odd_order_lift(sPart);
    CoverElt xC = G.multiply(x, G.inverse(xS));
    return {xC, xS};
}

}  // namespace covers

// ---------------------------------------------------------------------------
// Alternating-cover class model (label level).
//
// Classes of A~_n are modeled exactly where spin character values can differ
// and merged where they provably agree:
//   * type in D+ and all-odd: four classes (z-tag x a/b half),
//   * type in D+ with an even part: two classes (z-tag),
//   * type all-odd, not strict: two pseudo-classes (z-tag; the possible
//     further A~-splitting carries equal values),
//   * otherwise: one pseudo-class (all spin values vanish).
// Sizes are exact; centralizer orders of merged pseudo-classes are |A~_n| /
// size, which is correct up to a factor of 2 - harmless for p-local tests
// with p odd.

struct AltClassLabel {
    Partition type;
    int zTag = 1;   // +1 / -1; 0 for the fully merged case
    int half = 0;   // 0: no half tracked; 1: a-half (canonical rep); 2: b-half

    bool operator==(const AltClassLabel&) const = default;
    bool operator<(const AltClassLabel& o) const {
        if (type != o.type) return type < o.type;
        if (zTag != o.zTag) return zTag > o.zTag;
        return half < o.half;
    }
};

struct AltClassInfo {
    AltClassLabel label;
    BigInt size;
    BigInt centralizer;
    bool merged = false;
};

namespace covers {

inline std::vector<AltClassInfo> alt_classes(int n) {
    using namespace partitions;
    std::vector<AltClassInfo> out;
    BigInt nfact = factorial(n);
    for (const auto& pi : all_partitions(n)) {
        if (sigma(pi) != 1) continue;  // odd permutations are not in A_n
        BigInt zpi = centralizer_order(pi);
        bool strictPlus = is_strict(pi);  // sigma = 1 here, so strict => D+
        bool allOdd = all_parts_odd(pi);
        if (strictPlus && allOdd) {
            BigInt size = nfact / (2 * zpi);
            for (int zt : {1, -1})
                for (int half : {1, 2}) out.push_back({{pi, zt, half}, size, 2 * zpi, false});
        } else if (strictPlus) {
            BigInt size = nfact / zpi;
            for (int zt : {1, -1}) out.push_back({{pi, zt, 1}, size, zpi, false});
        } else if (allOdd) {
            BigInt size = nfact / zpi;
            for (int zt : {1, -1}) out.push_back({{pi, zt, 0}, size, zpi, true});
        } else {
            out.push_back({{pi, 0, 0}, 2 * nfact / zpi, zpi / 2, true});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const AltClassInfo& a, const AltClassInfo& b) { return a.label < b.label; });
    return out;
}

}  // namespace covers

// ---------------------------------------------------------------------------
// Exhaustive cover-subgroup machinery (desk-scale groups only).

class EnumeratedCover {
public:
    EnumeratedCover(std::shared_ptr<CoverGroup> group, std::vector<CoverElt> generators)
        : G_(std::move(group)) {
        generators.push_back(G_->z());
        // BFS closure, remembering one generator word per element.
        add_element(G_->identity(), -1, -1);
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int xi : frontier) {
                for (size_t gi = 0; gi < generators.size(); ++gi) {
                    CoverElt y = G_->multiply(elements_[xi], generators[gi]);
                    if (!index_.count(y)) {
                        add_element(y, xi, static_cast<int>(gi));
                        next.push_back(static_cast<int>(elements_.size()) - 1);
                    }
                }
            }
            frontier = std::move(next);
        }
        gens_ = std::move(generators);
        build_classes();
    }

    const CoverGroup& group() const { return *G_; }
    std::shared_ptr<CoverGroup> group_ptr() const { return G_; }
    size_t order() const { return elements_.size(); }
    const std::vector<CoverElt>& elements() const { return elements_; }

    bool contains(const CoverElt& x) const { return index_.count(x) != 0; }
    int index_of(const CoverElt& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) throw std::domain_error("enumerated cover: element not in subgroup");
        return it->second;
    }

    int num_classes() const { return static_cast<int>(classReps_.size()); }
    int class_of(const CoverElt& x) const { return classOf_[index_of(x)]; }
    const CoverElt& class_rep(int c) const { return elements_[classReps_[c]]; }
    BigInt class_size(int c) const { return classSizes_[c]; }
    BigInt centralizer_order(int c) const { return BigInt(elements_.size()) / classSizes_[c]; }

    bool conjugate_in_group(const CoverElt& a, const CoverElt& b) const {
        return class_of(a) == class_of(b);
    }

    const std::vector<CoverElt>& generators() const { return gens_; }

    // Generator word (indices into generators()) with product equal to x.
    std::vector<int> word_for(const CoverElt& x) const {
        std::vector<int> word;
        int i = index_of(x);
        while (parent_[i] >= 0) {
            word.push_back(parentGen_[i]);
            i = parent_[i];
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

private:
    std::shared_ptr<CoverGroup> G_;
    std::vector<CoverElt> gens_;
    std::vector<CoverElt> elements_;
    std::map<CoverElt, int> index_;
    std::vector<int> parent_, parentGen_;
    std::vector<int> classOf_;
    std::vector<int> classReps_;
    std::vector<BigInt> classSizes_;

    void add_element(const CoverElt& x, int parent, int gen) {
        index_[x] = static_cast<int>(elements_.size());
        elements_.push_back(x);
        parent_.push_back(parent);
        parentGen_.push_back(gen);
    }

    void build_classes() {
        classOf_.assign(elements_.size(), -1);
        for (size_t i = 0; i < elements_.size(); ++i) {
            if (classOf_[i] >= 0) continue;
            int cid = static_cast<int>(classReps_.size());
            classReps_.push_back(static_cast<int>(i));
            std::vector<int> orbit{static_cast<int>(i)};
            classOf_[i] = cid;
            for (size_t head = 0; head < orbit.size(); ++head) {
                const CoverElt& x = elements_[orbit[head]];
                for (const auto& g : gens_) {
                    CoverElt y = G_->conjugate(g, x);
                    int yi = index_of(y);
                    if (classOf_[yi] < 0) {
                        classOf_[yi] = cid;
                        orbit.push_back(yi);
                    }
                }
            }
            classSizes_.push_back(BigInt(orbit.size()));
        }
    }
};

// ---------------------------------------------------------------------------
// The normalizer subgroup N_p inside S_p and the wreath-type machinery.

struct NpStructure {
    int p;
    long primitiveRoot;
    Perm y0;                      // the p-cycle (0 1 ... p-1)
    Perm y1;                      // j -> u*j mod p, a (p-1)-cycle fixing 0
    // Class representatives: index 0 = y0-class, 1..p-2 = y1^k, p-1 = identity.
    std::vector<Perm> classReps;
};

namespace covers {

inline long primitive_root_mod(long p) {
    auto isPrimitive = [&](long u) {
        long v = 1;
        for (long k = 1; k < p - 1; ++k) {
            v = (v * u) % p;
            if (v == 1) return false;
        }
        return true;
    };
    for (long u = 2; u < p; ++u)
        if (isPrimitive(u)) return u;
    throw std::logic_error("no primitive root found");
}

inline NpStructure np_structure(int p) {
    NpStructure s;
    s.p = p;
    s.primitiveRoot = primitive_root_mod(p);
    s.y0 = perms::identity(p);
    for (int j = 0; j < p; ++j) s.y0[j] = (j + 1) % p;
    s.y1 = perms::identity(p);
    for (int j = 0; j < p; ++j) s.y1[j] = static_cast<int>((s.primitiveRoot * j) % p);
    s.classReps.push_back(s.y0);
    Perm pw = s.y1;
    for (int k = 1; k <= p - 2; ++k) {
        s.classReps.push_back(pw);
        pw = perms::compose(pw, s.y1);
    }
    s.classReps.push_back(perms::identity(p));  // y1^{p-1} = 1
    return s;
}

// Embed a permutation of block `b` (p points) into [p*t].
inline Perm embed_block(const Perm& local, int p, int t, int b) {
    Perm g = perms::identity(p * t);
    for (int j = 0; j < p; ++j) g[b * p + j] = b * p + local[j];
    return g;
}

// The block permutation sigma as a pt-point permutation (blocks move rigidly).
inline Perm block_perm(const Perm& sigma, int p) {
    int t = static_cast<int>(sigma.size());
    Perm g(p * t);
    for (int b = 0; b < t; ++b)
        for (int j = 0; j < p; ++j) g[b * p + j] = sigma[b] * p + j;
    return g;
}

// Is the pt-permutation inside N_p wr S_t (blocks permuted, local parts in N_p)?
inline bool in_np_wreath(const Perm& g, const NpStructure& np, int t) {
    int p = np.p;
    std::set<Perm> npSet;
    // N_p is tiny; build it once per call site if needed.  Here: membership by
    // generation test through y0, y1 closure.
    std::vector<Perm> frontier{perms::identity(p)};
    npSet.insert(perms::identity(p));
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto& x : frontier)
            for (const Perm* gen : {&np.y0, &np.y1}) {
                Perm y = perms::compose(x, *gen);
                if (npSet.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    for (int b = 0; b < t; ++b) {
        int target = g[b * p] / p;
        Perm local(p);
        for (int j = 0; j < p; ++j) {
            int img = g[b * p + j];
            if (img / p != target) return false;
            local[j] = img % p;
        }
        if (!npSet.count(local)) return false;
    }
    return true;
}

// Wreath type of a pt-permutation in N_p wr S_t: pi_j collects the lengths of
// the block-cycles whose cycle product is conjugate to y_j in N_p.
//   index 0 = y0-class (order p), 1..p-2 = y1^k classes, p-1 = identity.
struct WreathType {
    std::vector<Partition> parts;  // size p, indexed as above

    bool operator==(const WreathType&) const = default;
    bool operator<(const WreathType& o) const { return parts < o.parts; }
};

inline int np_class_of(const Perm& local, const NpStructure& np, const EnumeratedCover* npGroup = nullptr) {
    // Underlying N_p class: order p => y0-class; identity => p-1; otherwise
    // match against the powers of y1 by conjugacy in N_p.  Conjugacy of
    // p'-elements in N_p = C_p x| C_{p-1}: y1^k ~ y1^l iff k = l (the quotient
    // C_{p-1} is abelian and the classes are the cosets y1^k C_p intersected..).
    (void)npGroup;
    if (perms::is_identity(local)) return np.p - 1;
    int ord = perms::order(local);
    if (ord == np.p) return 0;
    // Determine k from the action on the quotient: local = c * y1^k maps
    // 1 -> u^k (mod p) after stripping the C_p part: the C_p component shifts
    // all points equally, so k is read off from local(x) - local(0).
    int p = np.p;
    int shift = local[0];
    long diff = ((local[1] - shift) % p + p) % p;
    // diff = u^k with u the primitive root.
    long v = 1;
    for (int k = 1; k <= p - 2; ++k) {
        v = (v * np.primitiveRoot) % p;
        if (v == diff) return k;
    }
    throw std::logic_error("np_class_of: element not in N_p");
}

inline WreathType wreath_type(const Perm& g, const NpStructure& np, int t) {
    int p = np.p;
    WreathType ty;
    ty.parts.assign(p, {});
    // Block permutation.
    Perm sigma(t);
    for (int b = 0; b < t; ++b) sigma[b] = g[b * p] / p;
    std::vector<bool> seen(t, false);
    for (int b0 = 0; b0 < t; ++b0) {
        if (seen[b0]) continue;
        // Follow the block cycle; compose the local maps.
        std::vector<int> blocks;
        int b = b0;
        while (!seen[b]) {
            seen[b] = true;
            blocks.push_back(b);
            b = sigma[b];
        }
        // f = local map around the cycle, starting and ending at block b0.
        Perm f = perms::identity(p);
        int cur = b0;
        for (size_t step = 0; step < blocks.size(); ++step) {
            Perm local(p);
            for (int j = 0; j < p; ++j) local[j] = g[cur * p + j] % p;
            f = perms::compose(local, f);
            cur = sigma[cur];
        }
        int cls = np_class_of(f, np);
        ty.parts[cls].push_back(static_cast<int>(blocks.size()));
    }
    for (auto& part : ty.parts) std::sort(part.begin(), part.end(), std::greater<int>());
    return ty;
}

// Centralizer order of an element of type ty in N_p wr S_t.
inline BigInt wreath_centralizer_order(const WreathType& ty, int p) {
    BigInt z = 1;
    for (int j = 0; j < p; ++j) {
        BigInt cj;  // |C_{N_p}(y_j)|
        if (j == 0) cj = p;
        else if (j == p - 1) cj = BigInt(p) * (p - 1);
        else cj = p - 1;
        std::map<int, int> mult;
        for (int len : ty.parts[j]) mult[len]++;
        for (auto [len, m] : mult) {
            for (int k = 0; k < m; ++k) z *= BigInt(len) * cj;
            for (int k = 2; k <= m; ++k) z *= k;
        }
    }
    return z;
}

inline bool wreath_type_p_regular(const WreathType& ty) { return ty.parts[0].empty(); }

}  // namespace covers
}  // namespace spincover
