#pragma once

// Sparse exact arithmetic in the Clifford algebra C_n (e_j^2 = 1,
// e_j e_k = -e_k e_j), the embeddings phi4 of the double covers, the
// character functionals of C_n and C_n^+, and the 2-cocycle extraction that
// powers the (perm, sign) model of the covers.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "spincover/cyclo.hpp"
#include "spincover/permutations.hpp"

namespace spincover {

enum class Cover { plus, minus };

inline Cover other_cover(Cover c) { return c == Cover::plus ? Cover::minus : Cover::plus; }

namespace clifford_detail {

// Sign of e_I * e_J = sign * e_{I xor J}: (-1)^{#{(i,j) : i in I, j in J, i > j}}.
inline int basis_sign(uint64_t I, uint64_t J) {
    int count = 0;
    while (J) {
        int j = __builtin_ctzll(J);
        J &= J - 1;
        if (j < 63) count += __builtin_popcountll(I >> (j + 1));
    }
    return count % 2 ? -1 : 1;
}

}  // namespace clifford_detail

class CliffordElt {
public:
    explicit CliffordElt(int rank = 0) : rank_(rank) {}

    static CliffordElt one(int rank) {
        CliffordElt x(rank);
        x.terms_[0] = CycloNum(1);
        return x;
    }
    // e_j, 0-based index.
    static CliffordElt generator(int rank, int j) {
        if (j < 0 || j >= rank) throw std::domain_error("clifford: generator index out of range");
        CliffordElt x(rank);
        x.terms_[1ull << j] = CycloNum(1);
        return x;
    }
    static CliffordElt basis(int rank, uint64_t mask, CycloNum coeff = CycloNum(1)) {
        CliffordElt x(rank);
        if (!coeff.is_zero()) x.terms_[mask] = std::move(coeff);
        return x;
    }

    int rank() const { return rank_; }
    const std::map<uint64_t, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycloNum coefficient(uint64_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? CycloNum() : it->second;
    }

    bool is_even() const {
        for (const auto& [mask, c] : terms_)
            if (__builtin_popcountll(mask) % 2) return false;
        return true;
    }

    friend CliffordElt operator+(const CliffordElt& a, const CliffordElt& b) {
        if (a.rank_ != b.rank_) throw std::domain_error("clifford: rank mismatch");
        CliffordElt r = a;
        for (const auto& [mask, c] : b.terms_) {
            auto it = r.terms_.find(mask);
            if (it == r.terms_.end()) r.terms_[mask] = c;
            else {
                it->second += c;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend CliffordElt operator-(const CliffordElt& a, const CliffordElt& b) { return a + (-b); }

    CliffordElt operator-() const {
        CliffordElt r = *this;
        for (auto& [mask, c] : r.terms_) c = -c;
        return r;
    }

    friend CliffordElt operator*(const CliffordElt& a, const CliffordElt& b) {
        if (a.rank_ != b.rank_) throw std::domain_error("clifford: rank mismatch");
        CliffordElt r(a.rank_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                uint64_t mask = ma ^ mb;
                CycloNum c = ca * cb;
                if (clifford_detail::basis_sign(ma, mb) < 0) c = -c;
                auto it = r.terms_.find(mask);
                if (it == r.terms_.end()) {
                    if (!c.is_zero()) r.terms_[mask] = std::move(c);
                } else {
                    it->second += c;
                    if (it->second.is_zero()) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    friend CliffordElt operator*(const CycloNum& s, const CliffordElt& a) {
        CliffordElt r(a.rank_);
        if (s.is_zero()) return r;
        for (const auto& [mask, c] : a.terms_) r.terms_[mask] = s * c;
        return r;
    }

    bool operator==(const CliffordElt& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

private:
    int rank_;
    std::map<uint64_t, CycloNum> terms_;
};

namespace clifford {

// Image of the Coxeter generator t_j (1 <= j <= n-1) under phi_n^+/-:
// (e_j + e_{j+1})/sqrt2, times i for the minus cover.
inline CliffordElt phi(Cover cover, int n, int j) {
    if (j < 1 || j > n - 1) throw std::domain_error("phi: generator index out of range");
    CycloNum scale = CycloNum(1) / CycloNum::sqrt2();
    if (cover == Cover::minus) scale *= CycloNum::i();
    return scale * (CliffordElt::generator(n, j - 1) + CliffordElt::generator(n, j));
}

// Clifford image of the canonical lift of sigma: product of phi over the
// canonical reduced word.
inline CliffordElt lift(Cover cover, const Perm& sigma) {
    int n = static_cast<int>(sigma.size());
    CliffordElt x = CliffordElt::one(n);
    for (int letter : perms::canonical_word(sigma)) x = x * phi(cover, n, letter + 1);
    return x;
}

enum class CharVariant { full_plus, full_minus, even_plus, even_minus };

// The character functionals of Lemma-style C_n / C_n^+ representations: linear
// in c_empty and c_[n].
inline CycloNum cliff_char(CharVariant variant, const CliffordElt& x) {
    int n = x.rank();
    uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
    CycloNum cEmpty = x.coefficient(0), cFull = x.coefficient(full);
    bool even = (variant == CharVariant::even_plus || variant == CharVariant::even_minus);
    bool plus = (variant == CharVariant::full_plus || variant == CharVariant::even_plus);
    CycloNum two(2);
    auto pow2 = [&](int k) {
        CycloNum r(1);
        for (int j = 0; j < k; ++j) r *= two;
        return r;
    };
    auto pow2i = [&](int k) {  // (2i)^k
        CycloNum r(1);
        for (int j = 0; j < k; ++j) r *= two * CycloNum::i();
        return r;
    };
    if (!even) {
        if (n % 2 == 0) return pow2(n / 2) * cEmpty;  // single character
        int k = (n - 1) / 2;
        CycloNum v = pow2(k) * cEmpty;
        CycloNum w = pow2i(k) * cFull;
        return plus ? v + w : v - w;
    }
    if (!x.is_even()) throw std::domain_error("cliff_char: even variant requires an element of C_n^+");
    if (n % 2 == 1) return pow2((n - 1) / 2) * cEmpty;  // single character
    int k = n / 2;
    CycloNum v = pow2(k - 1) * cEmpty;
    CycloNum w = CycloNum::i() * pow2i(k - 1) * cFull;
    return plus ? v + w : v - w;
}

// ---------------------------------------------------------------------------
// Integer fast path for canonical-lift expansions and 2-cocycle signs.
//
// The canonical lift of sigma expands as 2^{-L/2} (i^L for the minus cover)
// times an integer combination of basis elements, where L is the word length.
// Products of two such lifts equal +-2^{(La+Lb-Lab)/2} times the lift of the
// product; the sign is the plus-cover cocycle.

class LiftTable {
public:
    explicit LiftTable(int n) : n_(n) {}

    struct Expansion {
        int length = 0;                    // canonical word length
        std::map<uint64_t, BigInt> terms;  // integer expansion of prod (e_j + e_{j+1})
    };

    const Expansion& expansion(const Perm& sigma) {
        std::lock_guard<std::mutex> lock(mtx_);
        auto it = memo_.find(sigma);
        if (it != memo_.end()) return it->second;
        Expansion exp;
        exp.terms[0] = 1;
        auto word = perms::canonical_word(sigma);
        exp.length = static_cast<int>(word.size());
        for (int letter : word) {
            std::map<uint64_t, BigInt> next;
            for (const auto& [mask, c] : exp.terms) {
                for (int off : {letter, letter + 1}) {
                    uint64_t gen = 1ull << off;
                    uint64_t nm = mask ^ gen;
                    BigInt v = c;
                    if (clifford_detail::basis_sign(mask, gen) < 0) v = -v;
                    auto [slot, fresh] = next.try_emplace(nm, v);
                    if (!fresh) {
                        slot->second += v;
                        if (slot->second == 0) next.erase(slot);
                    }
                }
            }
            exp.terms = std::move(next);
        }
        return memo_.emplace(sigma, std::move(exp)).first->second;
    }

    // Sign s = +-1 with lift(a) * lift(b) = z^{(1-s)/2} lift(a b) in the cover.
    int cocycle_sign(Cover cover, const Perm& a, const Perm& b) {
        const Expansion& ea = expansion(a);
        const Expansion& eb = expansion(b);
        Perm ab = perms::compose(a, b);
        const Expansion& eab = expansion(ab);
        int excess = ea.length + eb.length - eab.length;
        if (excess % 2 != 0) throw std::logic_error("cocycle: odd excess length");
        // Probe one coefficient of the product.
        uint64_t K = eab.terms.begin()->first;
        const BigInt& cK = eab.terms.begin()->second;
        BigInt acc = 0;
        for (const auto& [I, cI] : ea.terms) {
            auto it = eb.terms.find(I ^ K);
            if (it == eb.terms.end()) continue;
            BigInt v = cI * it->second;
            if (clifford_detail::basis_sign(I, I ^ K) < 0) v = -v;
            acc += v;
        }
        BigInt expect = cK;
        for (int j = 0; j < excess / 2; ++j) expect *= 2;
        int sign;
        if (acc == expect) sign = 1;
        else if (acc == -expect) sign = -1;
        else throw std::logic_error("cocycle: probe mismatch (expansion bug)");
        if (cover == Cover::minus && (excess / 2) % 2 != 0) sign = -sign;
        return sign;
    }

private:
    int n_;
    std::mutex mtx_;
    std::map<Perm, Expansion> memo_;
};

}  // namespace clifford
}  // namespace spincover
