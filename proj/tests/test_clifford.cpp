#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spincover/clifford.hpp"

using namespace spincover;
using clifford::CharVariant;

namespace {

Perm cycle_perm(int n, const std::vector<int>& pts) {
    Perm p = perms::identity(n);
    for (size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
    return p;
}

// Odd-order lift of an odd-order permutation, at the Clifford level:
// lift(sigma)^(m+1) where m = order(sigma).
CliffordElt odd_order_lift(Cover cover, const Perm& sigma) {
    CliffordElt x = clifford::lift(cover, sigma);
    CliffordElt r = CliffordElt::one(static_cast<int>(sigma.size()));
    int m = perms::order(sigma);
    for (int j = 0; j < m + 1; ++j) r = r * x;
    return r;
}

}  // namespace

TEST_CASE("defining relations") {
    int n = 4;
    auto e = [&](int j) { return CliffordElt::generator(n, j); };
    CHECK(e(0) * e(0) == CliffordElt::one(n));
    CHECK(e(0) * e(1) == -(e(1) * e(0)));
    CHECK((e(0) * e(1)) * e(0) == -e(1));
    CHECK(CliffordElt::one(n) * e(2) == e(2));
}

TEST_CASE("phi images satisfy the cover presentations") {
    int n = 5;
    for (Cover cover : {Cover::plus, Cover::minus}) {
        CycloNum z(-1);  // phi(z) = -1
        auto t = [&](int j) { return clifford::phi(cover, n, j); };
        // t_j^2 = 1 (plus) or z (minus).
        CliffordElt sq = t(1) * t(1);
        if (cover == Cover::plus) CHECK(sq == CliffordElt::one(n));
        else CHECK(sq == z * CliffordElt::one(n));
        // t_j t_k = z t_k t_j for |j-k| > 1.
        CHECK(t(1) * t(3) == z * (t(3) * t(1)));
        // (t_j t_{j+1})^3 = z (plus) or 1 (minus).
        CliffordElt braid = t(2) * t(3);
        CliffordElt cube = braid * braid * braid;
        if (cover == Cover::plus) CHECK(cube == z * CliffordElt::one(n));
        else CHECK(cube == CliffordElt::one(n));
        // Conjugation action from the embedding lemma.
        for (int j = 1; j < n; ++j) {
            CliffordElt lhs = t(j) * CliffordElt::generator(n, j - 1) * t(j) * t(j) * t(j);
            // t_j^{-1} = t_j (plus) or z t_j (minus); z^2 = 1 handles both.
            CliffordElt inv = (cover == Cover::plus) ? t(j) : z * t(j);
            CHECK(t(j) * CliffordElt::generator(n, j - 1) * inv == CliffordElt::generator(n, j));
        }
    }
}

TEST_CASE("squared phi image of (e1+e2)/sqrt2") {
    int n = 3;
    CliffordElt x = clifford::phi(Cover::plus, n, 1);
    CHECK(x * x == CliffordElt::one(n));
}

TEST_CASE("clifford characters") {
    // n even, full: value on 1 is 2^k.
    CHECK(clifford::cliff_char(CharVariant::full_plus, CliffordElt::one(4)) == CycloNum(4));
    // vanishing when c_empty = c_full = 0.
    CHECK(clifford::cliff_char(CharVariant::full_plus, CliffordElt::generator(5, 2)).is_zero());
    // even variants demand even elements.
    CHECK_THROWS_AS(clifford::cliff_char(CharVariant::even_plus, CliffordElt::generator(4, 0)),
                    std::domain_error);
}

TEST_CASE("q-cycle trace value") {
    for (int q : {1, 3, 5, 7, 9}) {
        std::vector<int> pts(q);
        std::iota(pts.begin(), pts.end(), 0);
        Perm c = cycle_perm(q, pts);
        CliffordElt tau = odd_order_lift(Cover::plus, c);
        int want = ((q * q - 1) / 8) % 2 ? -1 : 1;
        CHECK(clifford::cliff_char(CharVariant::full_plus, tau) == CycloNum(want));
        CHECK(clifford::cliff_char(CharVariant::full_minus, tau) == CycloNum(want));
    }
}

TEST_CASE("even grading respected") {
    std::mt19937 rng(5);
    int n = 6;
    for (int iter = 0; iter < 20; ++iter) {
        Perm a = perms::identity(n);
        std::shuffle(a.begin(), a.end(), rng);
        if (perms::parity(a) != 1) std::swap(a[0], a[1]);
        CHECK(clifford::lift(Cover::plus, a).is_even());
    }
}

TEST_CASE("canonical word reproduces the permutation") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 3 + static_cast<int>(rng() % 6);
        Perm a = perms::identity(n);
        std::shuffle(a.begin(), a.end(), rng);
        Perm prod = perms::identity(n);
        for (int letter : perms::canonical_word(a))
            prod = perms::compose(prod, perms::transposition(n, letter, letter + 1));
        CHECK(prod == a);
    }
}

TEST_CASE("cocycle signs") {
    int n = 5;
    clifford::LiftTable table(n);
    Perm id = perms::identity(n);
    CHECK(table.cocycle_sign(Cover::plus, id, id) == 1);
    // Disjoint transpositions anticommute: t_1 t_3 = z t_3 t_1.
    Perm s1 = perms::transposition(n, 0, 1), s3 = perms::transposition(n, 2, 3);
    int ab = table.cocycle_sign(Cover::plus, s1, s3);
    int ba = table.cocycle_sign(Cover::plus, s3, s1);
    CHECK(ab * ba == -1);
    // Cocycle condition on random triples, both covers.
    std::mt19937 rng(41);
    for (Cover cover : {Cover::plus, Cover::minus}) {
        for (int iter = 0; iter < 60; ++iter) {
            Perm a = perms::identity(n), b = perms::identity(n), c = perms::identity(n);
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            std::shuffle(c.begin(), c.end(), rng);
            int lhs = table.cocycle_sign(cover, a, b) * table.cocycle_sign(cover, perms::compose(a, b), c);
            int rhs = table.cocycle_sign(cover, b, c) * table.cocycle_sign(cover, a, perms::compose(b, c));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cocycle matches exact clifford products") {
    int n = 4;
    clifford::LiftTable table(n);
    std::mt19937 rng(43);
    for (Cover cover : {Cover::plus, Cover::minus}) {
        for (int iter = 0; iter < 40; ++iter) {
            Perm a = perms::identity(n), b = perms::identity(n);
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            CliffordElt lhs = clifford::lift(cover, a) * clifford::lift(cover, b);
            CliffordElt rhs = clifford::lift(cover, perms::compose(a, b));
            int s = table.cocycle_sign(cover, a, b);
            CHECK(lhs == CycloNum(s) * rhs);
        }
    }
}

TEST_CASE("term count stays within the word bound") {
    int n = 8;
    clifford::LiftTable table(n);
    std::mt19937 rng(47);
    for (int iter = 0; iter < 10; ++iter) {
        Perm a = perms::identity(n);
        std::shuffle(a.begin(), a.end(), rng);
        const auto& exp = table.expansion(a);
        CHECK(exp.terms.size() <= (1u << std::min(exp.length, n)));
    }
}
