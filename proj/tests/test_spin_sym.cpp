#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "spincover/spin_sym.hpp"
#include "spincover/sym_chars.hpp"

using namespace spincover;

namespace {

CycloNum inner_product_sym(SpinSymTable& T, int n, const SpinCharLabel& a, const SpinCharLabel& b) {
    CycloNum sum;
    for (const auto& cls : covers::sym_classes(n)) {
        CycloNum va = T.value(a.lambda, a.variant, cls.label.type, cls.label.tag);
        CycloNum vb = T.value(b.lambda, b.variant, cls.label.type, cls.label.tag);
        sum += CycloNum(Rational(cls.size)) * va * vb.conjugate();
    }
    return sum / CycloNum(Rational(2 * covers::factorial(n)));
}

CycloNum inner_product_alt(SpinSymTable& T, int n, const SpinCharLabel& a, const SpinCharLabel& b) {
    CycloNum sum;
    for (const auto& cls : covers::alt_classes(n)) {
        CycloNum va = T.alt_value(a.lambda, a.variant, cls.label);
        CycloNum vb = T.alt_value(b.lambda, b.variant, cls.label);
        sum += CycloNum(Rational(cls.size)) * va * vb.conjugate();
    }
    return sum / CycloNum(Rational(covers::factorial(n)));
}

}  // namespace

TEST_CASE("special values on strict negative classes") {
    SpinSymTable T;
    // xi^+_{(2,1)} on the plus class of type (2,1) is i.
    CHECK(T.value({2, 1}, +1, {2, 1}, Tag::plus) == CycloNum::i());
    CHECK(T.value({2, 1}, -1, {2, 1}, Tag::plus) == -CycloNum::i());
    CHECK(T.value({2, 1}, +1, {2, 1}, Tag::minus) == -CycloNum::i());
    // xi_{(1)} is trivial on the identity class.
    CHECK(T.value({1}, 0, {1}, Tag::plus) == CycloNum(1));
    // Vanishing off O_n for self-associate labels.
    CHECK(T.value({3, 1}, 0, {2, 2}, Tag::unsplit).is_zero());
    CHECK(T.value({3, 1}, 0, {2, 1, 1}, Tag::unsplit).is_zero());
}

TEST_CASE("degrees match the bar-length oracle") {
    SpinSymTable T;
    for (int n = 1; n <= 10; ++n) {
        Partition ones(n, 1);
        for (const auto& label : sym_spin_labels(n)) {
            CycloNum deg = T.value(label.lambda, label.variant, ones, Tag::plus);
            CHECK(deg == CycloNum(Rational(SpinSymTable::degree_oracle(label.lambda))));
        }
    }
}

TEST_CASE("sum of squares of spin degrees is n!") {
    SpinSymTable T;
    for (int n = 1; n <= 10; ++n) {
        Partition ones(n, 1);
        CycloNum sum;
        for (const auto& label : sym_spin_labels(n)) {
            CycloNum d = T.value(label.lambda, label.variant, ones, Tag::plus);
            sum += d * d;
        }
        CHECK(sum == CycloNum(Rational(covers::factorial(n))));
    }
}

TEST_CASE("orthonormality of sym spin characters") {
    SpinSymTable T;
    for (int n = 2; n <= 8; ++n) {
        auto labels = sym_spin_labels(n);
        for (size_t i = 0; i < labels.size(); ++i) {
            for (size_t j = i; j < labels.size(); ++j) {
                CycloNum ip = inner_product_sym(T, n, labels[i], labels[j]);
                CHECK(ip == CycloNum(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("associate symmetry") {
    SpinSymTable T;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& label : sym_spin_labels(n)) {
            if (label.variant != 1) continue;
            for (const auto& cls : covers::sym_classes(n)) {
                CycloNum plus = T.value(label.lambda, +1, cls.label.type, cls.label.tag);
                CycloNum minus = T.value(label.lambda, -1, cls.label.type, cls.label.tag);
                int eps = partitions::sigma(cls.label.type);
                CHECK(minus == CycloNum(eps) * plus);
            }
        }
    }
}

TEST_CASE("vanishing pattern of the value theorem") {
    SpinSymTable T;
    for (int n = 3; n <= 9; ++n) {
        for (const auto& label : sym_spin_labels(n)) {
            for (const auto& cls : covers::sym_classes(n)) {
                if (partitions::all_parts_odd(cls.label.type)) continue;
                CycloNum v = T.value(label.lambda, label.variant, cls.label.type, cls.label.tag);
                if (label.variant == 0) CHECK(v.is_zero());
                else if (cls.label.type != label.lambda) CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("recursion order independence") {
    SpinSymTable T;
    std::mt19937 rng(71);
    for (int n = 4; n <= 9; ++n) {
        auto odd = partitions::odd_partitions(n);
        for (const auto& label : sym_spin_labels(n)) {
            for (const auto& pi : odd) {
                CycloNum ref = T.value(label.lambda, label.variant, pi, Tag::plus);
                Partition shuffled = pi;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                CHECK(T.value(label.lambda, label.variant, shuffled, Tag::plus) == ref);
            }
        }
    }
}

TEST_CASE("basic spin values match clifford traces") {
    SpinSymTable T;
    for (int n = 2; n <= 7; ++n) {
        StrictPartition basic{n};
        bool selfAssoc = partitions::sigma(basic) == 1;
        for (Cover cover : {Cover::plus, Cover::minus}) {
            CoverGroup G(n, cover);
            // Determine the +- alignment on the first class with distinct values,
            // then demand consistency everywhere.
            int alignment = 0;
            for (const auto& pi : partitions::odd_partitions(n)) {
                CoverElt rep = covers::canonical_sym_rep(G, pi);
                CliffordElt img = clifford::lift(cover, rep.perm);
                if (rep.sign) img = CycloNum(-1) * img;
                CycloNum trPlus, trMinus;
                if (n % 2 == 1) {
                    trPlus = clifford::cliff_char(clifford::CharVariant::full_plus, img);
                    trMinus = clifford::cliff_char(clifford::CharVariant::full_minus, img);
                } else {
                    trPlus = clifford::cliff_char(clifford::CharVariant::even_plus, img);
                    trMinus = clifford::cliff_char(clifford::CharVariant::even_minus, img);
                }
                if (selfAssoc) {
                    CycloNum want = T.value(basic, 0, pi, Tag::plus);
                    CHECK(trPlus == want);
                    CHECK(trMinus == want);
                } else {
                    CycloNum a = T.value(basic, +1, pi, Tag::plus);
                    CycloNum b = T.value(basic, -1, pi, Tag::plus);
                    if (alignment == 0 && !(trPlus == trMinus)) alignment = (trPlus == a) ? 1 : -1;
                    if (alignment >= 0) {
                        CHECK(trPlus == a);
                        CHECK(trMinus == b);
                    } else {
                        CHECK(trPlus == b);
                        CHECK(trMinus == a);
                    }
                }
            }
        }
    }
}

TEST_CASE("alternating special values") {
    SpinSymTable T;
    // lambda = (3): difference on the a-half of type (3) is i*sqrt(3).
    AltClassLabel a{{3}, 1, 1}, b{{3}, 1, 2};
    CycloNum diff = T.alt_value({3}, +1, a) - T.alt_value({3}, -1, a);
    CHECK(diff == CycloNum::i() * CycloNum::sqrt_odd(3));
    CycloNum diffB = T.alt_value({3}, +1, b) - T.alt_value({3}, -1, b);
    CHECK(diffB == -diff);
    // Restriction degree: xi-bar_{(2,1)}(1) = 1.
    AltClassLabel one{{1, 1, 1}, 1, 0};
    CHECK(T.alt_value({2, 1}, 0, one) == CycloNum(1));
}

TEST_CASE("restriction sum rule") {
    SpinSymTable T;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& lambda : partitions::strict_partitions(n)) {
            if (partitions::sigma(lambda) != 1) continue;
            for (const auto& cls : covers::alt_classes(n)) {
                CycloNum sum = T.alt_value(lambda, +1, cls.label) + T.alt_value(lambda, -1, cls.label);
                // The containing S~-class value.
                Tag tag;
                if (cls.label.zTag == 0) tag = Tag::unsplit;
                else if (covers::sym_class_splits(cls.label.type))
                    tag = cls.label.zTag > 0 ? Tag::plus : Tag::minus;
                else tag = Tag::unsplit;
                CycloNum sym = T.value(lambda, 0, cls.label.type, tag);
                CHECK(sum == sym);
            }
        }
    }
}

TEST_CASE("pair agreement away from the labeling type") {
    SpinSymTable T;
    for (int n = 3; n <= 8; ++n) {
        for (const auto& lambda : partitions::strict_partitions(n)) {
            if (partitions::sigma(lambda) != 1) continue;
            for (const auto& cls : covers::alt_classes(n)) {
                if (cls.label.type == lambda) continue;
                CHECK(T.alt_value(lambda, +1, cls.label) == T.alt_value(lambda, -1, cls.label));
            }
        }
    }
}

TEST_CASE("orthonormality of alternating spin characters") {
    SpinSymTable T;
    for (int n = 3; n <= 8; ++n) {
        auto labels = alt_spin_labels(n);
        for (size_t i = 0; i < labels.size(); ++i)
            for (size_t j = i; j < labels.size(); ++j)
                CHECK(inner_product_alt(T, n, labels[i], labels[j]) == CycloNum(i == j ? 1 : 0));
    }
}

TEST_CASE("ordinary characters sanity") {
    SymCharTable S;
    CHECK(S.value({2, 1}, {1, 1, 1}) == CycloNum(2));
    CHECK(S.value({2, 1}, {3}) == CycloNum(-1));
    CHECK(S.value({2, 1}, {2, 1}).is_zero());
    CHECK(S.value({4}, {2, 2}) == CycloNum(1));
    // Column orthogonality for n = 5 identity column: sum of squares = 5!.
    CycloNum sum;
    for (const auto& lambda : partitions::all_partitions(5)) {
        CycloNum d = S.value(lambda, {1, 1, 1, 1, 1});
        sum += d * d;
    }
    CHECK(sum == CycloNum(120));
}
