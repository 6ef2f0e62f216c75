#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "spincover/blocks.hpp"
#include "spincover/sym_chars.hpp"

using namespace spincover;

TEST_CASE("block descriptors") {
    auto B = blocks::block_of({4, 2}, 3, Side::sym);
    CHECK(B.barCore == StrictPartition{});
    CHECK(B.weight == 2);
    CHECK(B.signVariant == 0);
    CHECK(B.abelian_defect());

    auto C = blocks::block_of({2, 1}, 5, Side::sym);
    CHECK(C.barCore == StrictPartition{2, 1});
    CHECK(C.weight == 0);
    CHECK(C.signVariant == +1);  // sigma = -1, weight 0: single-character block

    auto D = blocks::block_of({3}, 3, Side::sym);
    CHECK(D.barCore == StrictPartition{});
    CHECK(D.weight == 1);
}

TEST_CASE("block character lists") {
    // p=3, core empty, n=6.
    BlockDescriptor B{3, 6, {}, 2, Side::sym, 0};
    auto chars = blocks::block_characters(B);
    std::set<StrictPartition> lams;
    int pairs = 0;
    for (auto& c : chars) {
        lams.insert(c.lambda);
        if (c.variant != 0) ++pairs;
    }
    for (auto& lam : lams)
        CHECK(partitions::bar_core_quotient(lam, 3).core == StrictPartition{});
    CHECK(pairs % 2 == 0);
    // weight 0: exactly the core's own label(s).
    BlockDescriptor W0{3, 2, {2}, 0, Side::sym, +1};
    auto w0chars = blocks::block_characters(W0);
    REQUIRE(w0chars.size() == 1);
    CHECK(w0chars[0].lambda == StrictPartition{2});
    CHECK(w0chars[0].variant == +1);
}

TEST_CASE("every spin label lies in exactly one block") {
    for (int n = 1; n <= 14; ++n) {
        for (int p : {3, 5}) {
            std::map<std::pair<StrictPartition, int>, int> seen;  // (core, signVariant) -> count
            int total = 0;
            std::set<std::pair<StrictPartition, int>> descriptors;
            for (const auto& lambda : partitions::strict_partitions(n)) {
                auto B = blocks::block_of(lambda, p, Side::sym);
                descriptors.insert({B.barCore, B.signVariant});
                if (B.weight == 0 && B.signVariant != 0)
                    descriptors.insert({B.barCore, -1});
            }
            for (auto& [key, sv] : descriptors) {
                BlockDescriptor B{p, n, key, (n - partitions::size_of(key)) / p, Side::sym, sv};
                total += static_cast<int>(blocks::block_characters(B).size());
            }
            int expected = 0;
            for (const auto& lambda : partitions::strict_partitions(n))
                expected += partitions::sigma(lambda) == 1 ? 1 : 2;
            CHECK(total == expected);
        }
    }
}

TEST_CASE("psi bijectivity and sign preservation") {
    for (int n = 1; n <= 14; ++n) {
        for (int p : {3, 5}) {
            std::map<StrictPartition, std::set<MultiPartition>> images;
            for (const auto& lambda : partitions::strict_partitions(n)) {
                auto B = blocks::block_of(lambda, p, Side::sym);
                auto q = blocks::psi(lambda, p, B.barCore);
                CHECK(partitions::size_of(q) == B.weight);
                bool fresh = images[B.barCore].insert(q).second;
                CHECK(fresh);  // injective per core at fixed n
                if (partitions::sigma(B.barCore) == 1)
                    CHECK(partitions::sigma(lambda) == partitions::sigma(q));
            }
            // Image is all of Delta_w at fixed weight.
            for (auto& [core, qs] : images) {
                int w = (n - partitions::size_of(core)) / p;
                CHECK(qs.size() == partitions::delta_tuples(w, p).size());
            }
        }
    }
    CHECK_THROWS_AS(blocks::psi({3}, 3, {1}), std::domain_error);
}

TEST_CASE("brauer data") {
    BlockDescriptor trivial{3, 2, {2}, 0, Side::sym, +1};
    CHECK(blocks::brauer_data(trivial).defectGroup == "trivial");
    BlockDescriptor B{3, 6, {}, 2, Side::sym, 0};
    auto D = blocks::brauer_data(B);
    CHECK(D.abelianDefect);
    CHECK(D.defectGroup == "C_3^2");
    BlockDescriptor neg{3, 5, {2}, 1, Side::sym, 0};
    CHECK(blocks::brauer_data(neg).correspondentIdempotent.find("e+") != std::string::npos);
    BlockDescriptor altB{3, 4, {1}, 1, Side::alt, 0};
    CHECK(blocks::brauer_data(altB).correspondentIdempotent.find("ebar+") != std::string::npos);
    BlockDescriptor big{3, 9, {}, 3, Side::sym, 0};
    CHECK_FALSE(blocks::brauer_data(big).abelianDefect);
}

TEST_CASE("restriction C-block equivalence refines into bar-core blocks") {
    // C = classes with no part an odd multiple of p; the res_C Gram graph's
    // components must sit inside single bar-core blocks.
    SpinSymTable T;
    int p = 3;
    for (int n = 3; n <= 8; ++n) {
        auto labels = sym_spin_labels(n);
        auto classes = covers::sym_classes(n);
        auto inC = [&](const Partition& type) {
            for (int part : type)
                if (part % p == 0 && (part / p) % 2 == 1) return false;
            return true;
        };
        size_t m = labels.size();
        std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) {
                CycloNum sum;
                for (auto& cls : classes) {
                    if (!inC(cls.label.type)) continue;
                    CycloNum a = T.value(labels[i].lambda, labels[i].variant, cls.label.type, cls.label.tag);
                    CycloNum b = T.value(labels[j].lambda, labels[j].variant, cls.label.type, cls.label.tag);
                    sum += CycloNum(Rational(cls.size)) * a * b.conjugate();
                }
                adj[i][j] = !sum.is_zero();
            }
        }
        // connected components
        std::vector<int> comp(m, -1);
        int nc = 0;
        for (size_t i = 0; i < m; ++i) {
            if (comp[i] >= 0) continue;
            std::vector<size_t> stack{i};
            comp[i] = nc;
            while (!stack.empty()) {
                size_t x = stack.back();
                stack.pop_back();
                for (size_t j = 0; j < m; ++j)
                    if (adj[x][j] && comp[j] < 0) {
                        comp[j] = nc;
                        stack.push_back(j);
                    }
            }
            ++nc;
        }
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (comp[i] == comp[j]) {
                    auto Bi = blocks::block_of(labels[i].lambda, p, Side::sym);
                    auto Bj = blocks::block_of(labels[j].lambda, p, Side::sym);
                    CHECK(Bi.barCore == Bj.barCore);
                }
    }
}
