#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "spincover/isometry.hpp"

using namespace spincover;
using namespace spincover::isometry;

namespace {

WreathCache& cache() {
    static WreathCache c;
    return c;
}
SpinSymTable& spin() {
    static SpinSymTable t;
    return t;
}

SideTable source_of(const IsometryMap& I) {
    return I.side == Side::sym ? sym_source_table(I, spin()) : alt_source_table(I, spin());
}

}  // namespace

TEST_CASE("map structure") {
    auto I = build_I(3, 3, {});
    CHECK(I.w == 1);
    CHECK(I.entries.size() == 3);  // xi_(3), xi^+-_(2,1)
    // bijection: distinct targets, self to self, pairs to pairs
    std::set<std::pair<MultiPartition, int>> targets;
    for (auto& e : I.entries) {
        CHECK(targets.insert({e.target.lambda, e.target.variant}).second);
        CHECK((e.source.variant == 0) == (e.target.variant == 0));
        CHECK((e.sign == 1 || e.sign == -1));
    }
    // counts match the local side
    WreathContext& W = cache().get(3, 1);
    CHECK(I.entries.size() == W.labels().size());
    CHECK_THROWS_AS(build_I(6, 3, {2, 1}), std::domain_error);  // (2,1) carries a 3-bar
    CHECK_THROWS_AS(build_I(3 + 9, 3, {}), std::domain_error);  // w = p out of range
}

TEST_CASE("sign reduction for empty first quotient component") {
    // When the first quotient component is empty, the coefficient reduces to
    // delta * delta * (-1)^{w(p^2-1)/8}.
    int p = 3;
    for (int n : {3, 4, 6, 7}) {
        for (const auto& core : partitions::strict_partitions(n % p == 0 ? 0 : n % p)) {
            if (partitions::sigma(core) != 1) continue;
            if (!partitions::remove_q_bars(core, p).empty()) continue;
            if ((n - partitions::size_of(core)) % p != 0) continue;
            int w = (n - partitions::size_of(core)) / p;
            if (w <= 0 || w >= p) continue;
            auto I = build_I(n, p, core);
            for (auto& e : I.entries) {
                if (partitions::size_of(e.target.lambda.first) != 0) continue;
                auto bc = partitions::bar_core_quotient(e.source.lambda, p);
                int want = bc.sign * partitions::quotient_sign(bc.quotient, p);
                if ((w * ((p * p - 1) / 8)) % 2) want = -want;
                CHECK(e.sign == want);
            }
        }
    }
}

TEST_CASE("isometry preserves inner products") {
    for (auto [n, p, coreStr] : std::vector<std::tuple<int, int, const char*>>{
             {3, 3, ""}, {4, 3, "1"}, {5, 5, ""}, {6, 3, ""}}) {
        StrictPartition core = partitions::parse_partition(coreStr);
        auto I = build_I(n, p, core);
        WreathContext& W = cache().get(p, I.w);
        SideTable src = source_of(I);
        SideTable tgt = wreath_target_table(I, W);
        // Gram matrices on both sides must agree entry-for-entry (with signs).
        BigInt orderG = 2 * covers::factorial(n);
        BigInt orderGp = BigInt(W.E().order());
        for (size_t a = 0; a < I.entries.size(); ++a) {
            for (size_t b = 0; b < I.entries.size(); ++b) {
                CycloNum lhs;
                auto symcls = covers::sym_classes(n);
                for (size_t k = 0; k < symcls.size(); ++k)
                    lhs += CycloNum(Rational(symcls[k].size)) * src.values[a][k] *
                           src.values[b][k].conjugate();
                lhs /= CycloNum(Rational(orderG));
                CycloNum rhs;
                for (size_t k = 0; k < W.classes().size(); ++k)
                    rhs += CycloNum(Rational(W.classes()[k].size)) * tgt.values[a][k] *
                           tgt.values[b][k].conjugate();
                rhs /= CycloNum(Rational(orderGp));
                CycloNum signed_rhs = CycloNum(I.entries[a].sign * I.entries[b].sign) * rhs;
                CHECK(lhs == signed_rhs);
            }
        }
    }
}

TEST_CASE("broue verification passes and flips are detected") {
    for (auto [n, p, coreStr] : std::vector<std::tuple<int, int, const char*>>{
             {3, 3, ""}, {4, 3, "1"}, {5, 5, ""}}) {
        StrictPartition core = partitions::parse_partition(coreStr);
        for (Side side : {Side::sym, Side::alt}) {
            auto I = side == Side::sym ? build_I(n, p, core) : build_IA(n, p, core);
            auto R = verify_broue(I, spin(), cache());
            CHECK(R.ok());
            CHECK(R.pairsChecked > 0);
            WreathContext& W = cache().get(p, I.w);
            for (size_t e = 0; e < I.entries.size(); ++e) {
                auto If = with_flipped_sign(I, e);
                auto Rf = verify_pairing(If, source_of(If), wreath_target_table(If, W));
                CHECK_FALSE(Rf.ok());
            }
        }
    }
}

TEST_CASE("negative-core blocks cross to the opposite side and verify") {
    // (2,1) is a 5-bar core with sigma = -1.
    auto I = build_I(8, 5, {2, 1});
    CHECK(I.targetAlt);
    auto R = verify_broue(I, spin(), cache());
    CHECK(R.ok());
    auto IA = build_IA(8, 5, {2, 1});
    CHECK_FALSE(IA.targetAlt);
    auto RA = verify_broue(IA, spin(), cache());
    CHECK(RA.ok());
    // flips detected on both
    WreathContext& W = cache().get(5, 1);
    for (size_t e = 0; e < I.entries.size(); ++e) {
        auto If = with_flipped_sign(I, e);
        CHECK_FALSE(verify_pairing(If, source_of(If), wreath_target_table(If, W)).ok());
    }
}

TEST_CASE("alt and sym kernels cohere") {
    // (I_A - I/2)(x, x') vanishes unless x has strict positive type.
    for (auto [n, p, coreStr] :
         std::vector<std::tuple<int, int, const char*>>{{3, 3, ""}, {4, 3, "1"}}) {
        StrictPartition core = partitions::parse_partition(coreStr);
        auto I = build_I(n, p, core);
        auto IA = build_IA(n, p, core);
        WreathContext& W = cache().get(p, I.w);
        SideTable srcI = sym_source_table(I, spin());
        SideTable tgtI = wreath_target_table(I, W);
        SideTable srcA = alt_source_table(IA, spin());
        SideTable tgtA = wreath_target_table(IA, W);
        auto symcls = covers::sym_classes(n);
        auto altcls = covers::alt_classes(n);
        const auto& EA = W.EA();
        for (size_t xa = 0; xa < altcls.size(); ++xa) {
            // matching sym class of the alt class
            const auto& type = altcls[xa].label.type;
            Tag tag;
            if (altcls[xa].label.zTag == 0 || !covers::sym_class_splits(type)) tag = Tag::unsplit;
            else tag = altcls[xa].label.zTag > 0 ? Tag::plus : Tag::minus;
            size_t xs = 0;
            while (!(symcls[xs].label.type == type &&
                     (symcls[xs].label.tag == tag)))
                ++xs;
            for (int ya = 0; ya < EA.num_classes(); ++ya) {
                int ys = W.E().class_of(EA.class_rep(ya));
                size_t ysIdx = 0;
                while (W.classes()[ysIdx].classId != ys) ++ysIdx;
                CycloNum kA, kI;
                for (size_t e = 0; e < IA.entries.size(); ++e) {
                    CycloNum term = srcA.values[e][xa].conjugate() * tgtA.values[e][ya];
                    kA += IA.entries[e].sign > 0 ? term : -term;
                }
                for (size_t e = 0; e < I.entries.size(); ++e) {
                    CycloNum term = srcI.values[e][xs].conjugate() * tgtI.values[e][ysIdx];
                    kI += I.entries[e].sign > 0 ? term : -term;
                }
                CycloNum diff = kA - kI * CycloNum(Rational(1, 2));
                bool strictPositive = partitions::is_strict(type) && partitions::sigma(type) == 1;
                if (!strictPositive) CHECK(diff.is_zero());
            }
        }
    }
}

TEST_CASE("composed correspondent verifies") {
    for (auto [n, p, coreStr] : std::vector<std::tuple<int, int, const char*>>{
             {4, 3, "1"}, {6, 5, "1"}, {9, 5, "3,1"}}) {
        StrictPartition core = partitions::parse_partition(coreStr);
        auto I = build_I(n, p, core);
        ComposedCorrespondent C(I, spin(), cache());
        auto R = C.verify();
        CHECK(R.ok());
        CHECK(R.pairsChecked > 0);
    }
}
