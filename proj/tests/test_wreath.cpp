#include <catch2/catch_amalgamated.hpp>

#include "spincover/wreath.hpp"
#include "spincover/wreath_oracle.hpp"

using namespace spincover;

namespace {

WreathCache& shared_cache() {
    static WreathCache cache;
    return cache;
}

std::vector<WreathCharLabel> alt_labels(const WreathContext& W) {
    std::vector<WreathCharLabel> out;
    for (auto& lambda : partitions::delta_tuples(W.t, W.p)) {
        if (partitions::sigma(lambda) == -1) out.push_back({lambda, 0});
        else {
            out.push_back({lambda, +1});
            out.push_back({lambda, -1});
        }
    }
    return out;
}

bool has_part(const Partition& p, auto pred) {
    return std::any_of(p.begin(), p.end(), pred);
}

}  // namespace

TEST_CASE("N~_p base characters") {
    for (int p : {3, 5, 7}) {
        WreathContext& W = shared_cache().get(p, 1);
        const CoverElt& a = W.anchor_a();
        CycloNum anchor = (CycloNum(-1) + i_power((p - 1) / 2) * CycloNum::sqrt_odd(p)) *
                          CycloNum(Rational(1, 2));
        CHECK(W.zetaBar0(+1, a) == anchor);
        // zeta_0 on an order-p element is -1 (the two Gauss halves sum to -1).
        CHECK(W.zeta0(a) == CycloNum(-1));
        // Lemma: the two constituents agree on every p'-element.
        for (int c = 0; c < W.npA().num_classes(); ++c) {
            const CoverElt& g = W.npA().class_rep(c);
            if (perms::order(g.perm) % p == 0) continue;
            CHECK(W.zetaBar0(+1, g) == W.zetaBar0(-1, g));
        }
        // Degree of zeta_0 is p - 1.
        CHECK(W.zeta0(W.G().identity()) == CycloNum(p - 1));
    }
}

TEST_CASE("exten closed form") {
    WreathContext& W = shared_cache().get(3, 2);
    std::vector<int> blocks{0, 1};
    // Identity: Exten+ = (p-1)^t.
    CHECK(W.exten(+1, W.G().identity(), perms::identity(2), blocks) == CycloNum(4));
    // A cycle with an odd local part kills the value.
    CoverElt y1odd = W.embed_np_pub(W.np().y1, 0);
    CHECK(W.exten(+1, y1odd, perms::identity(2), blocks).is_zero());
    // t = 1: Exten^+(a) = zeta0(a) = -1.
    WreathContext& W1 = shared_cache().get(3, 1);
    CHECK(W1.exten(+1, W1.anchor_a(), perms::identity(1), {0}) == CycloNum(-1));
}

TEST_CASE("wreath class data") {
    WreathContext& W = shared_cache().get(3, 1);
    CHECK(W.E().order() == 12);
    CHECK(W.classes().size() == 6);
    BigInt sum = 0;
    for (auto& ci : W.classes()) sum += ci.size;
    CHECK(sum == 12);
    // identity type is split by convention (z distinguishes).
    covers::WreathType idType;
    idType.parts = {{}, {}, {1}};
    CHECK_NOTHROW(W.class_index(idType, Tag::plus));
    CHECK_NOTHROW(W.class_index(idType, Tag::minus));
}

TEST_CASE("character count and degrees per the classification") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        auto labels = W.labels();
        int plusCount = static_cast<int>(partitions::delta_tuples_signed(t, p, 1).size());
        int minusCount = static_cast<int>(partitions::delta_tuples_signed(t, p, -1).size());
        CHECK(static_cast<int>(labels.size()) == plusCount + 2 * minusCount);
        // spin-faithful class pairs = number of spin characters
        int pairs = 0;
        for (auto& ci : W.classes())
            if (ci.tag == Tag::plus) ++pairs;
        CHECK(static_cast<int>(labels.size()) == pairs);
        // sum of squared degrees = |G|/2
        int idClass = -1;
        for (size_t i = 0; i < W.classes().size(); ++i) {
            const auto& ty = W.classes()[i].type;
            if (static_cast<int>(ty.parts[p - 1].size()) == t && W.classes()[i].tag == Tag::plus)
                idClass = static_cast<int>(i);
        }
        REQUIRE(idClass >= 0);
        CycloNum sq;
        for (auto& label : labels) {
            CycloNum d = W.character(label)[W.classes()[idClass].classId];
            sq += d * d;
        }
        CHECK(sq == CycloNum(Rational(BigInt(W.E().order()) / 2)));
    }
}

TEST_CASE("orthonormality of the wreath spin characters") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        auto labels = W.labels();
        std::vector<const std::vector<CycloNum>*> tabs;
        for (auto& l : labels) tabs.push_back(&W.character(l));
        for (size_t i = 0; i < labels.size(); ++i) {
            for (size_t j = i; j < labels.size(); ++j) {
                CycloNum sum;
                for (auto& ci : W.classes())
                    sum += CycloNum(Rational(ci.size)) * (*tabs[i])[ci.classId] *
                           (*tabs[j])[ci.classId].conjugate();
                CHECK(sum / CycloNum(Rational(BigInt(W.E().order()))) == CycloNum(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("strip rule agrees with the direct construction") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        for (auto& label : W.labels()) {
            const auto& tab = W.character(label);
            for (size_t ci = 0; ci < W.classes().size(); ++ci)
                CHECK(W.mn_value(label, static_cast<int>(ci)) == tab[W.classes()[ci].classId]);
        }
    }
}

TEST_CASE("matrix oracle confirms the formula tables") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        WreathOracle O(W);
        CHECK(O.associator_involutive());
        CHECK(O.associator_intertwines());
        CHECK(O.braid_identity());
        CHECK(O.exten_trace_matches());
        for (auto& label : W.labels()) {
            if (label.variant < 0) continue;
            auto otab = O.table(label);
            const auto& ftab = W.character(label);
            auto matches = [&](bool twist) {
                for (auto& ci : W.classes()) {
                    CycloNum o = otab[ci.classId];
                    if (twist && perms::parity(W.E().class_rep(ci.classId).perm) < 0) o = -o;
                    if (!(o == ftab[ci.classId])) return false;
                }
                return true;
            };
            CHECK((matches(false) || (label.variant != 0 && matches(true))));
        }
    }
}

TEST_CASE("alternating characters: restriction and orthonormality") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        const auto& EA = W.EA();
        for (auto& lambda : partitions::delta_tuples(t, p)) {
            if (partitions::sigma(lambda) != 1) continue;
            const auto& ap = W.alt_character({lambda, +1});
            const auto& am = W.alt_character({lambda, -1});
            const auto& full = W.character({lambda, 0});
            for (int c = 0; c < EA.num_classes(); ++c)
                CHECK(ap[c] + am[c] == full[W.E().class_of(EA.class_rep(c))]);
        }
        auto labels = alt_labels(W);
        std::vector<const std::vector<CycloNum>*> tabs;
        for (auto& l : labels) tabs.push_back(&W.alt_character(l));
        for (size_t i = 0; i < labels.size(); ++i) {
            for (size_t j = i; j < labels.size(); ++j) {
                CycloNum sum;
                for (int c = 0; c < EA.num_classes(); ++c)
                    sum += CycloNum(Rational(EA.class_size(c))) * (*tabs[i])[c] *
                           (*tabs[j])[c].conjugate();
                CHECK(sum / CycloNum(Rational(BigInt(EA.order()))) == CycloNum(i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("character value lemma suite at unit scale") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{3, 2}, {5, 1}}) {
        WreathContext& W = shared_cache().get(p, t);
        CycloNum rootP = CycloNum::sqrt_odd(p);
        for (auto& lambda : partitions::delta_tuples(t, p)) {
            int t0 = partitions::size_of(lambda.first);
            int ll0 = partitions::length(lambda.first);
            if (partitions::sigma(lambda) == -1) {
                const auto& plus = W.character({lambda, +1});
                const auto& minus = W.character({lambda, -1});
                for (auto& ci : W.classes()) {
                    // p-regular and t0 > 0: the pair agrees.
                    if (t0 > 0 && ci.pRegular) CHECK(plus[ci.classId] == minus[ci.classId]);
                    // t0 = 0 and a cycle with even y-class: the pair agrees.
                    if (t0 == 0) {
                        bool evenCycle = false;
                        for (int j = 0; j < p; j += 2)
                            if (!ci.type.parts[j].empty()) evenCycle = true;
                        if (evenCycle) CHECK(plus[ci.classId] == minus[ci.classId]);
                    }
                    // odd classes: vanishing unless the sqrt-type condition,
                    // and then the value is sqrt(p)^{l(lambda_0)} integral.
                    CoverElt rep = W.E().class_rep(ci.classId);
                    if (perms::parity(rep.perm) == -1) {
                        bool cond = ci.type.parts[0] == lambda.first;
                        for (int j = 2; j < p && cond; j += 2)
                            if (!ci.type.parts[j].empty()) cond = false;
                        if (!cond) {
                            CHECK(plus[ci.classId].is_zero());
                        } else if (!plus[ci.classId].is_zero()) {
                            CycloNum scaled = plus[ci.classId];
                            for (int k = 0; k < ll0; ++k) scaled /= rootP;
                            CHECK(scaled.is_p_integral(p));
                        }
                    }
                }
            } else {
                const auto& ap = W.alt_character({lambda, +1});
                const auto& am = W.alt_character({lambda, -1});
                const auto& EA = W.EA();
                for (int c = 0; c < EA.num_classes(); ++c) {
                    CoverElt rep = EA.class_rep(c);
                    auto ty = W.type_of(rep);
                    bool pReg = covers::wreath_type_p_regular(ty);
                    if (t0 > 0 && pReg) CHECK(ap[c] == am[c]);
                    // difference values: zero or sqrt(p)^{l0}-integral under the
                    // type condition.
                    CycloNum diff = ap[c] - am[c];
                    bool cond = ty.parts[0] == lambda.first;
                    for (int j = 2; j < p && cond; j += 2)
                        if (!ty.parts[j].empty()) cond = false;
                    if (!cond) {
                        CHECK(diff.is_zero());
                    } else if (!diff.is_zero()) {
                        CycloNum scaled = diff;
                        for (int k = 0; k < ll0; ++k) scaled /= rootP;
                        CHECK(scaled.is_p_integral(p));
                    }
                }
            }
        }
    }
}

TEST_CASE("one-even lemma forces vanishing on fused classes") {
    WreathContext& W = shared_cache().get(3, 2);
    for (auto& ci : W.classes()) {
        if (ci.tag != Tag::unsplit) continue;
        for (auto& label : W.labels())
            CHECK(W.character(label)[ci.classId].is_zero());
    }
}
