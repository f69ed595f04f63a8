#include "qfano/links.hpp"

#include <gtest/gtest.h>

using namespace qfano;

namespace {

const FamilyRecord& fam(int id) { return find_family(builtin_catalog(), id); }

bool holds(const SectionLadder& L, const std::string& name) {
    for (const auto& i : L.identities)
        if (i.name == name) return i.holds;
    ADD_FAILURE() << "no identity " << name;
    return false;
}

// member whose auxiliary parts are all zero
StandardHypersurface bare_member(const FamilyRecord& r, const std::vector<std::string>& keep) {
    auto x = random_member(r, 1);
    for (auto& [k, p] : x.parts) {
        QPoly kept(r.ring);
        for (const auto& t : keep) {
            auto m = r.ring->parse_monomial(t);
            if (p.contains(m)) kept.add_term(m, *p.find(m));
        }
        p = kept;
    }
    return member_from_poly(r, assemble(r, x.parts));
}

}  // namespace

TEST(Midpoint, Family6BothSides) {
    auto x = random_member(fam(6), 1);
    auto Z = midpoint(x, MidpointSide::First);
    EXPECT_EQ(Z.degree, 6);
    EXPECT_EQ(Z.ring->weights(), (std::vector<int>{1, 1, 1, 2, 2}));
    auto Zm = midpoint(x, MidpointSide::Mirror);
    EXPECT_EQ(Zm.degree, 7);
    EXPECT_EQ(Zm.ring->weights(), (std::vector<int>{1, 1, 1, 2, 3}));
}

TEST(MidpointProperty, DegreeFormula) {
    for (const auto& r : builtin_catalog()) {
        if (r.kind != Kind::cA) continue;
        const int n = r.index, e = r.germ_pair.first, e2 = r.germ_pair.second;
        for (std::uint64_t s = 0; s < 5; ++s) {
            auto x = random_member(r, s);
            EXPECT_EQ(midpoint(x, MidpointSide::First).degree, 2 * (e + n) + e2) << r.id;
            EXPECT_EQ(midpoint(x, MidpointSide::Mirror).degree, 2 * (e2 + n) + e) << r.id;
        }
    }
    EXPECT_THROW(midpoint(random_member(fam(61), 1), MidpointSide::First), StructuralError);
}

TEST(Midpoint, ZeroPartsStayHomogeneous) {
    const auto& r = fam(6);
    auto x = random_member(r, 1);
    for (auto& [k, p] : x.parts) p = QPoly(r.ring);
    x = member_from_poly(r, assemble(r, x.parts));
    EXPECT_EQ(midpoint(x, MidpointSide::First).degree, 6);
}

TEST(MuProperty, TwentyMembersEachFamily) {
    for (int id : {9, 22, 28, 33, 48, 57})
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto c = verify_involution_mu(random_member(fam(id), s));
            EXPECT_TRUE(c.proportional) << id << " seed " << s;
            EXPECT_EQ(c.lambda, Rational(1)) << id;
            EXPECT_TRUE(c.involutive) << id;
        }
}

TEST(Mu, PlantedX3DependenceInA) {
    // w x3^2 has no homogeneous room in these families; the plant is the bare term
    for (int id : {9, 22, 28, 33, 48, 57}) {
        const auto& r = fam(id);
        auto x = random_member(r, 1);
        Monomial m;
        m[r.w] = 1;
        m[r.germ_index[1]] = 2;
        QPoly F = x.F;
        F.add_term(m, Rational(2));
        auto c = verify_involution_mu(member_from_poly(r, F));
        EXPECT_FALSE(c.proportional) << id;
    }
}

TEST(Mu, TrivialCoefficients) {
    const auto& r = fam(33);
    // only w^2 x2 x3 and x3^2 survive: a = b = c = d = 0
    auto x = member_from_poly(r, parse_poly(r.ring, "w^2*y*z + z^2"));
    auto c = verify_involution_mu(x);
    EXPECT_TRUE(c.proportional);
    EXPECT_TRUE(c.involutive);
}

TEST(NuProperty, TwentyMembersEachFamily) {
    for (int id : {6, 16, 18, 26, 44})
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto c = verify_involution_nu(random_member(fam(id), s));
            EXPECT_TRUE(c.hypersurface) << id;
            EXPECT_TRUE(c.involutive) << id;
            EXPECT_TRUE(c.wci_shape) << id;
            EXPECT_TRUE(c.wci_corrected) << id;
            // x5 -> x5 + c does not reproduce the reference pair
            EXPECT_FALSE(c.wci_stated) << id;
        }
}

TEST(Nu, TrivialCoefficients) {
    const auto& r = fam(26);
    const auto& n = r.names;
    auto x = member_from_poly(r, parse_poly(r.ring, "w^2*" + n[r.germ_index[0]] + "*" + n[r.germ_index[1]] + " + w*" +
                                                        n[r.germ_index[1]] + "^2"));
    auto c = verify_involution_nu(x);
    EXPECT_TRUE(c.hypersurface);
    EXPECT_TRUE(c.involutive);
    EXPECT_TRUE(c.wci_shape);
    // with c = 0 both signs agree
    EXPECT_TRUE(c.wci_stated);
    EXPECT_TRUE(c.wci_corrected);
}

TEST(LadderProperty, IdentitiesHold) {
    for (int id : {10, 26, 48, 38, 63})
        for (std::uint64_t s = 0; s < 10; ++s) {
            auto L = build_ladder(random_member(fam(id), s));
            for (const char* n : {"decomposition", "v relation", "deg u", "deg v"}) EXPECT_TRUE(holds(L, n)) << id << " " << n;
            auto d = verify_detM(L);
            EXPECT_TRUE(d.divisible) << id;
            EXPECT_EQ(d.v_degree, 2) << id;
        }
}

TEST(Ladder, MirroredFamiliesUseTheSecondGermCoordinate) {
    for (int id : {38, 63}) {
        auto L = build_ladder(random_member(fam(id), 1));
        EXPECT_EQ(L.X, fam(id).germ_index[1]);
    }
    auto L = build_ladder(random_member(fam(48), 1));
    EXPECT_EQ(L.X, fam(48).germ_index[0]);
}

TEST(Ladder, DetMPlant) {
    auto L = build_ladder(random_member(fam(10), 1));
    EXPECT_TRUE(verify_detM(L).ok());
    EXPECT_FALSE(verify_detM(L, true).ok());
}

TEST(Ladder, WrongFamilyIsStructural) {
    EXPECT_THROW(build_ladder(random_member(fam(61), 1)), StructuralError);
}

TEST(G33Property, IdentitiesHold) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto L = build_ladder_g33(random_member(fam(33), s));
        EXPECT_TRUE(holds(L, "G33 decomposition"));
        EXPECT_TRUE(holds(L, "G33 wF relation"));
    }
}

TEST(G33, CorruptA9) {
    auto L = build_ladder_g33(random_member(fam(33), 1), true);
    EXPECT_TRUE(holds(L, "G33 decomposition"));
    EXPECT_FALSE(holds(L, "G33 wF relation"));
}

TEST(G18, CorrectedVariantHolds) {
    const auto& r = fam(18);
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto res = verify_g18_model(g18_member(r, s));
        ASSERT_EQ(res.variants.size(), 3u);
        EXPECT_FALSE(res.variants[0].holds);
        EXPECT_FALSE(res.variants[1].holds);
        EXPECT_TRUE(res.variants[2].holds);
        ASSERT_NE(res.holding(), nullptr);
        EXPECT_EQ(res.holding()->name, res.variants[2].name);
    }
}

TEST(G18, SignFlipInVFails) {
    auto res = verify_g18_model(g18_member(fam(18), 1), true);
    EXPECT_EQ(res.holding(), nullptr);
}
