#include "qfano/blowup.hpp"
#include "qfano/family.hpp"
#include "planted.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>

using namespace qfano;

namespace {

const Catalog& cat() { return builtin_catalog(); }

std::vector<int> cA_ids() {
    std::vector<int> v;
    for (const auto& r : cat())
        if (r.kind == Kind::cA) v.push_back(r.id);
    return v;
}

int weight_sum(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); }

}  // namespace

TEST(Catalog, LoadsTwentyFamilies) {
    ASSERT_EQ(cat().size(), 20u);
    std::set<int> ids;
    for (const auto& r : cat()) ids.insert(r.id);
    EXPECT_EQ(ids, (std::set<int>{6, 7, 9, 10, 16, 18, 21, 22, 26, 28, 33, 36, 38, 44, 48, 52, 57, 61, 62, 63}));
    EXPECT_THROW(find_family(cat(), 999), std::out_of_range);
}

TEST(Catalog, DegreeIsWeightSumMinusOne) {
    for (const auto& r : cat()) {
        EXPECT_EQ(r.degree, weight_sum(r.weights) - 1) << r.id;
        EXPECT_EQ(anticanonical_degree(r.weights, {r.degree}), r.A3) << r.id;
        EXPECT_TRUE(WeightSystem{r.weights}.well_formed()) << r.id;
    }
}

TEST(Catalog, GermPairConsistent) {
    for (const auto& r : cat()) {
        if (r.kind != Kind::cA) continue;
        EXPECT_EQ(r.germ_pair.first + r.germ_pair.second, r.degree - 2 * r.index) << r.id;
        EXPECT_EQ(r.weights[r.germ_index[0]] % r.index, r.germ_pair.first % r.index) << r.id;
    }
}

TEST(Catalog, WciDegreesBalance) {
    // X has the same index: sum of weights minus sum of degrees is 1
    for (const auto& r : cat()) EXPECT_EQ(weight_sum(r.wci_weights) - weight_sum(r.wci_degrees), 1) << r.id;
}

TEST(Catalog, LoadErrors) {
    EXPECT_THROW(load_catalog_text("{"), CatalogError);
    EXPECT_THROW(load_catalog_text("{\"x\": 1}"), CatalogError);
    EXPECT_TRUE(load_catalog_text("{\"families\": []}").empty());
    EXPECT_THROW(load_catalog_file("/nonexistent/catalog.json"), CatalogError);

    // corrupted germ pair
    std::ifstream in(std::string(QFANO_TEST_DATA) + "/../../data/catalog.json");
    auto j = nlohmann::json::parse(in);
    j["families"][0]["germ_pair"] = {2, 2};
    EXPECT_THROW(load_catalog_text(j.dump()), CatalogError);
}

TEST(AnticanonicalDegree, Formula) {
    EXPECT_EQ(anticanonical_degree({1, 1, 2, 3, 3}, {9}), Rational(1, 2));
    EXPECT_EQ(anticanonical_degree({1, 1, 1, 1, 1}, {4}), Rational(4));
    EXPECT_EQ(anticanonical_degree({1, 1, 1, 1, 1, 1}, {2, 3}), Rational(6));
}

TEST(Member, DeterministicAndStandard) {
    for (const auto& r : cat()) {
        auto a = random_member(r, 42), b = random_member(r, 42), c = random_member(r, 43);
        EXPECT_EQ(a.F, b.F) << r.id;
        EXPECT_NE(a.F, c.F) << r.id;
        EXPECT_EQ(a.F.weighted_degree(), r.degree) << r.id;
        EXPECT_TRUE(missing_required(a).empty()) << r.id;
        if (r.kind == Kind::cA) {
            Monomial m;
            m[r.w] = 2;
            m[r.germ_index[0]] = 1;
            m[r.germ_index[1]] = 1;
            EXPECT_TRUE(a.F.contains(m)) << r.id;
        }
    }
}

TEST(Member, DropForcesAbsence) {
    const auto& r = find_family(cat(), 63);
    ASSERT_FALSE(r.table3.empty());
    MemberOptions o;
    o.drop.push_back({"f", "y^4", ""});
    auto x = random_member(r, 1, o);
    EXPECT_FALSE(x.parts.at("f").contains(r.ring->parse_monomial("y^4")));
}

TEST(CounterpartProperty, RoundTripIsIdentity) {
    for (const auto& r : cat())
        for (std::uint64_t s = 0; s < 5; ++s) {
            auto x = random_member(r, s);
            auto X = counterpart_to_wci(x);
            EXPECT_EQ(X.F1.weighted_degree(), r.wci_degrees[0]) << r.id;
            EXPECT_EQ(X.F2.weighted_degree(), r.wci_degrees[1]) << r.id;
            EXPECT_EQ(wci_to_counterpart(X), x.F) << r.id << " seed " << s;
        }
}

TEST(Counterpart, ShapeErrors) {
    const auto& r = find_family(cat(), 6);
    auto X = counterpart_to_wci(random_member(r, 1));
    Monomial us;
    us[4] = 1;
    us[5] = 1;
    X.F2 = X.F2.filter([&](const Monomial& m) { return m != us; });
    EXPECT_THROW(wci_to_counterpart(X), std::invalid_argument);
}

TEST(Counterpart, ZeroPartsGiveOnlyTheCPoint) {
    const auto& r = find_family(cat(), 6);
    auto x = random_member(r, 1);
    for (auto& [k, p] : x.parts) p = QPoly(r.ring);
    x.F = assemble(r, x.parts);
    Monomial m;
    m[r.w] = 2;
    m[r.germ_index[0]] = 1;
    m[r.germ_index[1]] = 1;
    EXPECT_EQ(x.F, QPoly::monomial(r.ring, m, Rational(1)));
    EXPECT_EQ(wci_to_counterpart(counterpart_to_wci(x)), x.F);
}

TEST(Vertex, Examples) {
    auto st = vertex_singularity(random_member(find_family(cat(), 16), 1), find_family(cat(), 16).ring->at("z"));
    EXPECT_EQ(st.kind, VertexStatus::Kind::Quotient);
    EXPECT_EQ(st.type, make_sing(3, 1, 1, 2));

    const auto& f36 = find_family(cat(), 36);
    // the 1/4 point of family 36 sits on the line {z, w}
    auto sp = stratum_singular_points(random_member(f36, 1).F, f36.ring->at("z"), f36.ring->at("w"));
    EXPECT_EQ(sp.off_vertex, 1);
    EXPECT_EQ(sp.type, make_sing(4, 1, 1, 3));
    EXPECT_TRUE(sp.terminal);

    const auto& f6 = find_family(cat(), 6);
    EXPECT_EQ(vertex_singularity(random_member(f6, 1), f6.w).kind, VertexStatus::Kind::NonQuotient);
}

TEST(Vertex, PurePowerMeansNotOnX) {
    const auto& r = find_family(cat(), 21);
    auto x = member_from_poly(r, parse_poly(r.ring, "y^3*z + z^3 + w^2*x0*y + x0^9 + x1^9"));
    EXPECT_EQ(vertex_singularity(x, r.ring->at("z")).kind, VertexStatus::Kind::NotOnX);
}

TEST(Stratum, Examples) {
    const auto& f10 = find_family(cat(), 10);
    auto sp = stratum_singular_points(random_member(f10, 1).F, f10.ring->at("y0"), f10.ring->at("y1"));
    EXPECT_FALSE(sp.contained);
    EXPECT_EQ(sp.off_vertex, 3);
    EXPECT_EQ(sp.type, make_sing(2, 1, 1, 1));

    const auto& f62 = find_family(cat(), 62);
    sp = stratum_singular_points(random_member(f62, 1).F, f62.ring->at("y"), f62.ring->at("w"));
    EXPECT_EQ(sp.off_vertex, 3);
    EXPECT_EQ(sp.type, make_sing(3, 1, 1, 2));
}

TEST(Stratum, MonomialBinaryForm) {
    const auto& r = find_family(cat(), 10);
    auto sp = stratum_singular_points(parse_poly(r.ring, "y0^2*y1 + x0^6"), r.ring->at("y0"), r.ring->at("y1"));
    EXPECT_EQ(sp.off_vertex, 0);
    EXPECT_EQ(sp.mult_first, 2);
    EXPECT_EQ(sp.mult_second, 1);
    auto z = stratum_singular_points(parse_poly(r.ring, "x0^6"), r.ring->at("y0"), r.ring->at("y1"));
    EXPECT_TRUE(z.contained);
}

TEST(BasketProperty, TwentyMembersReproduceMarks) {
    for (const auto& r : cat())
        for (std::uint64_t s = 0; s < 20; ++s) {
            auto x = random_member(r, s);
            for (const auto& q : r.quotient_points) {
                auto L = r.locus_indices(q.locus);
                if (L.size() == 1) {
                    auto st = vertex_singularity(x, L[0]);
                    EXPECT_EQ(st.type, normalize(q.type).type) << r.id;
                } else {
                    auto sp = stratum_singular_points(x.F, L[0], L[1]);
                    EXPECT_EQ(sp.type, normalize(q.type).type) << r.id;
                    EXPECT_EQ(sp.off_vertex, q.count) << r.id;
                    EXPECT_EQ(sp.distinct, q.count) << r.id;
                }
            }
        }
}

TEST(Strata, MarksAreSingularStrata) {
    for (const auto& r : cat()) {
        std::set<std::vector<int>> strata;
        for (const auto& s : singular_strata(WeightSystem{r.weights})) strata.insert(s.coords);
        for (const auto& q : r.quotient_points) EXPECT_TRUE(strata.count(r.locus_indices(q.locus))) << r.id;
    }
}

TEST(Scan, RandomMembersAreClean) {
    // the first member at p = 7 with no rejection filter
    const auto& r = find_family(cat(), 6);
    int clean = 0;
    for (std::uint64_t s = 0; s < 10; ++s) clean += quasismooth_scan(random_member(r, s), 7).points.empty();
    EXPECT_GE(clean, 7);
}

TEST(Scan, NonPrimeRejected) {
    const auto& r = find_family(cat(), 6);
    EXPECT_THROW(quasismooth_scan(random_member(r, 1), 6), std::invalid_argument);
}

// ---- regression corpus ----

TEST(PlantedCorpus, EveryPlantDetected) {
    auto res = planted::run(std::string(QFANO_TEST_DATA) + "/planted.json");
    ASSERT_GE(res.size(), 10u);
    for (const auto& o : res) EXPECT_TRUE(o.detected()) << o.name;
}

TEST(PlantedCorpus, UnchangedMembersPassTheSameScans) {
    // the plants start from these members; the scans find nothing before planting
    for (auto [id, seed] : {std::pair{6, 1}, std::pair{21, 2}, std::pair{33, 3}}) {
        auto x = random_member(find_family(cat(), id), static_cast<std::uint64_t>(seed));
        EXPECT_TRUE(quasismooth_scan(counterpart_to_wci(x), 7).points.empty()) << id;
    }
}

TEST(PlantedCorpus, DoubleLineIsSingularAlongTheLine) {
    const auto& r = find_family(cat(), 33);
    auto x = member_from_poly(r, planted::double_line(r, random_member(r, 7).F));
    auto s = quasismooth_scan(x, 7);
    ASSERT_FALSE(s.points.empty());
    auto on_line = [&](const std::vector<std::uint32_t>& pt) {
        for (int v = 0; v < 5; ++v)
            if (v != r.h_coords[0] && v != r.w && pt[static_cast<std::size_t>(v)] != 0) return false;
        return true;
    };
    EXPECT_TRUE(std::any_of(s.points.begin(), s.points.end(), on_line));
}
