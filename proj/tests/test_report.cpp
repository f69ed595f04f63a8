#include "qfano/report.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace qfano;

namespace {

VerifyOptions quick() {
    VerifyOptions o;
    o.samples = 4;
    return o;
}

std::string catalog_text() {
    std::ifstream in(std::string(QFANO_TEST_DATA) + "/../../data/catalog.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<const CheckRecord*> with_status(const VerificationReport& r, Status s) {
    std::vector<const CheckRecord*> out;
    for (const auto& c : r.checks)
        if (c.status == s) out.push_back(&c);
    return out;
}

const CheckRecord* named(const VerificationReport& r, const std::string& prefix) {
    for (const auto& c : r.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

}  // namespace

TEST(Report, Family21AllPass) {
    auto r = verify_family(find_family(builtin_catalog(), 21), quick());
    EXPECT_EQ(r.count(Status::Fail), 0u);
    EXPECT_EQ(r.count(Status::Flag), 0u);
    const auto* b3 = named(r, "B3 at y");
    ASSERT_NE(b3, nullptr);
    EXPECT_EQ(b3->computed, "0 (=0)");
    const auto* l1 = named(r, "flop invariance (1,5)");
    ASSERT_NE(l1, nullptr);
    EXPECT_NE(l1->note.find("1/4(1,1,3)"), std::string::npos);
    const auto* l2 = named(r, "flop invariance (4,2)");
    ASSERT_NE(l2, nullptr);
    EXPECT_NE(l2->note.find("1/5(1,2,3)"), std::string::npos);
}

TEST(Report, Family57FlagsTheWorkedExample) {
    auto r = verify_family(find_family(builtin_catalog(), 57), quick());
    EXPECT_EQ(r.count(Status::Fail), 0u);
    auto flags = with_status(r, Status::Flag);
    ASSERT_EQ(flags.size(), 1u);
    EXPECT_EQ(flags[0]->name, "worked exclusion example");
    EXPECT_EQ(flags[0]->computed, "(N.B^2)=0");
}

TEST(Report, Family6FlagsTheA32Case) {
    auto r = verify_family(find_family(builtin_catalog(), 6), quick());
    const auto* c = named(r, "A_{3,2} worked case");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, Status::Flag);
    EXPECT_EQ(c->computed, "coefficient 1, (Gamma^2)=-2");
}

TEST(Report, AssumedOnlyForGenerality) {
    for (const auto& rep : verify_all(builtin_catalog(), quick()))
        for (const auto* c : with_status(rep, Status::Assumed))
            EXPECT_TRUE(c->name.find("condition") != std::string::npos || c->name.find("table 2") != std::string::npos)
                << c->name;
}

TEST(Report, DefaultRunHasNoFailsAndBothFlags) {
    auto reps = verify_all(builtin_catalog(), quick());
    ASSERT_EQ(reps.size(), 20u);
    auto s = summarize(reps);
    EXPECT_EQ(s[Status::Fail], 0u);
    EXPECT_GE(s[Status::Flag], 2u);
    EXPECT_FALSE(any_fail(reps));
    for (const auto& r : reps)
        for (const auto& c : r.checks) EXPECT_NE(c.name, "coverage") << r.family;
}

TEST(Report, Deterministic) {
    auto a = format_json(verify_all(builtin_catalog(), quick()));
    auto b = format_json(verify_all(builtin_catalog(), quick()));
    EXPECT_EQ(a, b);
    EXPECT_EQ(format_text(verify_all(builtin_catalog(), quick())), format_text(verify_all(builtin_catalog(), quick())));
}

TEST(Report, SeedChangesMembersNotVerdicts) {
    auto o = quick();
    o.seed = 99;
    auto reps = verify_all(builtin_catalog(), o);
    EXPECT_FALSE(any_fail(reps));
}

TEST(Report, CorruptedA3GivesOneFail) {
    auto j = nlohmann::json::parse(catalog_text());
    for (auto& f : j["families"])
        if (f["id"] == 44) f["A3"] = "1/3";
    auto cat = load_catalog_text(j.dump());
    auto reps = verify_all(cat, quick());
    EXPECT_EQ(summarize(reps)[Status::Fail], 1u);
    for (const auto& r : reps)
        for (const auto* c : with_status(r, Status::Fail)) {
            EXPECT_EQ(r.family, 44);
            EXPECT_EQ(c->name, "A3");
        }
}

TEST(Report, CorruptedBasketMarkFails) {
    auto j = nlohmann::json::parse(catalog_text());
    for (auto& f : j["families"])
        if (f["id"] == 10) f["quotient_points"][0]["count"] = 2;
    auto reps = verify_all(load_catalog_text(j.dump()), quick());
    ASSERT_TRUE(any_fail(reps));
    for (const auto& r : reps)
        for (const auto* c : with_status(r, Status::Fail)) {
            EXPECT_EQ(r.family, 10);
            EXPECT_EQ(c->name.rfind("basket", 0), 0u) << c->name;
        }
}

TEST(Report, CorruptedExtractionMarkFails) {
    auto j = nlohmann::json::parse(catalog_text());
    // a B.I. extraction of family 10 relabelled as none
    for (auto& f : j["families"])
        if (f["id"] == 10)
            for (auto& e : f["extractions"])
                if (e["pair"] == nlohmann::json{1, 4}) e["mark"] = "none";
    auto reps = verify_all(load_catalog_text(j.dump()), quick());
    EXPECT_EQ(summarize(reps)[Status::Fail], 1u);
}

TEST(Report, EmptyCatalog) {
    auto reps = verify_all(load_catalog_text("{\"families\": []}"), quick());
    EXPECT_TRUE(reps.empty());
    EXPECT_FALSE(any_fail(reps));
    auto j = nlohmann::json::parse(format_json(reps));
    EXPECT_TRUE(j["reports"].empty());
}

TEST(Report, JsonShape) {
    auto reps = verify_all({find_family(builtin_catalog(), 44)}, quick());
    auto j = nlohmann::json::parse(format_json(reps));
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["family"], 44);
    bool found = false;
    for (const auto& c : j["reports"][0]["checks"]) {
        for (const char* k : {"name", "computed", "expected", "status", "note"}) EXPECT_TRUE(c.contains(k));
        if (c["name"] == "A3") {
            EXPECT_EQ(c["computed"], "1/5");
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Report, ScanOnlyAndIdentitiesOnly) {
    auto o = quick();
    o.catalog = o.identities = false;
    auto r = verify_family(find_family(builtin_catalog(), 33), o);
    ASSERT_EQ(r.checks.size(), 1u);
    EXPECT_EQ(r.checks[0].status, Status::Pass);

    o = quick();
    o.catalog = o.scans = false;
    r = verify_family(find_family(builtin_catalog(), 33), o);
    EXPECT_NE(named(r, "ladder G33 decomposition"), nullptr);
    EXPECT_EQ(named(r, "A3"), nullptr);
}

TEST(Table, ListsEveryFamily) {
    auto t = table_text(builtin_catalog());
    for (const auto& r : builtin_catalog())
        EXPECT_NE(t.find("No. " + std::to_string(r.id) + " "), std::string::npos) << r.id;
    EXPECT_NE(t.find("(2,7)  E3 = 9/14  B3 = 1/42"), std::string::npos);
}
