#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gausstri/error.hpp"
#include "gausstri/suites.hpp"
#include "json.hpp"

using namespace gtri;
using namespace gtri::suites;

namespace {

ReportEntry sample_entry() {
    ReportEntry e;
    e.name = "x";
    e.family = "pinned";
    e.closed_form = 0.1;
    e.quadrature = numerics::QuadResult{0.1 + 1e-12, 1e-13, 99};
    e.mc = mc::Estimate{0.1003, 0.0002, 1000000, 7, 0};
    e.tolerance = 6e-4;
    e.pass = true;
    e.notes = "note, with \"quotes\"";
    e.details["p_value"] = 0.5;
    e.flags["table_match"] = true;
    return e;
}

SuiteOptions small() {
    SuiteOptions o;
    o.mc_samples = 20000;
    o.gof_samples = 20000;
    return o;
}

}  // namespace

TEST(Json, SchemaAndRoundTrip) {
    const auto text = to_json({sample_entry()});
    const auto j = nlohmann::json::parse(text);
    ASSERT_EQ(j["entries"].size(), 1u);
    const auto& e = j["entries"][0];
    for (const char* key : {"name", "family", "closed_form", "quadrature", "quadrature_err", "mc", "stderr", "n",
                            "seed", "tolerance", "pass", "conjecture_flag", "notes", "details"})
        EXPECT_TRUE(e.contains(key)) << key;
    EXPECT_EQ(e["closed_form"].get<double>(), 0.1);  // %.17g round-trips exactly
    EXPECT_EQ(e["quadrature"].get<double>(), 0.1 + 1e-12);
    EXPECT_EQ(e["n"].get<std::uint64_t>(), 1000000u);
    EXPECT_EQ(e["details"]["table_match"], true);
    EXPECT_EQ(e["notes"], "note, with \"quotes\"");
}

TEST(Json, NonFiniteBecomesNull) {
    auto e = sample_entry();
    e.closed_form = std::numeric_limits<double>::quiet_NaN();
    e.details["inf"] = std::numeric_limits<double>::infinity();
    const auto j = nlohmann::json::parse(to_json({e}));
    EXPECT_TRUE(j["entries"][0]["closed_form"].is_null());
    EXPECT_TRUE(j["entries"][0]["details"]["inf"].is_null());
}

TEST(Csv, HeaderAndQuoting) {
    const auto csv = to_csv({sample_entry()});
    EXPECT_EQ(csv.rfind("name,family,closed_form,quadrature,mc,stderr,n,seed,tolerance,pass,conjecture_flag,notes\n", 0),
              0u);
    EXPECT_NE(csv.find("\"note, with \"\"quotes\"\"\""), std::string::npos);
}

TEST(Gating, ConjectureFailuresDoNotGate) {
    auto e = sample_entry();
    e.pass = false;
    e.conjecture_flag = true;
    EXPECT_FALSE(has_gating_failure({e}));
    e.conjecture_flag = false;
    EXPECT_TRUE(has_gating_failure({e}));
}

TEST(ConjectureSuite, ByteIdenticalAcrossRunsAndWorkers) {
    auto o = small();
    o.mc.workers = 1;
    const auto a = to_json(conjecture_suite(2, 3, o));
    const auto b = to_json(conjecture_suite(2, 3, o));
    o.mc.workers = 3;
    const auto c = to_json(conjecture_suite(2, 3, o));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
    const auto j = nlohmann::json::parse(a);
    // normalization, obtuse, gof for two families and two dimensions.
    EXPECT_EQ(j["entries"].size(), 12u);
}

TEST(ConjectureSuite, PinnedPlanarIsNotAConjecture) {
    for (const auto& e : conjecture_suite(2, 2, small())) {
        if (e.name.rfind("pinned", 0) == 0) EXPECT_FALSE(e.conjecture_flag) << e.name;
        else EXPECT_TRUE(e.conjecture_flag) << e.name;
    }
}

TEST(ConjectureSuite, RejectsBadRange) {
    EXPECT_THROW(conjecture_suite(1, 3), DomainError);
    EXPECT_THROW(conjecture_suite(4, 3), DomainError);
    EXPECT_THROW(conjecture_suite(2, 9), DomainError);
}
