#include <gtest/gtest.h>

#include <map>
#include <set>

#include "gps/harness.hpp"

using namespace gps;

namespace {

const CorpusInstance& corpus_instance(const std::string& id)
{
    static const std::vector<CorpusInstance> corpus = standard_corpus();
    for (const CorpusInstance& c : corpus)
        if (c.id == id)
            return c;
    throw std::out_of_range(id);
}

CheckResult single(const std::string& instance, const std::string& id, HarnessOptions opts = {})
{
    const auto rs = run_checks(corpus_instance(instance).model, instance, {id}, opts);
    EXPECT_EQ(rs.size(), 1u);
    return rs.at(0);
}

}  // namespace

TEST(Harness, RosterIsComplete)
{
    const std::vector<std::string> roster = {
        "T2.1.1", "T2.1.2", "T2.1.3", "T2.1.4", "T2.1.5", "T2.2",    "P2.3.1",  "P2.3.2",   "T2.4.1",
        "T2.4.2", "T2.4.3", "T2.4.4", "P2.5",   "L2.6.1", "L2.6.2",  "L2.6.3",  "L2.6.4",   "C2.7",
        "P2.8",   "C2.9",   "P2.10",  "P2.11",  "C2.12",  "T2.13.i", "T2.13.ii", "L2.14.1", "L2.14.2",
        "T2.15",  "C2.16",  "T2.17",  "P3.1",   "P3.2.1", "P3.2.2",  "P3.2.3",  "P3.2.4",   "P3.2.5",
        "E3.3a",  "E3.3b",  "T3.4",   "T3.5",   "P4.1",   "T4.2",    "L4.3",    "T4.4.1",   "T4.4.2",
        "T4.5",   "T4.6",   "C4.7.1", "C4.7.2", "C4.7.3", "C4.7.4",  "C4.7.5",  "P4.8",     "P4.9",
        "T4.10",  "T4.11",  "E1.4Z",  "CE2.1",  "E4.2",
    };
    std::vector<std::string> ids;
    for (const CheckInfo& c : check_catalog())
        ids.push_back(c.id);
    EXPECT_EQ(ids, roster);
    for (const std::string& id : roster)
        EXPECT_TRUE(is_check_id(id));
}

TEST(Harness, UnknownIdIsRejected)
{
    EXPECT_THROW(run_checks(corpus_instance("z6").model, "z6", {"T9.9"}), InputError);
}

TEST(Harness, Z6EveryApplicableCheckPasses)
{
    const auto rs = run_checks(corpus_instance("z6").model, "z6");
    for (const CheckResult& r : rs)
        EXPECT_NE(r.status, CheckStatus::Fail) << r.id << ": " << r.detail;
    const CheckResult e = single("z6", "E4.2");
    EXPECT_EQ(e.status, CheckStatus::Pass);
}

TEST(Harness, ZxZConfirmsTheCounterexample)
{
    const CheckResult r = single("zxz", "CE2.1");
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.detail;
    EXPECT_GT(r.cases, 0u);
    // everything needing the whole spectrum is skipped, never assumed
    EXPECT_EQ(single("zxz", "T2.1.3").status, CheckStatus::Skipped);
}

TEST(Harness, IntegersSatisfyTheRadicalCriterion)
{
    EXPECT_EQ(single("z4Z", "E1.4Z").status, CheckStatus::Pass);
    const CheckResult r = single("z4Z", "T2.17");
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.detail;
    EXPECT_GT(r.cases, 30u);
}

TEST(Harness, Z8FiveStatementsAllFalse)
{
    const CheckResult r = single("z8", "T4.11");
    EXPECT_EQ(r.status, CheckStatus::Pass) << r.detail;
    EXPECT_EQ(r.detail, "(1) false, (2) false, (3) false, (4) false, (5) false");
    EXPECT_EQ(single("z6", "T4.11").detail, "(1) true, (2) true, (3) true, (4) true, (5) true");
    EXPECT_EQ(single("z8", "E3.3b").status, CheckStatus::Pass);
}

TEST(Harness, GuardsSkipAndBypassingThemExposesFailures)
{
    const CheckResult skipped = single("z6", "E3.3b");
    EXPECT_EQ(skipped.status, CheckStatus::Skipped);
    HarnessOptions bypass;
    bypass.ignore_guards = true;
    const CheckResult failed = single("z6", "E3.3b", bypass);
    EXPECT_EQ(failed.status, CheckStatus::Fail);
    EXPECT_FALSE(failed.detail.empty());
}

TEST(Harness, ImplicationsWithFalseHypothesesAreVacuous)
{
    // PS(Z8) is not T1, and 0 is not prime in Z8
    EXPECT_EQ(single("z8", "P4.9").status, CheckStatus::Vacuous);
    EXPECT_EQ(single("z8", "C4.7.5").status, CheckStatus::Vacuous);
}

TEST(Harness, ResultsAreDeterministic)
{
    const auto& m = corpus_instance("z4@0-z8@1").model;
    const auto a = run_checks(m, "x");
    const auto b = run_checks(m, "x");
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].status, b[i].status);
        EXPECT_EQ(a[i].cases, b[i].cases);
        EXPECT_EQ(a[i].detail, b[i].detail);
    }
}

TEST(Harness, SampledSubsetsAboveTheCutoff)
{
    HarnessOptions small;
    small.exhaustive_subset_limit = 2;
    small.sampled_subsets = 16;
    const auto& m = corpus_instance("z8").model;
    const auto rs = run_checks(m, "z8", {"P4.1"}, small);
    EXPECT_EQ(rs[0].status, CheckStatus::Pass);
    EXPECT_EQ(rs[0].cases, 2u * 16u);
}

TEST(Harness, CorpusHasNoFailuresAndCoversTheRoster)
{
    std::map<std::string, int> substantive;
    for (const CorpusInstance& c : standard_corpus())
        for (const CheckResult& r : run_checks(c.model, c.id)) {
            EXPECT_NE(r.status, CheckStatus::Fail) << c.id << " " << r.id << ": " << r.detail;
            if (r.status == CheckStatus::Pass)
                ++substantive[r.id];
        }
    for (const CheckInfo& c : check_catalog())
        EXPECT_GT(substantive[c.id], 0) << c.id;
}
