#include <gtest/gtest.h>

#include "gps/model.hpp"

using namespace gps;

namespace {

ParseError parse_failure(const std::string& text)
{
    try {
        parse_model(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return ParseError(0, 0, "", "");
}

}  // namespace

TEST(Model, ParsesIntegersOverZ)
{
    const Model m = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (4)\n");
    EXPECT_EQ(m.module.rank(), 1u);
    EXPECT_FALSE(m.ring.is_finite());
    EXPECT_EQ(pretty_submodule(m.submodule("N")), "4Z");
}

TEST(Model, ParsesProductWithTupleDegrees)
{
    const Model m = parse_model(
        "# two copies of Z\n"
        "group = Z2 x Z2\n"
        "ring = Z\n"
        "module = Z@(0,0) x Z@(0,1)   # trailing comment\n"
        "submodule N = (4,0)\n"
        "submodule N' = (0,4)\n"
        "subset Y = {N, N'}\n");
    EXPECT_EQ(m.module.rank(), 2u);
    EXPECT_EQ(pretty_submodule(m.submodule("N")), "4Z x 0");
    EXPECT_EQ(pretty_submodule(m.submodule("N'")), "0 x 4Z");
    ASSERT_EQ(m.subsets.size(), 1u);
    EXPECT_EQ(m.subsets[0].second, (std::vector<std::string>{"N", "N'"}));
}

TEST(Model, PrettyNotationForFiniteFactors)
{
    const Model m = parse_model("group = Z2\nring = Z8\nmodule = Z8@0\nsubmodule A = (6)\nsubmodule B = 0\n"
                                "submodule C = (3)\n");
    EXPECT_EQ(pretty_submodule(m.submodule("A")), "2Z8");
    EXPECT_EQ(pretty_submodule(m.submodule("B")), "0");
    EXPECT_EQ(pretty_submodule(m.submodule("C")), "Z8");
}

TEST(Model, NonProductSubmoduleFallsBackToGenerators)
{
    const Model m = parse_model("group = Z2\nring = Z2\nmodule = Z2@0 x Z2@0\nsubmodule D = (1,1)\n");
    EXPECT_EQ(pretty_submodule(m.submodule("D")), "<(1,1)>");
}

TEST(Model, EmptyModuleIsAllowed)
{
    const Model m = parse_model("group = Z1\nring = Z\nmodule = 0\n");
    EXPECT_EQ(m.module.rank(), 0u);
    EXPECT_EQ(parse_model(render_model(m)), m);
}

TEST(Model, RoundTripIsIdentityAndRenderIsAFixedPoint)
{
    const char* inputs[] = {
        "group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (4), (6)\n",
        "group=Z2 x Z2\nring=Z\nmodule=Z@(0,0) x Z@(0,1)\nsubmodule N=(4,0)\nsubmodule M=(8,0),(0,12)\n"
        "subset S={N,M}\n",
        "group = Z3\nring = Z12\nmodule = Z4@1 x Z3@2 x Z12@0\nsubmodule Q = (2,1,5), (0,0,4)\n",
    };
    for (const char* text : inputs) {
        const Model m = parse_model(text);
        const std::string canon = render_model(m);
        const Model again = parse_model(canon);
        EXPECT_EQ(again, m) << text;
        EXPECT_EQ(render_model(again), canon);
    }
}

TEST(Model, GeneratorsAreCanonical)
{
    const Model a = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (4), (6)\n");
    const Model b = parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (-2)\n");
    EXPECT_EQ(render_model(a), render_model(b));
    EXPECT_EQ(generator_list(a.submodule("N")), "(2)");
}

TEST(Model, OrderingErrorsCarryPositions)
{
    const ParseError e = parse_failure("group = Z2\nmodule = Z@0\nring = Z\n");
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_EQ(e.message(), "ring must precede module");
    EXPECT_EQ(e.token(), "module");
}

TEST(Model, FactorOrderMustDivideRingModulus)
{
    const ParseError e = parse_failure("group = Z2\nring = Z6\nmodule = Z4@0\n");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 10u);
    EXPECT_EQ(e.message(), "factor order 4 does not divide ring modulus 6");
}

TEST(Model, RejectsMalformedInput)
{
    const char* bad[] = {
        "ring = Z\n",
        "group = Z2\nring = Z\n",
        "group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (1,2)\n",
        "group = Z2\nring = Z\nmodule = Z@5\n",
        "group = Z2 x Z2\nring = Z\nmodule = Z@0\n",
        "group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (1)\nsubmodule N = (2)\n",
        "group = Z2\nring = Z\nmodule = Z@0\nsubset S = {Q}\n",
        "group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (2147483648)\n",
        "group = Z2\nring = Z\nmodule = Z@0 $\n",
        "group = Z2\nring = Z1\nmodule = Z@0\n",
        "group = Z2\nring = Z4\nmodule = Z@0\n",
        "group = Z2\nring = Z\nmodule = Z@0\nfoo = 1\n",
        "group = Z2\nring = Z\nmodule = Z@0 extra\n",
    };
    for (const char* text : bad) {
        const ParseError e = parse_failure(text);
        EXPECT_GE(e.line(), 1u) << text;
        EXPECT_FALSE(e.message().empty());
    }
}

TEST(Model, IntegerBoundIsExclusive)
{
    EXPECT_NO_THROW(parse_model("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (2147483647)\n"));
    const ParseError e = parse_failure("group = Z2\nring = Z\nmodule = Z@0\nsubmodule N = (-2147483648)\n");
    EXPECT_EQ(e.token(), "-2147483648");
}
