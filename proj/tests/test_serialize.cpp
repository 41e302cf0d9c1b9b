#include "bellcomb/errors.hpp"
#include "bellcomb/involutions.hpp"
#include "bellcomb/serialize.hpp"

#include <doctest.h>

using namespace bellcomb;
using nlohmann::json;

TEST_CASE("partition JSON")
{
    const auto p = parse_partition("2/4,5/6,8,9/7");
    CHECK(to_json(p).dump() == "[[2],[4,5],[6,8,9],[7]]");
    CHECK(partition_from_json(json::parse("[[7],[9,6,8],[2],[5,4]]")) == p);
    CHECK(to_json(SetPartition{}).dump() == "[]");
    for (PartitionStream s(GroundSet::first(6)); s.next();)
        REQUIRE(partition_from_json(json::parse(to_json(s.current()).dump())) == s.current());
    CHECK_THROWS_AS(partition_from_json(json::parse("{}")), MalformedInput);
    CHECK_THROWS_AS(partition_from_json(json::parse("[[1],[\"a\"]]")), MalformedInput);
    CHECK_THROWS_AS(partition_from_json(json::parse("[[1,2],[2]]")), MalformedInput);
}

TEST_CASE("RGS JSON")
{
    const Rgs w(parse_word("112321442"));
    CHECK(to_json(w).dump() == "[1,1,2,3,2,1,4,4,2]");
    CHECK(rgs_from_json(to_json(w)).word() == w.word());
    CHECK_THROWS_AS(rgs_from_json(json::parse("[2,1]")), InvalidRGS);
    CHECK_THROWS_AS(rgs_from_json(json::parse("\"112\"")), MalformedInput);
}

TEST_CASE("polynomial JSON")
{
    const auto b3 = complete_bell_by_sum(3);
    CHECK(to_json(b3).dump() ==
          R"([{"coefficient":"1","exponents":[[1,3]]},{"coefficient":"3","exponents":[[1,1],[2,1]]},)"
          R"({"coefficient":"1","exponents":[[3,1]]}])");
    for (int n = 0; n <= 8; ++n) {
        const auto p = complete_bell_by_sum(n);
        REQUIRE(polynomial_from_json(json::parse(to_json(p).dump())) == p);
    }
    const auto signed_poly = rhs_thm2(3, 2);
    CHECK(polynomial_from_json(to_json(signed_poly)) == signed_poly);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"exponents":[[1,1]],"coefficient":"x"}])")),
                    MalformedInput);
    CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"coefficient":"1"}])")), MalformedInput);
}

TEST_CASE("report JSON")
{
    VerificationReport r{"thm1", "both", 3, 7, {}, 1.5};
    r.cells.push_back({"closed-form", "n=1,j=0", true, "ok", ""});
    r.cells.push_back({"enumerative", "n=1,j=1", false, "lhs 2 vs rhs 3", "S={1}"});
    const auto doc = to_json(r);
    CHECK(doc["identity"] == "thm1");
    CHECK(doc["status"] == "fail");
    CHECK(doc["failures"] == 1);
    CHECK(doc["cells"].size() == 2);
    CHECK_FALSE(doc["cells"][0].contains("counterexample"));
    CHECK(doc["cells"][1]["counterexample"] == "S={1}");
}
