#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = bellcomb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("numbers")
{
    CHECK(run({"numbers", "bell", "--max", "5"}).out == "0\t1\n1\t1\n2\t2\n3\t5\n4\t15\n5\t52\n");
    CHECK(run({"numbers", "kdiff", "--max-n", "4", "--format", "csv"}).out == "n,value\n0,1\n1,0\n2,1\n3,1\n4,3\n");
    const auto json = nlohmann::json::parse(run({"numbers", "catalan", "--max", "30", "--format", "json"}).out);
    CHECK(json["kind"] == "catalan");
    CHECK(json["values"][30] == "3814986502092304");
    CHECK(run({"numbers", "primes", "--max", "3"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"numbers", "bell"}).code == bellcomb::cli::kExitUsage);
}

TEST_CASE("trace")
{
    const auto r = run({"trace", "--n", "8", "--j", "4", "-S", "1,3", "--pi", "2/4,5/6,8,9/7"});
    CHECK(r.code == 0);
    CHECK(r.out == "lambda  = +1 | {1,3} | 2/4,5/6,8,9/7\n"
                   "l0      = 3\n"
                   "lambda' = -1 | {1} | 2/3/4,5/6,8,9/7\n"
                   "+1 | {1,3} | 2/4,5/6,8,9/7 | ({1}, 2/3/4,5/6,8,9/7)\n");

    const auto fixed = run({"trace", "--n", "2", "--j", "1", "--pi", "1,3/2"});
    CHECK(fixed.out.find("lambda' = FIXED") != std::string::npos);

    const auto doc = nlohmann::json::parse(
        run({"trace", "--n", "8", "--j", "4", "-S", "1,3", "--pi", "2/4,5/6,8,9/7", "--format", "json"}).out);
    CHECK(doc["l0"] == 3);
    CHECK(doc["image"]["S"] == nlohmann::json::array({1}));
    CHECK(doc["image"]["sign"] == -1);

    const auto all = run({"trace", "--n", "2", "--j", "1", "--all"});
    CHECK(std::count(all.out.begin(), all.out.end(), '\n') == 8);
    CHECK(all.out.rfind("sign | S | pi | image\n", 0) == 0);

    CHECK(run({"trace", "--n", "2", "--j", "1", "-S", "1", "--pi", "1/2,3"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"trace", "--n", "2", "--j", "3", "--all"}).code == bellcomb::cli::kExitUsage);
}

TEST_CASE("bellpoly")
{
    CHECK(run({"bellpoly", "--n", "3"}).out == "t1^3 + 3*t1*t2 + t3\n");
    CHECK(run({"bellpoly", "--n", "3", "--method", "sum"}).out == "t1^3 + 3*t1*t2 + t3\n");
    CHECK(run({"bellpoly", "--n", "4", "--weights", "1,1,1,1"}).out == "15\n");
    CHECK(run({"bellpoly", "--n", "3", "--weights", "0,1,2"}).out == "2\n");
    CHECK(run({"bellpoly", "--n", "3", "--weights", "1,1"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"bellpoly", "--n", "3", "--weights", "1,x,1"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"bellpoly", "--n", "20"}).code == bellcomb::cli::kExitUsage);
    const auto doc = nlohmann::json::parse(run({"bellpoly", "--n", "2", "--format", "json"}).out);
    CHECK(doc["n"] == 2);
    CHECK(doc["terms"].size() == 2);
}

TEST_CASE("rgs and list")
{
    CHECK(run({"rgs", "--pi", "1,2,6/3,5,9/4/7,8"}).out == "112321442\n");
    CHECK(run({"rgs", "--word", "112321442"}).out == "1,2,6/3,5,9/4/7,8\n");
    CHECK(run({"rgs", "--pi", "1,2,6/3,5,9/4/7,8", "--format", "json"}).out == "[1,1,2,3,2,1,4,4,2]\n");
    CHECK(run({"rgs", "--word", "13"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"rgs"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"list", "--n", "3"}).out == "111\t1,2,3\n112\t1,2/3\n121\t1,3/2\n122\t1/2,3\n123\t1/2/3\n");
    const auto nc = run({"list", "--n", "4", "--noncrossing"});
    CHECK(std::count(nc.out.begin(), nc.out.end(), '\n') == 14);
    CHECK(nc.out.find("1212") == std::string::npos);
}

TEST_CASE("verify")
{
    const auto ok = run({"verify", "thm1", "--max-n", "6"});
    CHECK(ok.code == bellcomb::cli::kExitPass);
    CHECK(ok.out.find("status: pass") != std::string::npos);

    const auto bad = run({"verify", "cor2", "--max-n", "4", "--falsify-oracle"});
    CHECK(bad.code == bellcomb::cli::kExitVerificationFailed);
    CHECK(bad.out.find("counterexample:") != std::string::npos);

    const auto doc = nlohmann::json::parse(run({"verify", "nc-k", "--max-n", "6", "--format", "json"}).out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["identity"] == "nc-k");
    CHECK(doc["failures"] == 0);

    const auto csv = run({"verify", "psi", "--max-n", "3", "--format", "csv"});
    CHECK(csv.out.rfind("identity,route,params,passed,detail,counterexample\n", 0) == 0);

    CHECK(run({"verify", "thm7", "--max-n", "3"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"verify", "thm1", "--max-n", "3", "--mode", "quick"}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"verify", "thm2", "--max-n", "40"}).code == bellcomb::cli::kExitUsage);
}

TEST_CASE("help and usage")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == bellcomb::cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == bellcomb::cli::kExitUsage);
}
