#include "bellcomb/errors.hpp"
#include "bellcomb/verify.hpp"

#include <doctest.h>

using namespace bellcomb;

namespace {

VerificationReport sweep(Identity id, int max_n, Mode mode = Mode::both, bool falsify = false, unsigned threads = 2)
{
    VerifyOptions o;
    o.identity = id;
    o.max_n = max_n;
    o.mode = mode;
    o.falsify_oracle = falsify;
    o.threads = threads;
    return run_verification(o);
}

} // namespace

TEST_CASE("identity and mode names round trip")
{
    for (Identity id : all_identities())
        CHECK(parse_identity(identity_name(id)) == id);
    CHECK(all_identities().size() == 11);
    CHECK(parse_identity("nc-k") == Identity::nc_k);
    CHECK_FALSE(parse_identity("thm9").has_value());
    for (Mode m : {Mode::closed_form, Mode::enumerative, Mode::both})
        CHECK(parse_mode(mode_name(m)) == m);
    CHECK_FALSE(parse_mode("fast").has_value());
}

TEST_CASE("small sweeps pass for every identity")
{
    for (Identity id : all_identities()) {
        CAPTURE(identity_name(id));
        const auto report = sweep(id, 5);
        CHECK(report.passed());
        CHECK_FALSE(report.cells.empty());
        for (const auto& cell : report.cells)
            if (!cell.passed)
                MESSAGE(cell.params << ": " << cell.detail << " / " << cell.counterexample);
    }
}

TEST_CASE("falsified oracle makes every cell fail with a counterexample")
{
    for (Identity id : all_identities()) {
        CAPTURE(identity_name(id));
        const auto report = sweep(id, 4, Mode::both, true);
        CHECK_FALSE(report.passed());
        CHECK(report.failures() == report.cells.size());
        for (const auto& cell : report.cells)
            CHECK_FALSE(cell.counterexample.empty());
    }
}

TEST_CASE("mode selects routes")
{
    const auto closed = sweep(Identity::thm1, 4, Mode::closed_form);
    for (const auto& cell : closed.cells)
        CHECK(cell.route == "closed-form");
    const auto enumerative = sweep(Identity::thm1, 4, Mode::enumerative);
    for (const auto& cell : enumerative.cells)
        CHECK(cell.route == "enumerative");
    CHECK(sweep(Identity::thm1, 4).cells.size() > closed.cells.size());
    // Closed form reaches far past the enumeration ceiling.
    CHECK(sweep(Identity::thm1, 60, Mode::closed_form).passed());
    // Single-route identities ignore the mode.
    CHECK(sweep(Identity::psi, 3, Mode::closed_form).passed());
}

TEST_CASE("cell order does not depend on the thread count")
{
    const auto one = sweep(Identity::cor4, 7, Mode::both, false, 1);
    const auto many = sweep(Identity::cor4, 7, Mode::both, false, 8);
    REQUIRE(one.cells.size() == many.cells.size());
    for (std::size_t i = 0; i < one.cells.size(); ++i)
        CHECK(one.cells[i].params == many.cells[i].params);
}

TEST_CASE("ceilings")
{
    CHECK_THROWS_AS(sweep(Identity::thm1, max_n_ceiling(Identity::thm1, Mode::enumerative) + 1, Mode::enumerative),
                    SizeTooLarge);
    CHECK_THROWS_AS(sweep(Identity::involution, 40), SizeTooLarge);
    CHECK_THROWS_AS(sweep(Identity::thm2, 13, Mode::closed_form), SizeTooLarge);
    CHECK_THROWS_AS(sweep(Identity::thm1, -1), NegativeIndex);
    CHECK(max_n_ceiling(Identity::thm1, Mode::closed_form) >= 100);
}
