#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/registry.hpp"

#include <set>
#include <stdexcept>

using namespace zetakit;

namespace {

Identity constant_pair(std::string id, const char* lhs, const char* rhs, Expected expected = Expected::Pass) {
    Identity i;
    i.id = std::move(id);
    i.category = Category::ZetaSeries;
    i.paper_eq = "test";
    i.lhs = [lhs](const PrecisionContext&) { return Real(lhs); };
    i.rhs = [rhs](const PrecisionContext&) { return Real(rhs); };
    i.expected = expected;
    return i;
}

}  // namespace

TEST_CASE("category and status names") {
    for (auto c : {Category::ZetaSeries, Category::PolylogFunctional, Category::EulerSum, Category::Integral,
                   Category::Combinatorial, Category::Conjecture})
        CHECK(parse_category(to_string(c)) == c);
    CHECK(to_string(Category::EulerSum) == "euler-sum");
    CHECK(to_string(Status::ExpectedFailedConfirmed) == "expected_failed_confirmed");
    CHECK_THROWS_AS(parse_category("nope"), std::invalid_argument);
}

TEST_CASE("filters") {
    Identity a = constant_pair("3.129/q=2", "1", "1");
    Identity b = constant_pair("3.1290", "1", "1");
    CHECK(Filter::parse("all").matches(a));
    CHECK(Filter::parse("id:3.129").matches(a));
    CHECK_FALSE(Filter::parse("id:3.129").matches(b));
    CHECK(Filter::parse("category:zeta-series").matches(a));
    CHECK_FALSE(Filter::parse("category:integral").matches(a));
    CHECK_THROWS_AS(Filter::parse("category:"), std::invalid_argument);
    CHECK_THROWS_AS(Filter::parse("name:x"), std::invalid_argument);
    CHECK_THROWS_AS(Filter::parse("garbage"), std::invalid_argument);
}

TEST_CASE("verification statuses") {
    PrecisionContext ctx(30);
    CHECK(verify(constant_pair("ok", "1.5", "1.5"), ctx).status == Status::Pass);
    CHECK(verify(constant_pair("off", "1.5", "1.6"), ctx).status == Status::Fail);
    CHECK(verify(constant_pair("ef", "1.5", "2", Expected::ExpectedFail), ctx).status == Status::ExpectedFailedConfirmed);
    CHECK(verify(constant_pair("up", "2", "2", Expected::ExpectedFail), ctx).status == Status::UnexpectedPass);
    CHECK(verify(constant_pair("cj", "2", "3", Expected::Conjecture), ctx).status == Status::Conjecture);

    Identity thrower = constant_pair("boom", "1", "1");
    thrower.lhs = [](const PrecisionContext&) -> Real { throw DomainError("bad"); };
    auto rec = verify(thrower, ctx);
    CHECK(rec.status == Status::Error);
    CHECK(rec.message == "bad");

    // within 10x the tolerance passes, beyond it fails
    CHECK(verify(constant_pair("edge", "1.000000000000000000000000005", "1"), ctx).status == Status::Pass);
    CHECK(verify(constant_pair("edge", "1.000000000000000000000005", "1"), ctx).status == Status::Fail);
}

TEST_CASE("suite summary and ordering") {
    PrecisionContext ctx(30);
    std::vector<Identity> catalog = {constant_pair("b", "1", "1"), constant_pair("a", "1", "2"),
                                     constant_pair("c", "1", "2", Expected::ExpectedFail)};
    auto report = run_suite(catalog, Filter::parse("all"), ctx);
    REQUIRE(report.records.size() == 3);
    CHECK(report.records[0].id == "a");
    CHECK(report.records[2].id == "c");
    CHECK(report.summary.passed == 1);
    CHECK(report.summary.failed == 1);
    CHECK(report.summary.expected_failed_confirmed == 1);
    CHECK_FALSE(report.ok());
    catalog.erase(catalog.begin() + 1);
    CHECK(run_suite(catalog, Filter::parse("all"), ctx).ok());
}

TEST_CASE("builtin catalog shape") {
    auto& catalog = builtin_catalog();
    CHECK(catalog.size() >= 60);
    std::set<std::string> ids;
    std::set<Category> categories;
    int expected_fail = 0;
    for (auto& i : catalog) {
        CHECK(ids.insert(i.id).second);
        categories.insert(i.category);
        CHECK(i.lhs);
        CHECK(i.rhs);
        CHECK_FALSE(i.paper_eq.empty());
        if (i.expected == Expected::ExpectedFail) ++expected_fail;
        if (i.category == Category::Conjecture) CHECK(i.expected == Expected::Conjecture);
    }
    CHECK(categories.size() == 6);
    CHECK(expected_fail == 4);
    CHECK(ids.count("3.47"));
    CHECK(ids.count("3.141"));
}

TEST_CASE("selected catalog entries verify") {
    PrecisionContext ctx(30);
    for (const char* f : {"id:3.47", "id:3.110n-first", "id:1.1-relation", "category:combinatorial"}) {
        CAPTURE(f);
        auto report = run_suite(Filter::parse(f), ctx);
        CHECK_FALSE(report.records.empty());
        CHECK(report.ok());
    }
}
