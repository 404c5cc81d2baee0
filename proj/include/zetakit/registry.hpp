#pragma once

#include "zetakit/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetakit {

enum class Category { ZetaSeries, PolylogFunctional, EulerSum, Integral, Combinatorial, Conjecture };
enum class Expected { Pass, ExpectedFail, Conjecture };
enum class Status { Pass, Fail, ExpectedFailedConfirmed, UnexpectedPass, Conjecture, Error };

std::string to_string(Category c);
std::string to_string(Expected e);
std::string to_string(Status s);
Category parse_category(const std::string& name);  // throws std::invalid_argument

// Evaluated with the default precision already set to ctx.digits.
using Evaluable = std::function<Real(const PrecisionContext&)>;

struct Identity {
    std::string id;
    Category category = Category::ZetaSeries;
    std::string paper_eq;
    Evaluable lhs;
    Evaluable rhs;
    double tolerance_scale = 10;
    Expected expected = Expected::Pass;
    std::string note;
};

struct VerificationRecord {
    std::string id;
    Category category = Category::ZetaSeries;
    std::string paper_eq;
    Real lhs;
    Real rhs;
    Real abs_err;
    Real rel_err;
    Status status = Status::Error;
    double elapsed_ms = 0;
    std::string message;  // exception text for Status::Error
};

struct Summary {
    int passed = 0;
    int failed = 0;
    int expected_failed_confirmed = 0;
    int unexpected_pass = 0;
    int errors = 0;
    int conjectures_evaluated = 0;
};

struct VerificationReport {
    int digits = 0;
    double tolerance = 0;
    std::vector<VerificationRecord> records;  // sorted by id
    Summary summary;

    // no failures, no errors, no unexpected passes
    bool ok() const;
};

// "all", "category:<name>" or "id:<id>". An id filter also matches the
// parameterised entries "<id>/...".
class Filter {
public:
    static Filter parse(const std::string& expr);  // throws std::invalid_argument
    bool matches(const Identity& identity) const;

private:
    enum class Kind { All, Category, Id } kind_ = Kind::All;
    Category category_ = Category::ZetaSeries;
    std::string id_;
};

const std::vector<Identity>& builtin_catalog();

VerificationRecord verify(const Identity& identity, const PrecisionContext& ctx);

VerificationReport run_suite(const std::vector<Identity>& catalog, const Filter& filter, const PrecisionContext& ctx);
VerificationReport run_suite(const Filter& filter, const PrecisionContext& ctx);

}  // namespace zetakit
