#include "zetakit/registry.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace zetakit {

namespace {

struct CategoryName {
    Category category;
    const char* name;
};

constexpr CategoryName kCategoryNames[] = {
    {Category::ZetaSeries, "zeta-series"},       {Category::PolylogFunctional, "polylog-functional"},
    {Category::EulerSum, "euler-sum"},           {Category::Integral, "integral"},
    {Category::Combinatorial, "combinatorial"},  {Category::Conjecture, "conjecture"},
};

}  // namespace

std::string to_string(Category c) {
    for (auto& entry : kCategoryNames)
        if (entry.category == c) return entry.name;
    return "unknown";
}

Category parse_category(const std::string& name) {
    for (auto& entry : kCategoryNames)
        if (name == entry.name) return entry.category;
    throw std::invalid_argument("unknown category: " + name);
}

std::string to_string(Expected e) {
    switch (e) {
        case Expected::Pass: return "pass";
        case Expected::ExpectedFail: return "expected-fail";
        case Expected::Conjecture: return "conjecture";
    }
    return "unknown";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::ExpectedFailedConfirmed: return "expected_failed_confirmed";
        case Status::UnexpectedPass: return "unexpected_pass";
        case Status::Conjecture: return "conjecture";
        case Status::Error: return "error";
    }
    return "unknown";
}

bool VerificationReport::ok() const {
    return summary.failed == 0 && summary.errors == 0 && summary.unexpected_pass == 0;
}

Filter Filter::parse(const std::string& expr) {
    Filter f;
    if (expr.empty() || expr == "all") return f;
    auto colon = expr.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("filter must be all, category:<name> or id:<id>");
    std::string key = expr.substr(0, colon), value = expr.substr(colon + 1);
    if (value.empty()) throw std::invalid_argument("empty filter value");
    if (key == "category") {
        f.kind_ = Kind::Category;
        f.category_ = parse_category(value);
    } else if (key == "id") {
        f.kind_ = Kind::Id;
        f.id_ = value;
    } else {
        throw std::invalid_argument("unknown filter key: " + key);
    }
    return f;
}

bool Filter::matches(const Identity& identity) const {
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Category: return identity.category == category_;
        case Kind::Id:
            return identity.id == id_ ||
                   (identity.id.size() > id_.size() && identity.id.compare(0, id_.size(), id_) == 0 &&
                    identity.id[id_.size()] == '/');
    }
    return false;
}

VerificationRecord verify(const Identity& identity, const PrecisionContext& ctx) {
    VerificationRecord rec;
    rec.id = identity.id;
    rec.category = identity.category;
    rec.paper_eq = identity.paper_eq;
    auto start = std::chrono::steady_clock::now();
    try {
        PrecisionScope scope(ctx.digits);
        rec.lhs = identity.lhs(ctx);
        rec.rhs = identity.rhs(ctx);
        rec.abs_err = abs(rec.lhs - rec.rhs);
        rec.rel_err = relative_error(rec.lhs, rec.rhs, ctx.tolerance);
        bool within = rec.rel_err <= identity.tolerance_scale * ctx.tolerance;
        switch (identity.expected) {
            case Expected::Pass: rec.status = within ? Status::Pass : Status::Fail; break;
            case Expected::ExpectedFail:
                rec.status = rec.rel_err > 100 * ctx.tolerance ? Status::ExpectedFailedConfirmed : Status::UnexpectedPass;
                break;
            case Expected::Conjecture: rec.status = Status::Conjecture; break;
        }
    } catch (const std::exception& e) {
        rec.status = Status::Error;
        rec.message = e.what();
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

VerificationReport run_suite(const std::vector<Identity>& catalog, const Filter& filter, const PrecisionContext& ctx) {
    VerificationReport report;
    report.digits = ctx.digits;
    report.tolerance = ctx.tolerance;
    for (auto& identity : catalog)
        if (filter.matches(identity)) report.records.push_back(verify(identity, ctx));
    std::sort(report.records.begin(), report.records.end(),
              [](const VerificationRecord& a, const VerificationRecord& b) { return a.id < b.id; });
    for (auto& rec : report.records) {
        switch (rec.status) {
            case Status::Pass: ++report.summary.passed; break;
            case Status::Fail: ++report.summary.failed; break;
            case Status::ExpectedFailedConfirmed: ++report.summary.expected_failed_confirmed; break;
            case Status::UnexpectedPass: ++report.summary.unexpected_pass; break;
            case Status::Conjecture: ++report.summary.conjectures_evaluated; break;
            case Status::Error: ++report.summary.errors; break;
        }
    }
    return report;
}

VerificationReport run_suite(const Filter& filter, const PrecisionContext& ctx) {
    return run_suite(builtin_catalog(), filter, ctx);
}

}  // namespace zetakit
