#include "zetakit/cli.hpp"

#include "zetakit/combinatorics.hpp"
#include "zetakit/euler_sums.hpp"
#include "zetakit/polylog.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

namespace zetakit::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EvalResult {
    std::string value;
    std::string error_estimate = "0";
    std::size_t terms_used = 0;
    bool converged = true;
    bool exact = false;
};

bool is_integer_text(const std::string& s) {
    static const std::regex re("[+-]?[0-9]+");
    return std::regex_match(s, re);
}

long to_long(const std::string& s) {
    if (!is_integer_text(s)) throw UsageError("expected an integer, got '" + s + "'");
    try {
        return std::stol(s);
    } catch (const std::out_of_range&) {
        throw UsageError("integer out of range: " + s);
    }
}

std::string short_real(const Real& v) { return format_real(v, 3); }

EvalResult from_series(const SeriesResult& r, int digits) {
    EvalResult e;
    e.value = format_real(r.value, digits);
    e.error_estimate = short_real(r.error_estimate);
    e.terms_used = r.terms_used;
    e.converged = r.converged;
    return e;
}

EvalResult from_real(const Real& v, int digits) {
    EvalResult e;
    e.value = format_real(v, digits);
    return e;
}

EvalResult from_rational(const Rational& q) {
    EvalResult e;
    e.value = format_rational(q);
    e.exact = true;
    return e;
}

void arity(const std::string& name, const std::vector<std::string>& args, std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) {
        std::string want = lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
        throw UsageError(name + " takes " + want + " argument(s), got " + std::to_string(args.size()));
    }
}

EvalResult eval_integral(const std::string& key, const std::vector<std::string>& args, const PrecisionContext& ctx) {
    if (key == "cot_moment" || key == "zeta_odd_cot") {
        arity("integral:" + key, args, 1, 1);
        int n = static_cast<int>(to_long(args[0]));
        return from_series(key == "cot_moment" ? cot_moment(n, ctx) : zeta_odd_cot(n, ctx), ctx.digits - 10);
    }
    arity("integral:" + key, args, 0, 0);
    for (auto& identity : builtin_catalog()) {
        if (identity.category == Category::Integral && identity.id == key) {
            EvalResult e = from_real(identity.lhs(ctx), ctx.digits - 10);
            e.error_estimate = short_real(Real(ctx.tolerance));
            return e;
        }
    }
    throw UsageError("unknown integral key: " + key);
}

EvalResult evaluate(const std::string& fn, const std::vector<std::string>& args, const PrecisionContext& ctx) {
    int d = ctx.digits - 10;
    auto real = [&](std::size_t i) { return parse_real(args.at(i)); };

    if (fn.rfind("integral:", 0) == 0) return eval_integral(fn.substr(9), args, ctx);

    if (fn == "zeta" || fn == "zeta_alt") {
        arity(fn, args, 1, 1);
        if (is_integer_text(args[0])) {
            long m = to_long(args[0]);
            if (m <= 0) return from_rational(fn == "zeta" ? zeta_neg_int(static_cast<int>(-m)) : zeta_alt_neg_int(static_cast<int>(-m)));
            if (fn == "zeta") {
                if (m == 1) throw DomainError("zeta has a pole at s = 1");
                return from_series(zeta_hasse(Real(m), ctx), d);
            }
        }
        Real s = real(0);
        if (fn == "zeta_alt") return from_series(zeta_alt_sondow(s, ctx), d);
        return from_series(zeta_amore_coffey(s, constants::lambda_m(), ctx), d);
    }
    if (fn == "hurwitz") {
        arity(fn, args, 2, 2);
        return from_series(hurwitz_hasse(real(0), real(1), ctx), d);
    }
    if (fn == "alt_hurwitz") {
        arity(fn, args, 2, 2);
        return from_series(alt_hurwitz(real(0), real(1), ctx), d);
    }
    if (fn == "li") {
        arity(fn, args, 2, 2);
        Real s = real(0), x = real(1);
        if (abs(x) <= 1) return from_series(li_direct(s, x, ctx), d);
        if (!is_integer_text(args[0])) throw DomainError("li(s, x) with |x| > 1 needs an integer order");
        return from_real(polylog(static_cast<int>(to_long(args[0])), x), d);
    }
    if (fn == "lerch") {
        arity(fn, args, 3, 3);
        return from_series(lerch_phi(real(0), real(1), real(2), ctx), d);
    }
    if (fn == "euler_sum") {
        arity(fn, args, 2, 3);
        int p = static_cast<int>(to_long(args[0])), q = static_cast<int>(to_long(args[1]));
        if (args.size() == 2) return from_series(sum_at_one(p, q, ctx), d);
        return from_series(weighted_sum(EulerSumSpec({{p, 1}}, q, real(2)), ctx), d);
    }
    if (fn == "mu") {
        arity(fn, args, 1, 1);
        return from_series(alternating_mu(static_cast<int>(to_long(args[0])), ctx), d);
    }
    if (fn == "stirling1" || fn == "stirling2") {
        arity(fn, args, 2, 2);
        long n = to_long(args[0]), k = to_long(args[1]);
        return from_rational(fn == "stirling1" ? stirling_first(n, k) : stirling_second(n, k));
    }
    if (fn == "harmonic") {
        arity(fn, args, 1, 2);
        long n = to_long(args[0]);
        if (n < 0) throw DomainError("harmonic needs n >= 0");
        int r = args.size() == 2 ? static_cast<int>(to_long(args[1])) : 1;
        return from_rational(harmonic(static_cast<std::size_t>(n), r));
    }
    if (fn == "bernoulli") {
        arity(fn, args, 1, 1);
        long n = to_long(args[0]);
        if (n < 0) throw DomainError("bernoulli needs n >= 0");
        return from_rational(bernoulli_number(static_cast<std::size_t>(n)));
    }
    if (fn == "S_nm") {
        arity(fn, args, 2, 2);
        return from_rational(flajolet_S_direct(to_long(args[0]), static_cast<int>(to_long(args[1]))));
    }
    throw UsageError("unknown function: " + fn);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string r;
    for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? sep : "") + parts[i];
    return r;
}

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

bool has_values(const VerificationRecord& r) { return r.status != Status::Error; }

// Writes to --out when given, otherwise to out.
void emit(const CliConfig& config, std::ostream& out, const std::string& text) {
    if (config.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.out);
    if (!file) throw UsageError("cannot open output file: " + config.out);
    file << text;
}

}  // namespace

PrecisionContext CliConfig::context() const { return PrecisionContext(digits, tolerance, max_terms); }

Real parse_real(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            if (std::stol(text.substr(slash + 1)) == 0) throw UsageError("zero denominator: '" + text + "'");
            Rational q(text);
            return to_real(q);
        }
        static const std::regex re("[+-]?([0-9]+\\.?[0-9]*|\\.[0-9]+)([eE][+-]?[0-9]+)?");
        if (!std::regex_match(text, re)) throw UsageError("not a number: '" + text + "'");
        return Real(text);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + text + "'");
    }
}

std::string report_json(const VerificationReport& report, const std::string& timestamp) {
    json doc;
    doc["run"] = {{"digits", report.digits}, {"tolerance", report.tolerance}, {"timestamp", timestamp}};
    json ids = json::array();
    for (auto& r : report.records) {
        json item = {{"id", r.id}, {"category", to_string(r.category)}, {"paper_eq", r.paper_eq}};
        if (has_values(r)) {
            item["lhs"] = format_real(r.lhs, report.digits);
            item["rhs"] = format_real(r.rhs, report.digits);
            item["abs_err"] = r.abs_err.convert_to<double>();
            item["rel_err"] = r.rel_err.convert_to<double>();
        } else {
            item["lhs"] = item["rhs"] = item["abs_err"] = item["rel_err"] = nullptr;
        }
        item["status"] = to_string(r.status);
        item["elapsed_ms"] = r.elapsed_ms;
        ids.push_back(std::move(item));
    }
    doc["identities"] = std::move(ids);
    auto& s = report.summary;
    doc["summary"] = {{"passed", s.passed},
                      {"failed", s.failed},
                      {"expected_failed_confirmed", s.expected_failed_confirmed},
                      {"unexpected_pass", s.unexpected_pass},
                      {"errors", s.errors}};
    return doc.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "id,category,paper_eq,lhs,rhs,abs_err,rel_err,status,elapsed_ms\n";
    for (auto& r : report.records) {
        bool v = has_values(r);
        os << csv_field(r.id) << ',' << to_string(r.category) << ',' << csv_field(r.paper_eq) << ','
           << (v ? format_real(r.lhs, report.digits) : "") << ',' << (v ? format_real(r.rhs, report.digits) : "")
           << ',' << (v ? short_real(r.abs_err) : "") << ',' << (v ? short_real(r.rel_err) : "") << ','
           << to_string(r.status) << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << '\n';
        os.unsetf(std::ios::fixed);
    }
    return os.str();
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "digits " << report.digits << ", tolerance " << report.tolerance << "\n";
    std::size_t width = 0;
    for (auto& r : report.records) width = std::max(width, r.id.size());
    for (auto& r : report.records) {
        os << std::left << std::setw(static_cast<int>(width) + 2) << r.id << std::setw(26) << to_string(r.status);
        if (has_values(r))
            os << "rel_err " << short_real(r.rel_err);
        else
            os << r.message;
        os << "\n";
    }
    auto& s = report.summary;
    os << "passed " << s.passed << ", failed " << s.failed << ", expected_failed_confirmed "
       << s.expected_failed_confirmed << ", unexpected_pass " << s.unexpected_pass << ", errors " << s.errors
       << ", conjectures " << s.conjectures_evaluated << "\n";
    return os.str();
}

int cmd_eval(const std::string& function, const std::vector<std::string>& args, const CliConfig& config,
             std::ostream& out, std::ostream& err) {
    // work past the printed digits so every one of them is right
    PrecisionContext ctx(config.digits + 10, config.tolerance > 0 ? config.tolerance : std::pow(10.0, -config.digits - 3),
                         config.max_terms);
    EvalResult r;
    try {
        PrecisionScope scope(ctx.digits + 10);
        r = evaluate(function, args, ctx);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const NoClosedForm& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    }

    std::ostringstream os;
    if (config.format == "json") {
        json doc = {{"function", function},  {"args", args},
                    {"value", r.value},      {"exact", r.exact},
                    {"error_estimate", r.error_estimate}, {"terms_used", r.terms_used},
                    {"converged", r.converged}};
        os << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        os << "function,args,value,error_estimate,terms_used,converged\n"
           << csv_field(function) << ',' << csv_field(join(args, " ")) << ',' << r.value << ',' << r.error_estimate
           << ',' << r.terms_used << ',' << (r.converged ? "true" : "false") << "\n";
    } else {
        os << r.value << "\n"
           << "error_estimate " << r.error_estimate << "\n"
           << "terms_used " << r.terms_used << "\n"
           << "converged " << (r.converged ? "true" : "false") << "\n";
    }
    emit(config, out, os.str());
    return kOk;
}

int cmd_verify(const std::vector<Identity>& catalog, const CliConfig& config, std::ostream& out, std::ostream& err) {
    Filter filter;
    try {
        filter = Filter::parse(config.filter);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    VerificationReport report = run_suite(catalog, filter, config.context());
    std::string text;
    if (config.format == "json")
        text = report_json(report, utc_timestamp());
    else if (config.format == "csv")
        text = report_csv(report);
    else
        text = report_text(report);
    emit(config, out, text);
    return report.ok() ? kOk : kVerificationFailure;
}

int cmd_list(const CliConfig& config, std::ostream& out) {
    Filter filter = Filter::parse(config.filter);
    std::vector<const Identity*> rows;
    for (auto& identity : builtin_catalog())
        if (filter.matches(identity)) rows.push_back(&identity);
    std::sort(rows.begin(), rows.end(), [](const Identity* a, const Identity* b) { return a->id < b->id; });

    std::ostringstream os;
    if (config.format == "json") {
        json arr = json::array();
        for (auto* i : rows)
            arr.push_back({{"id", i->id},
                           {"category", to_string(i->category)},
                           {"paper_eq", i->paper_eq},
                           {"expected", to_string(i->expected)}});
        os << arr.dump(2) << "\n";
    } else if (config.format == "csv") {
        os << "id,category,paper_eq,expected\n";
        for (auto* i : rows)
            os << csv_field(i->id) << ',' << to_string(i->category) << ',' << csv_field(i->paper_eq) << ','
               << to_string(i->expected) << "\n";
    } else {
        for (auto* i : rows)
            os << i->id << ' ' << to_string(i->category) << ' ' << i->paper_eq << ' ' << to_string(i->expected)
               << "\n";
    }
    emit(config, out, os.str());
    return kOk;
}

std::vector<BenchRow> bench(const Real& s, const std::vector<Real>& lambdas, double target_tol,
                            const CliConfig& config) {
    if (s <= 0) throw DomainError("bench needs s > 0");
    PrecisionContext ctx = config.context();
    PrecisionScope scope(ctx.digits + 10);

    Real reference;
    {
        PrecisionContext ref_ctx = ctx.with_digits(2 * ctx.digits);
        PrecisionScope ref_scope(ref_ctx.digits);
        Real sv(s);
        reference = (1 - pow(Real(2), 1 - sv)) * zeta_hasse(sv, ref_ctx).value;
    }
    Real tol(target_tol);
    std::vector<BenchRow> rows;

    BenchRow naive{"naive", "", 0, false, Real(0)};
    {
        Real partial = 0;
        for (std::size_t n = 1; n <= ctx.max_terms; ++n) {
            Real t = pow(Real(n), -s);
            partial += (n & 1) ? t : Real(-t);
            naive.terms = n;
            naive.final_abs_err = abs(partial - reference);
            if (naive.final_abs_err <= tol) {
                naive.reached = true;
                break;
            }
        }
    }
    rows.push_back(naive);

    // the lambda family has an O(n) inner sum, so its budget is capped lower
    PrecisionContext outer = ctx;
    outer.max_terms = std::min<std::size_t>(ctx.max_terms, 2000);
    auto accelerated = [&](const std::string& method, const Real& lambda) {
        BenchRow row{method, format_real(lambda, 6), 0, false, Real(0)};
        zeta_alt_amore_partials(s, lambda, outer, [&](std::size_t n, const Real& partial) {
            row.terms = n;
            row.final_abs_err = abs(partial - reference);
            row.reached = row.final_abs_err <= tol;
            return !row.reached;
        });
        return row;
    };
    rows.push_back(accelerated("sondow", Real(1)));
    for (auto& lambda : lambdas) rows.push_back(accelerated("amore", lambda));
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "method,lambda,terms_to_tol,final_abs_err\n";
    for (auto& r : rows)
        os << r.method << ',' << r.lambda << ',' << (r.reached ? std::to_string(r.terms) : std::string("budget"))
           << ',' << short_real(r.final_abs_err) << "\n";
    return os.str();
}

int cmd_bench(const std::string& s, double target_tol, const CliConfig& config, std::ostream& out,
              std::ostream& err) {
    std::vector<BenchRow> rows;
    try {
        PrecisionScope scope(config.digits + 10);
        Real sv = parse_real(s);
        std::vector<Real> lambdas;
        for (auto& text : config.lambdas) {
            Real l = parse_real(text);
            if (l <= 0) throw DomainError("lambda must be positive");
            lambdas.push_back(l);
        }
        if (lambdas.empty()) lambdas = {constants::lambda_m(), Real(1)};
        rows = bench(sv, lambdas, target_tol, config);
        // report lambdas the way they were given
        for (std::size_t i = 0; i < config.lambdas.size(); ++i) rows[i + 2].lambda = config.lambdas[i];
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kDomain;
    }

    std::string text;
    if (config.format == "json") {
        json arr = json::array();
        for (auto& r : rows)
            arr.push_back({{"method", r.method},
                           {"lambda", r.lambda},
                           {"terms_to_tol", r.reached ? json(r.terms) : json("budget")},
                           {"final_abs_err", r.final_abs_err.convert_to<double>()}});
        text = arr.dump(2) + "\n";
    } else {
        text = bench_csv(rows);
    }
    emit(config, out, text);
    return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    if (const char* env = std::getenv("ZETAKIT_DIGITS")) {
        try {
            config.digits = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: ZETAKIT_DIGITS is not an integer\n";
            return kUsage;
        }
    }

    CLI::App app{"High-precision zeta, polylogarithm and Euler-sum evaluator", "zetakit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--digits", config.digits, "Working precision in decimal digits")->check(CLI::Range(10, 100000));
    app.add_option("--tol", config.tolerance, "Tolerance (default 10^(5-digits); target for bench)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-terms", config.max_terms, "Series term budget")->check(CLI::PositiveNumber);
    app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", config.out, "Write output to a file instead of stdout");

    std::string function;
    std::vector<std::string> args;
    auto* eval = app.add_subcommand("eval", "Evaluate a function");
    eval->add_option("function", function, "zeta, zeta_alt, hurwitz, alt_hurwitz, li, lerch, euler_sum, mu, "
                                           "stirling1, stirling2, harmonic, bernoulli, S_nm, integral:<key>")
        ->required();
    eval->add_option("args", args, "Arguments; fractions like 1/3 are accepted")->allow_extra_args();

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--filter", config.filter, "all, category:<name> or id:<id>");

    std::string s_text = "3";
    auto* bench_cmd = app.add_subcommand("bench", "Terms needed to reach a tolerance, per acceleration family");
    bench_cmd->add_option("--s", s_text, "Argument s > 0");
    bench_cmd->add_option("--lambdas", config.lambdas, "Comma separated lambda values")->delimiter(',');

    auto* list = app.add_subcommand("list", "List catalog entries");
    list->add_option("--filter", config.filter, "all, category:<name> or id:<id>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    if (config.digits < 10) {
        err << "error: digits must be at least 10\n";
        return kUsage;
    }

    try {
        if (*eval) return cmd_eval(function, args, config, out, err);
        if (*verify) return cmd_verify(builtin_catalog(), config, out, err);
        if (*bench_cmd) {
            double target = app.count("--tol") ? config.tolerance : 1e-12;
            CliConfig bench_config = config;
            bench_config.tolerance = 0;
            return cmd_bench(s_text, target, bench_config, out, err);
        }
        if (*list) return cmd_list(config, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace zetakit::cli
