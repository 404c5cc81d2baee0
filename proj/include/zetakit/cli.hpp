#pragma once

#include "zetakit/registry.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit::cli {

enum ExitCode { kOk = 0, kVerificationFailure = 1, kUsage = 2, kDomain = 3 };

struct CliConfig {
    int digits = 40;
    double tolerance = 0;  // 0: derived from digits
    std::size_t max_terms = 100000;
    std::string format = "text";  // text | json | csv
    std::string filter = "all";
    std::vector<std::string> lambdas;
    std::string out;

    PrecisionContext context() const;
};

// Whole command line, argv[0] included. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int cmd_eval(const std::string& function, const std::vector<std::string>& args, const CliConfig& config,
             std::ostream& out, std::ostream& err);
int cmd_verify(const std::vector<Identity>& catalog, const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_list(const CliConfig& config, std::ostream& out);

struct BenchRow {
    std::string method;  // naive | sondow | amore
    std::string lambda;  // empty for naive
    std::size_t terms = 0;
    bool reached = false;  // false: budget ran out first
    Real final_abs_err;
};
std::vector<BenchRow> bench(const Real& s, const std::vector<Real>& lambdas, double target_tol, const CliConfig& config);
int cmd_bench(const std::string& s, double target_tol, const CliConfig& config, std::ostream& out,
              std::ostream& err);

std::string report_json(const VerificationReport& report, const std::string& timestamp);
std::string report_csv(const VerificationReport& report);
std::string report_text(const VerificationReport& report);
std::string bench_csv(const std::vector<BenchRow>& rows);

// "1/3", "-2", "0.25", "1e-3" at the current default precision
Real parse_real(const std::string& text);

}  // namespace zetakit::cli
