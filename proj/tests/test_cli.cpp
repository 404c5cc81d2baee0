#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "zetakit/cli.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <sys/wait.h>

using namespace zetakit;

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

// Runs the installed binary through the shell; stderr is dropped.
Outcome run_binary(const std::string& args) {
    const char* bin = std::getenv("ZETAKIT_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "ZETAKIT_BIN not set");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    Outcome o;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), n);
    int status = pclose(pipe);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("eval") {
    auto z2 = run_binary("eval zeta 2 --digits 40");
    CHECK(z2.code == 0);
    CHECK(first_line(z2.out).rfind("1.644934066848226436472415166646", 0) == 0);
    CHECK(z2.out.find("terms_used") != std::string::npos);

    auto eta = run_binary("eval zeta_alt -1");
    CHECK(eta.code == 0);
    CHECK(first_line(eta.out) == "1/4");

    auto li = run_binary("eval li 2 0.5");
    CHECK(li.code == 0);
    CHECK(first_line(li.out).rfind("0.5822405264650125", 0) == 0);

    CHECK(first_line(run_binary("eval zeta -1").out) == "-1/12");
    CHECK(first_line(run_binary("eval bernoulli 12").out) == "-691/2730");
    CHECK(first_line(run_binary("eval harmonic 4").out) == "25/12");
    CHECK(first_line(run_binary("eval stirling2 5 2").out) == "15");
    CHECK(first_line(run_binary("eval hurwitz 2 1/3 --digits 20").out).rfind("10.0955971254270940", 0) == 0);
}

TEST_CASE("eval formats") {
    auto j = run_binary("eval zeta 3 --format json");
    REQUIRE(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["function"] == "zeta");
    CHECK(doc["value"].get<std::string>().rfind("1.2020569031595942853997", 0) == 0);
    CHECK(doc["converged"] == true);

    auto c = run_binary("eval zeta_alt 0 --format csv");
    CHECK(first_line(c.out) == "function,args,value,error_estimate,terms_used,converged");
    CHECK(c.out.find("zeta_alt,0,1/2,") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_binary("eval zeta 1").code == 3);
    CHECK(run_binary("eval nosuch 1").code == 2);
    CHECK(run_binary("eval zeta").code == 2);
    CHECK(run_binary("eval zeta abc").code == 2);
    CHECK(run_binary("--digits 5 eval zeta 2").code == 2);
    CHECK(run_binary("list --bogus").code == 2);
    CHECK(run_binary("").code == 2);
    CHECK(run_binary("verify --filter bad").code == 2);
    CHECK(run_binary("--help").code == 0);
}

TEST_CASE("digits from the environment") {
    auto r = run_binary("eval zeta 2");
    const char* bin = std::getenv("ZETAKIT_BIN");
    REQUIRE(bin != nullptr);
    FILE* pipe = popen((std::string("ZETAKIT_DIGITS=15 ") + bin + " eval zeta 2").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[256] = {};
    REQUIRE(fgets(buf, sizeof buf, pipe) != nullptr);
    pclose(pipe);
    CHECK(std::string(buf) == "1.64493406684823\n");
    CHECK(first_line(r.out).size() > 30);
}

TEST_CASE("verify") {
    auto r = run_binary("verify --filter category:euler-sum --format json");
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["run"]["digits"] == 40);
    CHECK(doc["run"].contains("timestamp"));
    CHECK(doc["run"].contains("tolerance"));
    REQUIRE(doc["identities"].size() > 20);
    for (auto& item : doc["identities"]) {
        for (const char* key : {"id", "category", "paper_eq", "lhs", "rhs", "abs_err", "rel_err", "status", "elapsed_ms"})
            CHECK(item.contains(key));
        CHECK(item["category"] == "euler-sum");
    }
    for (const char* key : {"passed", "failed", "expected_failed_confirmed", "unexpected_pass", "errors"})
        CHECK(doc["summary"].contains(key));
    CHECK(doc["summary"]["failed"] == 0);

    auto ef = run_binary("verify --filter id:3.110n-first");
    CHECK(ef.code == 0);
    CHECK(ef.out.find("expected_failed_confirmed") != std::string::npos);

    auto csv = run_binary("verify --filter id:3.47 --format csv");
    CHECK(first_line(csv.out) == "id,category,paper_eq,lhs,rhs,abs_err,rel_err,status,elapsed_ms");
}

TEST_CASE("verify with an injected broken identity fails") {
    Identity broken;
    broken.id = "broken";
    broken.paper_eq = "none";
    broken.lhs = [](const PrecisionContext&) { return Real(1); };
    broken.rhs = [](const PrecisionContext&) { return Real(2); };
    std::vector<Identity> catalog = builtin_catalog();
    catalog.push_back(broken);
    cli::CliConfig config;
    config.digits = 30;
    config.filter = "id:broken";
    std::ostringstream out, err;
    CHECK(cli::cmd_verify(catalog, config, out, err) == cli::kVerificationFailure);
    CHECK(out.str().find("fail") != std::string::npos);
}

TEST_CASE("bench") {
    auto r = run_binary("bench --s 3 --lambdas 0.4494,1.0 --tol 1e-12");
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "method,lambda,terms_to_tol,final_abs_err");
    std::map<std::string, long> terms;
    while (std::getline(in, line)) {
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) f.push_back(cell);
        REQUIRE(f.size() == 4);
        CHECK(std::stod(f[3]) <= 1e-12);
        terms[f[0] + ":" + f[1]] = std::stol(f[2]);
    }
    CHECK(terms.at("amore:0.4494") < terms.at("amore:1.0"));
    CHECK(terms.at("sondow:1") < 100);

    auto budget = run_binary("bench --s 3 --lambdas 0.5 --tol 1e-30 --max-terms 100");
    CHECK(budget.code == 0);
    CHECK(budget.out.find("naive,,budget,") != std::string::npos);
    CHECK(run_binary("bench --s -1").code == 3);
}

TEST_CASE("list") {
    auto all = run_binary("list");
    CHECK(all.code == 0);
    CHECK(all.out.find("\n3.47 euler-sum") != std::string::npos);
    CHECK(count_lines(all.out) >= 60);
    auto conj = run_binary("list --filter category:conjecture");
    CHECK(conj.out.find("3.141") != std::string::npos);
    CHECK(count_lines(conj.out) == 2);
}

TEST_CASE("argument parsing helpers") {
    PrecisionScope scope(30);
    CHECK(cli::parse_real("1/4") == Real("0.25"));
    CHECK(cli::parse_real("-2") == -2);
    CHECK(cli::parse_real("1e-3") == Real("0.001"));
    CHECK_THROWS(cli::parse_real("x"));
    CHECK_THROWS(cli::parse_real("1/0"));
}
