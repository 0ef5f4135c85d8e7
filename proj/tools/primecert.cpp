// primecert: re-derives and machine-checks the finite numerical certificates
// behind the non-unimodality of the k-th-prime-divisor density sequences.
//
// Exit status: 0 all selected checks verified, 1 verification failure,
// 2 usage or resource error.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "primecert/runner.hpp"
#include "primecert/tail.hpp"

namespace {

using namespace primecert;

int run_verify(const std::string& what, RunConfig config, ReportFormat format,
               const std::optional<std::string>& out_path) {
    if (what == "all") {
        config.suites = all_suites();
    } else if (auto id = suite_from_name(what)) {
        config.suites = {*id};
    } else {
        std::cerr << "primecert: unknown suite '" << what << "'\n";
        return 2;
    }

    const RunResult result = run(config);
    const std::string rendered =
        format == ReportFormat::machine ? render_machine(result.suites) : render_text(result.suites);
    if (out_path) write_atomically(*out_path, rendered);
    else std::cout << rendered;

    if (result.verdict != Verdict::pass) {
        std::cerr << "primecert: verification failed, first failing claim: "
                  << result.first_failure << "\n";
        return 1;
    }
    return 0;
}

int run_crt_demo(uint64_t q, RunConfig config, ReportFormat format,
                 const std::optional<std::string>& out_path, bool emit_block) {
    config.suites = {SuiteId::crt};
    config.crt_qs = {q};
    const RunResult result = run(config);

    std::string rendered =
        format == ReportFormat::machine ? render_machine(result.suites) : render_text(result.suites);
    if (emit_block && format == ReportFormat::text) {
        const PrimeTable table = PrimeTable::sieve(min_sieve_limit(config.suites, config.crt_qs));
        rendered += "\n" + render_crt_block(build_crt_block(q, table, config.crt_q_cap));
    }
    if (out_path) write_atomically(*out_path, rendered);
    else std::cout << rendered;

    if (result.verdict != Verdict::pass) {
        std::cerr << "primecert: verification failed, first failing claim: "
                  << result.first_failure << "\n";
        return 1;
    }
    return 0;
}

int run_explain(const std::string& claim_id) {
    const CertificateReport rep = explain(claim_id);
    SuiteResult sr;
    sr.id = suite_from_name(claim_id.substr(0, claim_id.find('.'))).value();
    sr.reports = {rep};
    sr.finalize();
    std::cout << render_text({sr});
    return rep.verdict == Verdict::pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificate verifier for prime-divisor density sequences"};
    app.require_subcommand(1);

    RunConfig config;
    if (const char* cache = std::getenv("PRIMECERT_CACHE_DIR"); cache && *cache)
        config.cache_dir = cache;

    std::string format_name = "text";
    std::optional<std::string> out_path;
    std::string precision_text;
    uint64_t sieve_limit = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--sieve-limit", sieve_limit, "sieve bound (raised to the suites' minimum)");
        cmd->add_option("--precision", precision_text, "target enclosure width, e.g. 1e-9");
        cmd->add_option("--format", format_name, "report format")
            ->check(CLI::IsMember({"text", "machine"}));
        cmd->add_option("--out", out_path, "write the report to this path (atomically)");
        cmd->add_option("--series-cap", config.series_cap, "log series length cap");
        cmd->add_option("--scan-cap", config.scan_cap, "largest 8P scanned directly");
    };

    std::string suite_arg;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite_arg, "all|constants|table1|ranges|records|tail|oracle")
        ->required();
    add_common(verify);

    uint64_t crt_q = 13;
    bool emit_block = false;
    CLI::App* crt = app.add_subcommand("crt-demo", "build and verify one composite block");
    crt->add_option("--q", crt_q, "prime q >= 13")->required();
    crt->add_option("--q-cap", config.crt_q_cap, "desk cap on q (big-integer blocks work to ~200)");
    crt->add_flag("--emit-block", emit_block, "append the block with witnesses to the report");
    add_common(crt);

    std::string claim_id;
    CLI::App* exp = app.add_subcommand("explain", "show one claim's checked inequalities");
    exp->add_option("claim_id", claim_id, "e.g. table1.r3.descent")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        config.sieve_limit = sieve_limit;
        if (!precision_text.empty()) config.precision = Rational::parse(precision_text);
        const ReportFormat format =
            format_name == "machine" ? ReportFormat::machine : ReportFormat::text;

        if (verify->parsed()) return run_verify(suite_arg, config, format, out_path);
        if (crt->parsed()) return run_crt_demo(crt_q, config, format, out_path, emit_block);
        if (exp->parsed()) return run_explain(claim_id);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "primecert: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "primecert: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        // bad argument values (composite q, nonpositive precision, ...)
        std::cerr << "primecert: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "primecert: " << e.what() << "\n";
        return 1;
    }
}
