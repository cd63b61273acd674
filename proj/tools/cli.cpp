#include "cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "symprod/errors.hpp"
#include "symprod/hodge_numbers.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/signature.hpp"

namespace symprod::cli {

namespace {

struct Options {
    std::string input;
    std::string pairing;
    std::size_t max_n = 4;
    std::size_t n = 0;
    std::string format = "text";
    bool check = false;
    bool brute = false;
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::size_t dim_bound = OracleConfig{}.dim_bound;
};

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_error("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

HodgeNumbers load_hodge(const std::string& path)
{
    try {
        return parse_hodge(read_file(path));
    } catch (const parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

GradedPairing load_pairing(const std::string& path)
{
    try {
        return parse_pairing(read_file(path));
    } catch (const parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void write_series(std::ostream& out, const TruncSeries& s)
{
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out << "n=" << n << ": " << s[n] << '\n';
    }
}

nlohmann::json series_json(const TruncSeries& s)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : s.coefficients()) {
        rows.push_back(c.to_string());
    }
    return rows;
}

int cmd_sym_series(const Options& o, std::ostream& out)
{
    const HodgeNumbers h = load_hodge(o.input);
    const TruncSeries s = sym_hodge_series(h, o.max_n);
    if (o.format == "json") {
        nlohmann::json doc = hodge_to_json(h);
        doc["series"] = series_json(s);
        out << doc.dump(2) << '\n';
    } else {
        write_series(out, s);
    }
    return exit_ok;
}

int cmd_sym_hodge(const Options& o, std::ostream& out)
{
    const HodgeNumbers result = sym_hodge_numbers(load_hodge(o.input), o.n);
    if (o.format == "json") {
        nlohmann::json doc = hodge_to_json(result);
        doc["n"] = o.n;
        out << doc.dump(2) << '\n';
    } else {
        out << render_hodge_table(result);
    }
    return exit_ok;
}

int cmd_chi_y(const Options& o, std::ostream& out, std::ostream& err)
{
    const HodgeNumbers h = load_hodge(o.input);
    const TruncSeries s = chi_y_series(h, o.max_n, SeriesForm::product);
    if (o.check) {
        const TruncSeries e = chi_y_series(h, o.max_n, SeriesForm::exponential);
        for (std::size_t n = 0; n <= o.max_n; ++n) {
            if (s[n] != e[n]) {
                err << "identity violation: product and exponential forms differ at n=" << n << ": " << s[n]
                    << " vs " << e[n] << '\n';
                return exit_identity_violation;
            }
        }
    }
    if (o.format == "json") {
        nlohmann::json doc = hodge_to_json(h);
        doc["series"] = series_json(s);
        if (o.check) {
            doc["check"] = "pass";
        }
        out << doc.dump(2) << '\n';
    } else {
        write_series(out, s);
        if (o.check) {
            out << "check: product and exponential forms agree\n";
        }
    }
    return exit_ok;
}

int cmd_signature(const Options& o, std::ostream& out, std::ostream& err)
{
    const GradedPairing phi = load_pairing(o.pairing);
    const auto closed = hz_coefficients(phi, o.max_n);
    const OracleConfig config{o.dim_bound};

    std::vector<std::optional<std::int64_t>> brute(closed.size());
    bool mismatch = false;
    if (o.brute) {
        for (std::size_t n = 0; n < closed.size(); ++n) {
            try {
                brute[n] = brute_signature(phi, n, config);
                mismatch = mismatch || *brute[n] != closed[n];
            } catch (const bound_exceeded&) {
                brute[n].reset();
            }
        }
    }

    auto status = [&](std::size_t n) -> std::string {
        if (!brute[n]) {
            return "skipped";
        }
        return *brute[n] == closed[n] ? "ok" : "mismatch";
    };

    if (o.format == "json") {
        nlohmann::json doc = pairing_to_json(phi);
        const PairingInvariants inv = pairing_invariants(phi);
        doc["sigma"] = inv.sigma;
        doc["chi"] = inv.chi;
        nlohmann::json series = nlohmann::json::array();
        for (auto c : closed) {
            series.push_back(std::to_string(c));
        }
        doc["series"] = series;
        if (o.brute) {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t n = 0; n < closed.size(); ++n) {
                rows.push_back({{"n", n},
                                {"closed", closed[n]},
                                {"brute", brute[n] ? nlohmann::json(*brute[n]) : nlohmann::json(nullptr)},
                                {"status", status(n)}});
            }
            doc["brute"] = rows;
        }
        out << doc.dump(2) << '\n';
    } else {
        for (std::size_t n = 0; n < closed.size(); ++n) {
            out << "n=" << n << ": ";
            if (o.brute) {
                out << "closed=" << closed[n] << " brute=" << (brute[n] ? std::to_string(*brute[n]) : "-") << ' '
                    << status(n) << '\n';
            } else {
                out << closed[n] << '\n';
            }
        }
    }
    if (mismatch) {
        err << "identity violation: brute-force signature differs from the closed form\n";
        return exit_identity_violation;
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(o.suite, o.max_n, o.seed, OracleConfig{o.dim_bound});
    } catch (const precondition_error& e) {
        throw input_error(e.what());
    }
    bool all_passed = true;
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : reports) {
            rows.push_back({{"identity", r.name},
                            {"cases", r.cases},
                            {"result", r.passed ? "pass" : "fail"},
                            {"counterexample", r.passed ? nlohmann::json(nullptr) : nlohmann::json(r.counterexample)}});
            all_passed = all_passed && r.passed;
        }
        nlohmann::json doc{{"suite", o.suite}, {"max_n", o.max_n}, {"seed", o.seed}, {"identities", rows}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << "identity=" << r.name << " cases=" << r.cases << " result=" << (r.passed ? "pass" : "fail")
                << " counterexample=" << (r.passed ? "none" : r.counterexample) << '\n';
            all_passed = all_passed && r.passed;
        }
    }
    return all_passed ? exit_ok : exit_identity_violation;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Generating series for symmetric products of Hodge data and graded pairings", "symprod"};
    app.require_subcommand(1);

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto* sym_series = app.add_subcommand("sym-series", "Symmetric-product Hodge series up to t^max-n");
    sym_series->add_option("--input", o.input, "Hodge-number document")->required();
    sym_series->add_option("--max-n", o.max_n, "Highest power of t");
    add_format(sym_series);

    auto* sym_hodge = app.add_subcommand("sym-hodge", "Hodge numbers of the n-th symmetric product");
    sym_hodge->add_option("--input", o.input, "Hodge-number document")->required();
    sym_hodge->add_option("-n", o.n, "Symmetric power")->required();
    add_format(sym_hodge);

    auto* chi = app.add_subcommand("chi-y", "chi_y generating series up to t^max-n");
    chi->add_option("--input", o.input, "Hodge-number document")->required();
    chi->add_option("--max-n", o.max_n, "Highest power of t");
    chi->add_flag("--check", o.check, "Compare the product and exponential forms");
    add_format(chi);

    auto* sig = app.add_subcommand("signature", "Signature series of symmetric powers of a graded pairing");
    sig->add_option("--pairing,--input", o.pairing, "Pairing document")->required();
    sig->add_option("--max-n", o.max_n, "Highest power of t");
    sig->add_flag("--brute", o.brute, "Also compute every signature from the induced Gram matrix");
    sig->add_option("--dim-bound", o.dim_bound, "Largest tensor power dimension for --brute");
    add_format(sig);

    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--suite", o.suite, "signs, kunneth, prop22, theorem2 or all");
    verify->add_option("--max-n", o.max_n, "Largest n in the sweeps")->default_val(3);
    verify->add_option("--seed", o.seed, "Seed for randomized cases");
    verify->add_option("--dim-bound", o.dim_bound, "Largest tensor power dimension");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input_error;
    }

    std::ostringstream buffer;
    try {
        int code = exit_ok;
        if (*sym_series) {
            code = cmd_sym_series(o, buffer);
        } else if (*sym_hodge) {
            code = cmd_sym_hodge(o, buffer);
        } else if (*chi) {
            code = cmd_chi_y(o, buffer, err);
        } else if (*sig) {
            code = cmd_signature(o, buffer, err);
        } else {
            code = cmd_verify(o, buffer);
        }
        if (code != exit_identity_violation || *verify || *sig) {
            out << buffer.str();
        }
        return code;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const identity_violation& e) {
        err << "identity violation: " << e.what() << '\n';
        return exit_identity_violation;
    } catch (const bound_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    }
}

} // namespace symprod::cli
