#include "cli.hpp"

#include "hodge/engine.hpp"
#include "hodge/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace hodge::cli {
namespace {

using nlohmann::json;

std::vector<int> parse_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) {
            if (text.find_first_not_of(" ,") == std::string::npos) break;
            throw InvalidInput(std::string(flag) + ": empty entry in '" + text + "'");
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw InvalidInput(std::string(flag) + ": '" + item + "' is not an integer");
        out.push_back(value);
    }
    return out;
}

json key_json(int g, int k, const std::vector<int>& psi) { return {{"g", g}, {"lambda", k}, {"psi", psi}}; }

struct Options {
    std::string format = "text";
    std::optional<std::string> cache;
};

Engine make_engine(const Options& opts) {
    EngineOptions eo = EngineOptions::from_environment();
    if (opts.cache) eo.cache_path = *opts.cache;
    return Engine(eo);
}

int cmd_compute(const Options& opts, int g, int k, const std::string& psi_text, std::ostream& out) {
    std::vector<int> psi = parse_list(psi_text, "--psi");
    Engine engine = make_engine(opts);
    const Rational value = engine.compute(g, k, psi);
    std::sort(psi.rbegin(), psi.rend());
    if (opts.format == "json") {
        json j = key_json(g, k, psi);
        j["value"] = value.to_string();
        out << j.dump() << '\n';
    } else {
        out << value << '\n';
    }
    return kOk;
}

int cmd_table(const Options& opts, int dims, const std::optional<std::string>& out_path, std::ostream& out) {
    if (dims < 1) throw InvalidInput("--dims must be at least 1");
    Engine engine = make_engine(opts);
    if (opts.format == "json") {
        json rows = json::array();
        for (const auto& key : engine.fill_table(dims)) {
            json j = key_json(key.genus(), key.lambda_index(), key.psi().entries());
            j["value"] = engine.table().at(key).to_string();
            rows.push_back(std::move(j));
        }
        if (out_path) {
            std::ofstream file(*out_path);
            file << rows.dump(2) << '\n';
            if (!file) throw CacheError("cannot write " + *out_path);
        } else {
            out << rows.dump(2) << '\n';
        }
        return kOk;
    }
    if (out_path) {
        engine.write_table(dims, *out_path);
    } else {
        for (const auto& key : engine.fill_table(dims))
            out << HodgeTable::format_record(key, engine.table().at(key)) << '\n';
    }
    return kOk;
}

std::string term(const Rational& c, const std::string& name, bool first) {
    std::string s;
    if (c.sign() < 0)
        s = first ? "-" : " - ";
    else if (!first)
        s = " + ";
    const Rational a = c.abs();
    if (name.empty()) return s + a.to_string();
    if (a != Rational(1)) s += a.to_string() + "*";
    return s + "I(" + name + ")";
}

int cmd_relation(const Options& opts, int g, const std::string& e_text, int d, std::ostream& out) {
    const ExponentTuple e(parse_list(e_text, "--e"));
    Engine engine = make_engine(opts);
    const RelationRow row = engine.relation(g, e, d);
    const UnknownGroup group = build_group(g, e);
    if (opts.format == "json") {
        json unknowns = json::array();
        json coeffs = json::array();
        for (std::size_t i = 0; i < group.unknowns.size(); ++i) {
            unknowns.push_back(group.unknowns[i].to_string());
            coeffs.push_back(row.coefficients[i].to_string());
        }
        out << json{{"g", g}, {"e", e.entries()}, {"d", d}, {"unknowns", unknowns}, {"coefficients", coeffs},
                    {"constant", row.constant.to_string()}}
                   .dump()
            << '\n';
        return kOk;
    }
    std::string line;
    for (std::size_t i = 0; i < group.unknowns.size(); ++i) {
        if (row.coefficients[i].is_zero()) continue;
        line += term(row.coefficients[i], group.unknowns[i].to_string(), line.empty());
    }
    if (!row.constant.is_zero() || line.empty()) line += term(row.constant, "", line.empty());
    out << line << " = 0\n";
    return kOk;
}

int cmd_verify(const Options& opts, const VerifyScope& scope, std::ostream& out) {
    Engine engine = make_engine(opts);
    const VerifyReport report = verify(engine, scope);
    if (opts.format == "json") {
        json entries = json::array();
        for (const auto& e : report.entries)
            entries.push_back({{"source", e.source}, {"subject", e.subject}, {"expected", e.expected.to_string()},
                               {"actual", e.actual.to_string()}, {"match", e.matched()}});
        out << json{{"matched", report.matched()}, {"total", report.total()}, {"entries", entries}}.dump(2) << '\n';
    } else {
        for (const auto& e : report.entries) {
            out << (e.matched() ? "ok       " : "MISMATCH ") << e.source << ' ' << e.subject << " = "
                << e.actual;
            if (!e.matched()) out << " (expected " << e.expected << ")";
            out << '\n';
        }
        out << report.matched() << '/' << report.total() << " matched\n";
    }
    return report.ok() ? kOk : kMismatch;
}

std::string one_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    return text;
}

int fail(std::ostream& err, const char* tag, const std::string& message, int code) {
    err << "error[" << tag << "]: " << one_line(message) << '\n';
    return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Hodge integrals with at most one lambda class", "hodge"};
    app.require_subcommand(1);
    Options opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache", opts.cache, "Cache file (overrides $HODGE_CACHE)");
    };

    int g = 0, k = 0, d = 0, dims = 0;
    std::string psi, e_text;
    std::optional<std::string> out_path;

    auto* compute = app.add_subcommand("compute", "Evaluate one integral");
    compute->add_option("--g", g, "Genus")->required();
    compute->add_option("--lambda", k, "Lambda index")->capture_default_str();
    compute->add_option("--psi", psi, "Comma-separated psi exponents")->required();
    add_common(compute);

    auto* table = app.add_subcommand("table", "Compute every integral up to a dimension");
    table->add_option("--dims", dims, "Maximal dimension")->required();
    table->add_option("--out", out_path, "Output file (default stdout)");
    add_common(table);

    auto* relation = app.add_subcommand("relation", "Print one relation row");
    relation->add_option("--g", g, "Genus")->required();
    relation->add_option("--e", e_text, "Comma-separated exponents of the constrained points")->required();
    relation->add_option("--d", d, "Degree")->required();
    add_common(relation);

    VerifyScope scope;
    int verify_dims = 0;
    auto* verify_cmd = app.add_subcommand("verify", "Compare against published values and closed formulas");
    verify_cmd->add_option("--dims", verify_dims, "Check every integral up to this dimension");
    verify_cmd->add_flag("--genus0", scope.genus0, "Genus 0 multinomial formula");
    verify_cmd->add_option("--max-n", scope.max_n, "Largest number of points")->capture_default_str();
    verify_cmd->add_flag("--lambda-g", scope.lambda_g, "lambda_g formula");
    verify_cmd->add_option("--lambda-g-dims", scope.lambda_g_max_dim, "Dimension cap for --lambda-g")
        ->capture_default_str();
    verify_cmd->add_flag("--lambda-gm1", scope.lambda_gm1, "lambda_{g-1} one-point formula");
    verify_cmd->add_option("--max-g", scope.max_g, "Largest genus")->capture_default_str();
    verify_cmd->add_flag("--hurwitz", scope.hurwitz, "Hurwitz weights against the character formula");
    verify_cmd->add_option("--max-d", scope.max_d, "Largest degree for --hurwitz")->capture_default_str();
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail(err, "bad-input", e.what(), kBadInput);
    }

    try {
        if (compute->parsed()) return cmd_compute(opts, g, k, psi, out);
        if (table->parsed()) return cmd_table(opts, dims, out_path, out);
        if (relation->parsed()) return cmd_relation(opts, g, e_text, d, out);
        if (verify_dims != 0) scope.max_dim = verify_dims;
        if (!scope.max_dim && !scope.genus0 && !scope.lambda_g && !scope.lambda_gm1 && !scope.hurwitz)
            scope.max_dim = 4;
        if (scope.max_dim && *scope.max_dim < 1) throw InvalidInput("--dims must be at least 1");
        return cmd_verify(opts, scope, out);
    } catch (const InvalidInput& e) {
        return fail(err, "bad-input", e.what(), kBadInput);
    } catch (const EscalationError& e) {
        return fail(err, "escalation", e.what(), kSolverFailure);
    } catch (const InconsistentSystem& e) {
        return fail(err, "inconsistent", std::string(e.what()) + " (d=" + std::to_string(e.degree()) + ")",
                    kSolverFailure);
    } catch (const RankDeficient& e) {
        return fail(err, "rank-deficient", e.what(), kSolverFailure);
    } catch (const CacheError& e) {
        return fail(err, "io", e.what(), kIoError);
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(err, "io", e.what(), kIoError);
    } catch (const std::exception& e) {
        return fail(err, "internal", e.what(), kInternalError);
    }
}

}  // namespace hodge::cli
