#include "theta_cli.hpp"

#include "theta/report_json.hpp"
#include "theta/theta.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace theta::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_residual(double r)
{
    if (std::isnan(r))
        return "";
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << r;
    return os.str();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

std::string plain(const ordered_json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

/// One record: text prints "key: value" lines, csv a header and one row.
void emit_record(const ordered_json& rec, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << rec.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::string header, row;
        bool first = true;
        for (const auto& [k, v] : rec.items()) {
            header += (first ? "" : ",") + csv_field(k);
            row += (first ? "" : ",") + csv_field(plain(v));
            first = false;
        }
        out << header << "\n" << row << "\n";
        return;
    }
    for (const auto& [k, v] : rec.items())
        out << k << ": " << plain(v) << "\n";
}

/// A table: json prints the object, csv and text one row per entry of `rows_key`.
void emit_table(const ordered_json& doc, const std::string& rows_key, const std::string& format,
                std::ostream& out)
{
    if (format == "json") {
        out << doc.dump(2) << "\n";
        return;
    }
    const ordered_json& rows = doc.at(rows_key);
    if (format == "text") {
        for (const auto& [k, v] : doc.items())
            if (k != rows_key)
                out << k << ": " << plain(v) << "\n";
    }
    bool header = format == "csv";
    for (const ordered_json& row : rows) {
        if (header) {
            std::string line;
            for (const auto& [k, v] : row.items())
                line += (line.empty() ? "" : ",") + csv_field(k);
            out << line << "\n";
            header = false;
        }
        std::string line;
        bool first = true;
        for (const auto& [k, v] : row.items()) {
            const std::string cell = format == "csv" ? csv_field(plain(v)) : plain(v);
            line += (first ? "" : (format == "csv" ? "," : "  ")) + cell;
            first = false;
        }
        out << line << "\n";
    }
}

Mat2 matrix_arg(const std::string& text)
{
    try {
        return parse_matrix(text);
    } catch (const theta::invalid_argument& e) {
        throw UsageError(std::string("--matrix: ") + e.what());
    }
}

Mat2 member_arg(const std::string& text, int level)
{
    const Mat2 m = matrix_arg(text);
    if (!is_member(m, level))
        throw UsageError("--matrix: (" + m.to_string() + ") is not in the level-"
                         + std::to_string(level) + " group");
    return m;
}

std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t value)
{
    if (flag->count() > 0)
        return value;
    if (const char* env = std::getenv("THETA_KERNEL_SEED")) {
        try {
            std::size_t used = 0;
            const std::string s(env);
            const unsigned long long v = std::stoull(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("THETA_KERNEL_SEED: not an unsigned integer: '") + env
                             + "'");
        }
    }
    return SuiteConfig{}.seed;
}

struct Options {
    std::string matrix;
    int level = 0;
    long long k = 0;
    int samples = SuiteConfig{}.samples;
    int oracle_samples = SuiteConfig{}.oracle_samples;
    std::uint64_t seed = 0;
    double tol = OracleConfig{}.compare_tol;
    int box = SuiteConfig{}.box;
    unsigned threads = 0;
    std::string format = "text";
    std::string suite = "all";
    bool check = false;
    std::vector<std::string> cusps;
};

void add_level(CLI::App* sub, Options& o)
{
    sub->add_option("--level", o.level, "Group level")->required()->check(CLI::IsMember({3, 4}));
}

void add_format(CLI::App* sub, Options& o)
{
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
}

int do_membership(const Options& o, std::ostream& out)
{
    const Mat2 m = matrix_arg(o.matrix);
    const bool member = is_member(m, o.level);
    if (o.format == "text") {
        out << (member ? "true" : "false") << "\n";
        return exit_ok;
    }
    emit_record({{"matrix", m.to_string()}, {"level", o.level}, {"member", member}}, o.format,
                out);
    return exit_ok;
}

int do_multiplier(const Options& o, std::ostream& out)
{
    const Mat2 m = member_arg(o.matrix, o.level);
    const Root24 v = nu(m, o.level);
    ordered_json rec{{"matrix", m.to_string()},
                     {"level", o.level},
                     {"branch", to_string(branch_of(m, o.level))},
                     {o.level == 3 ? "f" : "g", branch_value(m, o.level).str()},
                     {"nu", v.fraction()},
                     {"value", v.pretty()}};
    int code = exit_ok;
    if (o.check) {
        OracleConfig cfg;
        cfg.compare_tol = o.tol;
        cfg.validate();
        const OracleCheck c = check_transformation(m, o.level, cfg);
        rec["oracle_verdict"] = to_string(c.status);
        rec["oracle_residual"] = detail::number_or_null(c.residual);
        if (c.status == OracleStatus::fail)
            code = exit_failure;
    }
    emit_record(rec, o.format, out);
    return code;
}

int do_kernel(const Options& o, std::ostream& out)
{
    const PowerClass pc = PowerClass::make(o.k, o.level);
    if (!o.matrix.empty()) {
        const Mat2 m = member_arg(o.matrix, o.level);
        const bool by_value = in_kernel_by_value(m, pc);
        const bool by_congruence = in_kernel_by_congruence(m, pc);
        emit_record({{"matrix", m.to_string()},
                     {"level", o.level},
                     {"k", o.k},
                     {"class", pc.label()},
                     {"power_value", power_value(m, pc).fraction()},
                     {"in_kernel", by_value},
                     {"by_congruence", by_congruence}},
                    o.format, out);
        return by_value == by_congruence ? exit_ok : exit_failure;
    }
    ordered_json reps = ordered_json::array();
    for (const Mat2& r : kernel_coset_reps(pc))
        reps.push_back({{"rep", r.to_string()}, {"value", power_value(r, pc).fraction()}});
    emit_table({{"level", o.level},
                {"k", o.k},
                {"class", pc.label()},
                {"image_size", pc.image_size()},
                {"coset_reps", reps}},
               "coset_reps", o.format, out);
    return exit_ok;
}

int do_cosets(const Options& o, std::ostream& out)
{
    const auto& reps = coset_reps(o.level);
    if (!o.matrix.empty()) {
        const Mat2 m = matrix_arg(o.matrix);
        const std::size_t i = coset_rep_of(m, o.level);
        emit_record({{"matrix", m.to_string()},
                     {"level", o.level},
                     {"rep_index", i},
                     {"rep", reps[i].to_string()}},
                    o.format, out);
        return exit_ok;
    }
    const IndexReport ix = index_report(o.level);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < reps.size(); ++i)
        rows.push_back({{"index", i}, {"rep", reps[i].to_string()}});
    emit_table({{"level", o.level},
                {"index", ix.index},
                {"sl2_order", ix.group_order},
                {"image_order", ix.image_order},
                {"reps", rows}},
               "reps", o.format, out);
    return exit_ok;
}

CuspPoint cusp_arg(const std::string& text)
{
    try {
        return CuspPoint::parse(text);
    } catch (const theta::invalid_argument& e) {
        throw UsageError(std::string("cusp: ") + e.what());
    }
}

int do_cusp(const Options& o, std::ostream& out)
{
    if (o.cusps.size() == 2) {
        const CuspPoint x = cusp_arg(o.cusps[0]);
        const CuspPoint y = cusp_arg(o.cusps[1]);
        emit_record({{"level", o.level},
                     {"x", x.to_string()},
                     {"y", y.to_string()},
                     {"equivalent", cusp_equivalent(x, y, o.level)}},
                    o.format, out);
        return exit_ok;
    }
    if (!o.cusps.empty())
        throw UsageError("cusp: give two cusps to compare, or none to list classes");
    const auto classes = cusp_classes(o.level);
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string members;
        for (const CuspPoint& p : classes[i])
            members += (members.empty() ? "" : " ") + p.to_string();
        rows.push_back({{"class", i}, {"leader", classes[i].front().to_string()},
                        {"members", members}});
    }
    emit_table({{"level", o.level}, {"class_count", classes.size()}, {"classes", rows}}, "classes",
               o.format, out);
    return exit_ok;
}

int do_verify(const Options& o, const CLI::Option* seed_flag, std::ostream& out)
{
    SuiteConfig cfg;
    cfg.seed = resolve_seed(seed_flag, o.seed);
    cfg.samples = o.samples;
    cfg.oracle_samples = o.oracle_samples;
    cfg.box = o.box;
    cfg.threads = o.threads;
    cfg.oracle.seed = cfg.seed;
    cfg.oracle.compare_tol = o.tol;
    try {
        cfg.oracle.validate();
    } catch (const theta::invalid_argument& e) {
        throw UsageError(std::string("--tol: ") + e.what());
    }
    const std::vector<SuiteReport> reports = run_suites(o.suite, cfg);
    bool all = true;
    for (const SuiteReport& r : reports)
        all = all && r.passed();

    if (o.format == "json") {
        ordered_json doc{{"seed", cfg.seed},
                         {"samples", cfg.samples},
                         {"oracle_samples", cfg.oracle_samples},
                         {"box", cfg.box},
                         {"tol", cfg.oracle.compare_tol},
                         {"verdict", all ? "PASS" : "FAIL"}};
        ordered_json suites = ordered_json::array();
        for (const SuiteReport& r : reports)
            suites.push_back(ordered_json(to_json(r)));
        doc["suites"] = suites;
        out << doc.dump(2) << "\n";
    } else if (o.format == "csv") {
        out << "suite,case,verdict,residual\n";
        for (const SuiteReport& r : reports)
            for (const CheckRow& row : r.rows)
                out << csv_field(row.suite) << "," << csv_field(row.name) << ","
                    << (row.passed ? "PASS" : "FAIL") << "," << format_residual(row.residual)
                    << "\n";
    } else {
        for (const SuiteReport& r : reports) {
            for (const CheckRow& row : r.rows) {
                out << (row.passed ? "PASS" : "FAIL") << "  " << row.suite << " / " << row.name;
                if (!std::isnan(row.residual))
                    out << "  residual=" << format_residual(row.residual);
                out << "  " << row.detail << "\n";
            }
        }
        for (const SuiteReport& r : reports)
            out << (r.passed() ? "PASS " : "FAIL ") << r.suite << "\n";
        out << (all ? "PASS" : "FAIL") << " overall (seed " << cfg.seed << ")\n";
    }
    return all ? exit_ok : exit_failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multipliers of eta quotients on Gamma_{theta,3} and Gamma_{theta,4}", "theta"};
    app.require_subcommand(1, 1);
    Options o;

    auto* membership = app.add_subcommand("membership", "Test membership in Gamma_{theta,N}");
    membership->add_option("--matrix", o.matrix, "Matrix a,b,c,d")->required();
    add_level(membership, o);
    add_format(membership, o);

    auto* multiplier = app.add_subcommand("multiplier", "Evaluate nu_F or nu_G");
    multiplier->add_option("--matrix", o.matrix, "Matrix a,b,c,d")->required();
    add_level(multiplier, o);
    multiplier->add_flag("--check", o.check, "Also compare with the numerical oracle");
    multiplier->add_option("--tol", o.tol, "Oracle comparison tolerance");
    add_format(multiplier, o);

    auto* kernel = app.add_subcommand("kernel", "Kernel of nu^k: membership or coset data");
    add_level(kernel, o);
    kernel->add_option("--k", o.k, "Exponent k")->required();
    kernel->add_option("--matrix", o.matrix, "Matrix a,b,c,d");
    add_format(kernel, o);

    auto* cosets = app.add_subcommand("cosets", "Coset representatives, or the coset of a matrix");
    add_level(cosets, o);
    cosets->add_option("--matrix", o.matrix, "Matrix a,b,c,d");
    add_format(cosets, o);

    auto* cusp = app.add_subcommand("cusp", "Cusp classes, or equivalence of two cusps");
    add_level(cusp, o);
    cusp->add_option("cusps", o.cusps, "Two cusps, 'inf' or 'p/q'");
    add_format(cusp, o);

    auto* verify = app.add_subcommand("verify", "Run property suites");
    std::vector<std::string> suites{"all"};
    suites.insert(suites.end(), suite_names().begin(), suite_names().end());
    verify->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember(suites));
    verify->add_option("--samples", o.samples, "Samples for the exact suites")
        ->check(CLI::Range(1, 10000000));
    verify->add_option("--oracle-samples", o.oracle_samples, "Samples per oracle check")
        ->check(CLI::Range(1, 1000000));
    auto* seed_flag = verify->add_option("--seed", o.seed, "Random seed");
    verify->add_option("--tol", o.tol, "Oracle comparison tolerance");
    verify->add_option("--box", o.box, "Entry bound for the residue-lemma scan")
        ->check(CLI::Range(1, max_lemma_box));
    verify->add_option("--threads", o.threads, "Worker threads for the lemma scan");
    add_format(verify, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (membership->parsed())
            return do_membership(o, out);
        if (multiplier->parsed())
            return do_multiplier(o, out);
        if (kernel->parsed())
            return do_kernel(o, out);
        if (cosets->parsed())
            return do_cosets(o, out);
        if (cusp->parsed())
            return do_cusp(o, out);
        return do_verify(o, seed_flag, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const theta::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace theta::cli
