#include "syt/cli.hpp"

#include "syt/gamma.hpp"
#include "syt/sequences.hpp"
#include "syt/shapes.hpp"
#include "syt/tableau_count.hpp"
#include "syt/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace syt::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int columns = 0;
    std::optional<int> cells;
    int diff = 0;
    std::string method;
    std::string shape;
    std::optional<int> max_cells;
    std::string format = "csv";
    std::string out;
    bool decompose = false;
    std::string suite = "all";
    int oracle_cap = default_oracle_cap;
};

TauMethod tau_method(const std::string &name)
{
    if (name == "recurrence")
        return TauMethod::recurrence;
    if (name == "closed")
        return TauMethod::closed;
    return TauMethod::definition;
}

GammaMethod gamma_method(const std::string &name)
{
    return name == "recurrence" ? GammaMethod::recurrence : GammaMethod::definitional;
}

int require_cells_or_range(const Options &o, const char *command)
{
    if (o.cells && o.max_cells)
        throw UsageError(std::string(command) + " takes --cells or --max-cells, not both");
    if (!o.cells && !o.max_cells)
        throw UsageError(std::string(command) + " needs --cells or --max-cells");
    const int n = o.cells ? *o.cells : *o.max_cells;
    if (n < 0)
        throw UsageError("cell counts must be non-negative");
    return n;
}

int do_tau(const Options &o, std::ostream &out)
{
    const int n = require_cells_or_range(o, "tau");
    const auto method = tau_method(o.method);
    if (o.cells) {
        out << to_decimal(tau(o.columns, n, method)) << '\n';
        return exit_ok;
    }
    const auto values = tau_sequence(o.columns, n, method);
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["s"] = o.columns;
        doc["method"] = to_string(method);
        auto arr = nlohmann::ordered_json::array();
        for (const auto &v : values)
            arr.push_back(to_decimal(v));
        doc["values"] = std::move(arr);
        out << doc.dump() << '\n';
    } else {
        out << "n,value\n";
        for (std::size_t k = 0; k < values.size(); ++k)
            out << k << ',' << to_decimal(values[k]) << '\n';
    }
    return exit_ok;
}

int do_gamma(const Options &o, std::ostream &out)
{
    if (!o.cells)
        throw UsageError("gamma needs --cells");
    if (o.columns < 2)
        throw UsageError("gamma needs --columns >= 2");
    Count value;
    if (o.columns == 2)
        value = alpha(*o.cells, o.diff);
    else if (gamma_method(o.method) == GammaMethod::recurrence)
        value = gamma_rec(o.columns, *o.cells, o.diff);
    else
        value = gamma_def(o.columns, *o.cells, o.diff);
    out << to_decimal(value) << '\n';
    return exit_ok;
}

GammaTable two_column_table(int max_n, GammaMethod method)
{
    std::vector<std::vector<Count>> rows;
    for (int n = 0; n <= max_n; ++n) {
        if (method == GammaMethod::definitional) {
            rows.push_back(profile_row(2, n).gamma);
            continue;
        }
        std::vector<Count> row;
        for (int i = 0; i <= n / 2; ++i)
            row.push_back(alpha(n, i));
        rows.push_back(std::move(row));
    }
    return GammaTable(2, method, std::move(rows));
}

int do_table(const Options &o, std::ostream &out)
{
    if (!o.max_cells || *o.max_cells < 0)
        throw UsageError("table needs --max-cells >= 0");
    if (o.columns < 2)
        throw UsageError("table needs --columns >= 2");
    const auto method = gamma_method(o.method);
    const GammaTable table = [&] {
        if (o.columns == 2)
            return two_column_table(*o.max_cells, method);
        if (method == GammaMethod::recurrence)
            return build_recurrence(o.columns, *o.max_cells);
        return build_definitional(ShapeProfiles(o.columns, *o.max_cells));
    }();
    if (o.format == "json")
        out << table.to_json() << '\n';
    else
        out << table.to_csv();
    return exit_ok;
}

ColumnShape shape_arg(const Options &o)
{
    try {
        return parse_shape(o.shape);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--shape: ") + e.what());
    }
}

int do_hook(const Options &o, std::ostream &out)
{
    out << to_decimal(syt_count_hlf(shape_arg(o))) << '\n';
    return exit_ok;
}

int do_oracle(const Options &o, std::ostream &out)
{
    const ColumnShape shape = shape_arg(o);
    std::vector<StandardTableau> tableaux;
    try {
        tableaux = syt_enumerate(shape, o.oracle_cap);
    } catch (const OracleCapExceeded &e) {
        throw UsageError(std::string(e.what()) + " (raise it with --oracle-cap)");
    }
    const Count hlf = syt_count_hlf(shape);
    const Count recursive = syt_count_recursive(shape);
    const Count enumerated = tableaux.size();
    const bool agree = hlf == recursive && recursive == enumerated;
    if (o.format == "json") {
        nlohmann::ordered_json doc;
        doc["shape"] = format_shape(shape);
        doc["hlf"] = to_decimal(hlf);
        doc["recursive"] = to_decimal(recursive);
        doc["enumerated"] = to_decimal(enumerated);
        doc["agree"] = agree;
        out << doc.dump() << '\n';
    } else {
        out << "method,count\n"
            << "hlf," << to_decimal(hlf) << '\n'
            << "recursive," << to_decimal(recursive) << '\n'
            << "enumerated," << to_decimal(enumerated) << '\n';
    }
    return agree ? exit_ok : exit_verification_failed;
}

int do_ratio(const Options &o, std::ostream &out)
{
    const int n = require_cells_or_range(o, "ratio");
    const int first = o.cells ? n : (o.decompose ? 3 : 1);
    const bool json = o.format == "json";
    auto rows = nlohmann::ordered_json::array();

    if (o.decompose) {
        if (o.columns != 3)
            throw UsageError("--decompose is only defined for --columns 3");
        if (n < 3)
            throw UsageError("--decompose needs n >= 3");
        const ShapeProfiles profiles(3, n);
        const auto taus = tau_sequence(profiles, TauMethod::definition);
        if (!json)
            out << "n,u1,u2,u3,gap\n";
        for (int k = first; k <= n; ++k) {
            const auto d = ratio_decomposition(profiles, k);
            const ExactRatio gap = ExactRatio(Count(3), Count(1)) -
                                   ExactRatio(taus[static_cast<std::size_t>(k)],
                                              taus[static_cast<std::size_t>(k - 1)]);
            if (json)
                rows.push_back({{"n", k},
                                {"u1", d.u1.to_string()},
                                {"u2", d.u2.to_string()},
                                {"u3", d.u3.to_string()},
                                {"gap", gap.to_string()}});
            else
                out << k << ',' << d.u1.to_string() << ',' << d.u2.to_string() << ','
                    << d.u3.to_string() << ',' << gap.to_string() << '\n';
        }
    } else {
        if (n < 1)
            throw UsageError("ratio needs n >= 1");
        if (o.columns < 2)
            throw UsageError("ratio needs --columns >= 2");
        const auto table = ratio_table(o.columns, n);
        if (!json)
            out << "n,numerator,denominator,approx\n";
        for (const auto &row : table) {
            if (row.n < first)
                continue;
            if (json)
                rows.push_back({{"n", row.n},
                                {"numerator", to_decimal(row.value.numerator())},
                                {"denominator", to_decimal(row.value.denominator())},
                                {"approx", row.approx}});
            else
                out << row.n << ',' << to_decimal(row.value.numerator()) << ','
                    << to_decimal(row.value.denominator()) << ',' << row.approx << '\n';
        }
    }
    if (json) {
        nlohmann::ordered_json doc;
        doc["s"] = o.columns;
        doc["rows"] = std::move(rows);
        out << doc.dump() << '\n';
    }
    return exit_ok;
}

int do_verify(const Options &o, std::ostream &out)
{
    const auto report =
        run_suite(o.suite, {.max_cells = o.max_cells.value_or(12), .oracle_cap = o.oracle_cap});
    out << report.to_json() << '\n';
    return report.overall() ? exit_ok : exit_verification_failed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact counts of standard Young tableaux with a bounded number of columns",
                 "sytcount"};
    app.require_subcommand(1, 1);
    Options o;

    const auto formats = CLI::IsMember({"csv", "json"});
    auto *tau_cmd = app.add_subcommand("tau", "tau_s(n): tableaux with n cells, at most s columns");
    tau_cmd->add_option("--columns", o.columns, "width bound s")->required();
    tau_cmd->add_option("--cells", o.cells, "single n");
    tau_cmd->add_option("--max-cells", o.max_cells, "sequence for n = 0..N");
    tau_cmd->add_option("--method", o.method, "definition | recurrence | closed")
        ->default_val("definition")
        ->check(CLI::IsMember({"definition", "recurrence", "closed"}));
    tau_cmd->add_option("--format", o.format)->check(formats);

    const auto gamma_methods = CLI::IsMember({"definition", "definitional", "recurrence"});
    auto *gamma_cmd = app.add_subcommand("gamma", "one entry gamma^(s)_{n,i} (alpha_{n,i} for s = 2)");
    gamma_cmd->add_option("--columns", o.columns, "width bound s")->required();
    gamma_cmd->add_option("--cells", o.cells, "n")->required();
    gamma_cmd->add_option("--diff", o.diff, "i = c2 - c3")->required();
    gamma_cmd->add_option("--method", o.method)->default_val("definition")->check(gamma_methods);

    auto *table_cmd = app.add_subcommand("table", "rows 0..N of Gamma^(s) (matrix A for s = 2)");
    table_cmd->add_option("--columns", o.columns, "width bound s")->required();
    table_cmd->add_option("--max-cells", o.max_cells, "last row N")->required();
    table_cmd->add_option("--method", o.method)->default_val("definition")->check(gamma_methods);
    table_cmd->add_option("--format", o.format)->check(formats);

    auto *hook_cmd = app.add_subcommand("hook", "f(shape) by the Hook Length Formula");
    hook_cmd->add_option("--shape", o.shape, "column lengths, e.g. 4,2,1")->required();

    auto *oracle_cmd = app.add_subcommand("oracle", "f(shape) three ways: hooks, recursion, enumeration");
    oracle_cmd->add_option("--shape", o.shape, "column lengths, e.g. 4,2,1")->required();
    oracle_cmd->add_option("--oracle-cap", o.oracle_cap, "largest shape to enumerate");
    oracle_cmd->add_option("--format", o.format)->check(formats);

    auto *ratio_cmd = app.add_subcommand("ratio", "tau_s(n) / tau_s(n-1) as exact fractions");
    ratio_cmd->add_option("--columns", o.columns, "width bound s")->required();
    ratio_cmd->add_option("--cells", o.cells, "single n");
    ratio_cmd->add_option("--max-cells", o.max_cells, "table for n = 1..N");
    ratio_cmd->add_flag("--decompose", o.decompose, "split 3 - ratio into U1 + U2 + U3 (s = 3)");
    ratio_cmd->add_option("--format", o.format)->check(formats);

    auto *verify_cmd = app.add_subcommand("verify", "run an identity suite, JSON report");
    verify_cmd->add_option("--suite", o.suite)
        ->default_val("all")
        ->check(CLI::IsMember({"alpha", "gamma3", "gammaS", "tau", "ratio", "oracle", "all"}));
    verify_cmd->add_option("--max-cells", o.max_cells, "range bound (default 12)");
    verify_cmd->add_option("--oracle-cap", o.oracle_cap, "largest shape to enumerate");

    for (auto *cmd : app.get_subcommands({}))
        cmd->add_option("--out", o.out, "write output to FILE instead of stdout");

    auto usage = [&](const std::string &message) {
        err << "error: " << message << '\n';
        const auto parsed = app.get_subcommands();
        err << (parsed.empty() ? app.help() : parsed.front()->help());
        return exit_usage;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        return usage(e.what());
    }

    std::ostringstream buffer;
    int status = exit_ok;
    try {
        if (*tau_cmd)
            status = do_tau(o, buffer);
        else if (*gamma_cmd)
            status = do_gamma(o, buffer);
        else if (*table_cmd)
            status = do_table(o, buffer);
        else if (*hook_cmd)
            status = do_hook(o, buffer);
        else if (*oracle_cmd)
            status = do_oracle(o, buffer);
        else if (*ratio_cmd)
            status = do_ratio(o, buffer);
        else if (*verify_cmd)
            status = do_verify(o, buffer);
    } catch (const std::invalid_argument &e) {
        return usage(e.what());
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.out << " for writing\n";
            return exit_usage;
        }
        file << buffer.str();
    }
    return status;
}

} // namespace syt::cli
