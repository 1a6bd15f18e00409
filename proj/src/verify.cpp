#include "syt/verify.hpp"

#include "syt/gamma.hpp"
#include "syt/sequences.hpp"
#include "syt/shapes.hpp"

#include <array>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

namespace syt {

namespace {

using std::to_string;

std::string upto(std::string_view var, int lo, int hi)
{
    return to_string(lo) + "<=" + std::string(var) + "<=" + to_string(hi);
}

// Folds a per-entry compare_methods report into a single check.
Check summarize(const VerificationReport &detail, std::string name, std::string range)
{
    Check check{std::move(name), std::move(range), detail.checks().size(), detail.overall(),
                std::nullopt};
    if (const Check *bad = detail.first_failure())
        check.counterexample = bad->name + ": " + bad->counterexample.value_or("failed");
    return check;
}

ColumnShape two_column(int n, int i)
{
    std::vector<int> columns;
    if (n - i > 0)
        columns.push_back(n - i);
    if (i > 0)
        columns.push_back(i);
    return ColumnShape(std::move(columns));
}

Count factorial(int n)
{
    Count f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

void add_gamma_checks(VerificationReport &report, int s, int max_n)
{
    const ShapeProfiles profiles(s, max_n);
    const std::string range = "s=" + to_string(s) + ", " + upto("n", 0, max_n);
    report.add(summarize(compare_methods(profiles), "recurrence table equals definition", range));
    report.add(summarize(compare_methods(profiles, 0),
                         "recurrence table equals definition, only row 0 seeded", range));
    report.add(check_substituted_recurrence(profiles));

    const auto definitional = build_definitional(profiles);
    CheckRecorder sums("row sums equal tau_s", range);
    const auto taus = tau_sequence(profiles, TauMethod::definition);
    for (int n = 0; n <= max_n; ++n)
        sums.expect(definitional.row_sum(n) == taus[static_cast<std::size_t>(n)], [&] {
            return "n=" + to_string(n);
        });
    report.add(std::move(sums).finish());
}

} // namespace

std::span<const std::string_view> suite_names()
{
    static constexpr std::array<std::string_view, 7> names{"alpha", "gamma3", "gammaS", "tau",
                                                           "ratio", "oracle", "all"};
    return names;
}

VerificationReport verify_alpha(int max_n)
{
    VerificationReport report("alpha");

    CheckRecorder initial("initial conditions", upto("n", 0, max_n));
    for (int n = 0; n <= max_n; ++n) {
        initial.expect(alpha(n, 0) == 1, [&] { return "alpha(" + to_string(n) + ",0) != 1"; });
        for (int i = n / 2 + 1; i <= n + 1; ++i)
            initial.expect(alpha(n, i) == 0, [&] {
                return "alpha(" + to_string(n) + "," + to_string(i) + ") != 0";
            });
    }
    for (int i = 1; i <= max_n; ++i)
        initial.expect(alpha(1, i) == 0, [&] { return "alpha(1," + to_string(i) + ") != 0"; });
    report.add(std::move(initial).finish());

    CheckRecorder pascal("alpha(n,i) = alpha(n-1,i) + alpha(n-1,i-1)", upto("n", 1, max_n));
    CheckRecorder columnwise("alpha(n,i) = sum_{h=2i-1}^{n-1} alpha(h,i-1)", upto("n", 1, max_n));
    CheckRecorder hook("alpha(n,i) = f(n-i,i)", upto("n", 0, max_n));
    for (int n = 0; n <= max_n; ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            auto where = [&] { return "n=" + to_string(n) + " i=" + to_string(i); };
            hook.expect(alpha(n, i) == syt_count_hlf(two_column(n, i)), where);
            if (n == 0 || i == 0)
                continue;
            pascal.expect(alpha(n, i) == alpha(n - 1, i) + alpha(n - 1, i - 1), where);
            Count sum = 0;
            for (int h = 2 * i - 1; h <= n - 1; ++h)
                sum += alpha(h, i - 1);
            columnwise.expect(alpha(n, i) == sum, where);
        }
    }
    report.add(std::move(pascal).finish());
    report.add(std::move(columnwise).finish());
    report.add(std::move(hook).finish());

    CheckRecorder cut("alpha(2n,n) = catalan(n)", upto("n", 0, max_n));
    CheckRecorder ballot("ballot(j,j) = 1 and ballot(n,0) = catalan(n)", upto("n", 0, max_n));
    for (int n = 0; n <= max_n; ++n) {
        cut.expect(alpha(2 * n, n) == catalan(n), [&] { return "n=" + to_string(n); });
        ballot.expect(ballot_entry(n, n) == 1 && ballot_entry(n, 0) == catalan(n),
                      [&] { return "n=" + to_string(n); });
    }
    report.add(std::move(cut).finish());
    report.add(std::move(ballot).finish());
    return report;
}

VerificationReport verify_gamma3(int max_n)
{
    VerificationReport report("gamma3");
    add_gamma_checks(report, 3, max_n);

    CheckRecorder motz("row sums equal motzkin(n)", upto("n", 0, max_n));
    const ShapeProfiles profiles(3, max_n);
    const auto m = motzkin_sequence(max_n);
    for (int n = 0; n <= max_n; ++n)
        motz.expect(profiles.row(n).total() == m[static_cast<std::size_t>(n)],
                    [&] { return "n=" + to_string(n); });
    report.add(std::move(motz).finish());

    CheckRecorder single("correction_r3(n,i) = correction_r(3,1,n-1,i-1)", upto("n", 1, max_n));
    CheckRecorder shape("r3_shape is the unique member of its family", upto("n", 1, max_n));
    for (int n = 1; n <= max_n; ++n) {
        for (int i = 1; i <= n / 2; ++i) {
            auto where = [&] { return "n=" + to_string(n) + " i=" + to_string(i); };
            single.expect(correction_r3(n, i) == correction_r(3, 1, n - 1, i - 1), where);
            const auto family = enumerate_family(
                {.cells = n - 1, .max_width = 3, .second_third_diff = i - 1, .equal_pair = 1});
            const auto r3 = r3_shape(n, i);
            shape.expect(r3 ? family.size() == 1 && family.front() == *r3 : family.empty(), where);
        }
    }
    report.add(std::move(single).finish());
    report.add(std::move(shape).finish());
    return report;
}

VerificationReport verify_gamma_general(int max_n)
{
    VerificationReport report("gammaS");
    for (int s : {4, 5})
        add_gamma_checks(report, s, max_n);
    return report;
}

VerificationReport verify_tau(int max_n)
{
    VerificationReport report("tau");

    CheckRecorder two("tau_2 definition = recurrence = closed form", upto("n", 0, max_n));
    const auto d2 = tau_sequence(2, max_n, TauMethod::definition);
    const auto r2 = tau_sequence(2, max_n, TauMethod::recurrence);
    const auto c2 = tau_sequence(2, max_n, TauMethod::closed);
    for (std::size_t n = 0; n < d2.size(); ++n)
        two.expect(d2[n] == r2[n] && r2[n] == c2[n], [&] { return "n=" + to_string(n); });
    report.add(std::move(two).finish());

    CheckRecorder step2("tau_2 recurrence terms", upto("n", 1, max_n));
    for (int n = 1; n <= max_n; ++n) {
        try {
            tau_recurrence_step(2, n);
            step2.expect(true, [] { return std::string(); });
        } catch (const RecurrenceViolation &e) {
            step2.fail(e.what());
        }
    }
    report.add(std::move(step2).finish());

    for (int s : {3, 4, 5}) {
        const ShapeProfiles profiles(s, max_n);
        const auto def = tau_sequence(profiles, TauMethod::definition);
        const auto rec = tau_sequence(profiles, TauMethod::recurrence);
        std::vector<Count> reference;
        if (s == 3)
            reference = motzkin_sequence(max_n);
        CheckRecorder agree(s == 3 ? "tau_3 definition = recurrence = motzkin"
                                   : "tau_" + to_string(s) + " definition = recurrence",
                            "s=" + to_string(s) + ", " + upto("n", 0, max_n));
        for (std::size_t n = 0; n < def.size(); ++n)
            agree.expect(def[n] == rec[n] && (reference.empty() || def[n] == reference[n]),
                         [&] { return "n=" + to_string(n); });
        report.add(std::move(agree).finish());

        CheckRecorder step("tau_" + to_string(s) + " recurrence terms",
                           "s=" + to_string(s) + ", " + upto("n", 1, max_n));
        for (int n = 1; n <= max_n; ++n) {
            try {
                tau_recurrence_step(profiles, n);
                step.expect(true, [] { return std::string(); });
            } catch (const RecurrenceViolation &e) {
                step.fail(e.what());
            }
        }
        report.add(std::move(step).finish());
    }
    return report;
}

VerificationReport verify_ratio(int max_n)
{
    VerificationReport report("ratio");

    CheckRecorder two("ratio(2,n) <= 2, equality exactly at even n", upto("n", 1, max_n));
    for (const auto &row : ratio_table(2, max_n))
        two.expect(row.n % 2 == 0 ? row.value == 2 : row.value < 2,
                   [&] { return "n=" + to_string(row.n) + " ratio=" + row.value.to_string(); });
    report.add(std::move(two).finish());

    for (int s : {3, 4, 5}) {
        const auto rows = ratio_table(s, max_n);
        const std::string range = "s=" + to_string(s) + ", " + upto("n", 1, max_n);
        CheckRecorder bound("ratio(s,n) < s", range);
        CheckRecorder approach("s - ratio(s,n) non-increasing", range);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            bound.expect(rows[k].value < s, [&] {
                return "n=" + to_string(rows[k].n) + " ratio=" + rows[k].value.to_string();
            });
            if (k > 0)
                approach.expect(rows[k].value >= rows[k - 1].value,
                                [&] { return "n=" + to_string(rows[k].n); });
        }
        report.add(std::move(bound).finish());
        report.add(std::move(approach).finish());
    }

    if (max_n >= 3) {
        const ShapeProfiles profiles(3, max_n);
        const auto taus = tau_sequence(profiles, TauMethod::definition);
        CheckRecorder parts("U1 + U2 + U3 = 3 - ratio(3,n)", upto("n", 3, max_n));
        for (int n = 3; n <= max_n; ++n) {
            const auto d = ratio_decomposition(profiles, n);
            const ExactRatio gap = ExactRatio(Count(3), Count(1)) -
                                   ExactRatio(taus[static_cast<std::size_t>(n)],
                                              taus[static_cast<std::size_t>(n - 1)]);
            parts.expect(d.sum() == gap, [&] {
                return "n=" + to_string(n) + " sum=" + d.sum().to_string() + " gap=" + gap.to_string();
            });
        }
        report.add(std::move(parts).finish());
    }
    return report;
}

VerificationReport verify_oracle(int max_n, int oracle_cap)
{
    VerificationReport report("oracle");
    const int enumerated = std::min(max_n, oracle_cap);

    CheckRecorder triple("hlf = recursive = |enumerate|", upto("cells", 0, enumerated));
    CheckRecorder standard("enumerated fillings are standard and distinct", upto("cells", 0, enumerated));
    RecursiveCounter counter;
    for (int n = 0; n <= enumerated; ++n) {
        for (const auto &shape : shapes_with_bounded_width(n, n)) {
            const auto tableaux = syt_enumerate(shape, oracle_cap);
            const Count hlf = syt_count_hlf(shape);
            const Count rec = counter.count(shape);
            triple.expect(hlf == rec && rec == tableaux.size(), [&] {
                return "shape " + format_shape(shape) + ": hlf=" + to_decimal(hlf) +
                       " recursive=" + to_decimal(rec) + " enumerated=" + to_string(tableaux.size());
            });
            std::set<std::vector<std::vector<int>>> distinct;
            bool ok = true;
            for (const auto &t : tableaux)
                ok = ok && t.is_standard() && distinct.insert(t.entries).second;
            standard.expect(ok, [&] { return "shape " + format_shape(shape); });
        }
    }
    report.add(std::move(triple).finish());
    report.add(std::move(standard).finish());

    CheckRecorder conj("f(shape) = f(conjugate(shape))", upto("cells", 0, max_n));
    CheckRecorder squares("sum f^2 = n!", upto("n", 0, max_n));
    CheckRecorder involutions("sum f = involution count", upto("n", 0, max_n));
    for (int n = 0; n <= max_n; ++n) {
        Count sum = 0, sum_sq = 0;
        for (const auto &shape : shapes_with_bounded_width(n, n)) {
            const Count f = syt_count_hlf(shape);
            conj.expect(f == syt_count_hlf(conjugate(shape)),
                        [&] { return "shape " + format_shape(shape); });
            sum += f;
            sum_sq += f * f;
        }
        squares.expect(sum_sq == factorial(n), [&] { return "n=" + to_string(n); });
        involutions.expect(sum == involution_count(n), [&] { return "n=" + to_string(n); });
    }
    report.add(std::move(conj).finish());
    report.add(std::move(squares).finish());
    report.add(std::move(involutions).finish());
    return report;
}

VerificationReport run_suite(std::string_view suite, const SuiteOptions &options)
{
    if (options.max_cells < 0)
        throw std::invalid_argument("--max-cells must be non-negative");
    const auto start = std::chrono::steady_clock::now();
    const int n = options.max_cells;
    VerificationReport report{std::string(suite)};
    if (suite == "alpha")
        report = verify_alpha(n);
    else if (suite == "gamma3")
        report = verify_gamma3(n);
    else if (suite == "gammaS")
        report = verify_gamma_general(n);
    else if (suite == "tau")
        report = verify_tau(n);
    else if (suite == "ratio")
        report = verify_ratio(n);
    else if (suite == "oracle")
        report = verify_oracle(n, options.oracle_cap);
    else if (suite == "all") {
        for (auto name : suite_names())
            if (name != "all")
                report.append(run_suite(name, options));
    } else
        throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
    report.set_elapsed(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace syt
