#include "syt/gamma.hpp"

#include "syt/shapes.hpp"
#include "syt/tableau_count.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace syt {

namespace {

int padded(std::span<const int> columns, int j)
{
    return j >= 1 && static_cast<std::size_t>(j) <= columns.size()
               ? columns[static_cast<std::size_t>(j - 1)]
               : 0;
}

Count at_or_zero(std::span<const Count> row, int i)
{
    if (i < 0 || static_cast<std::size_t>(i) >= row.size())
        return 0;
    return row[static_cast<std::size_t>(i)];
}

void require(bool ok, const char *what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

class AlphaMemo {
public:
    Count get(int n, int i)
    {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= static_cast<std::size_t>(n)) {
            const auto &prev = rows_.back();
            const int m = static_cast<int>(rows_.size());
            std::vector<Count> row(static_cast<std::size_t>(m / 2 + 1));
            row[0] = 1;
            for (int k = 1; k <= m / 2; ++k)
                row[static_cast<std::size_t>(k)] = at_or_zero(prev, k) + at_or_zero(prev, k - 1);
            rows_.push_back(std::move(row));
        }
        return at_or_zero(rows_[static_cast<std::size_t>(n)], i);
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Count>> rows_{{Count(1)}};
};

} // namespace

NegativeIntermediateError::NegativeIntermediateError(int s, int n, int i)
    : std::runtime_error("recurrence went negative at s=" + std::to_string(s) +
                         ", n=" + std::to_string(n) + ", i=" + std::to_string(i)),
      s(s), n(n), i(i)
{
}

Count alpha(int n, int i)
{
    if (n < 0 || i < 0 || i > n / 2)
        return 0;
    static AlphaMemo memo;
    return memo.get(n, i);
}

Count ballot_entry(int j, int k)
{
    if (2 * j - k < 0 || j - k < 0)
        throw std::invalid_argument("ballot index (" + std::to_string(j) + ", " +
                                    std::to_string(k) + ") needs 2j-k >= 0 and j-k >= 0");
    return alpha(2 * j - k, j - k);
}

Count gamma_def(int s, int n, int i)
{
    require(s >= 1 && n >= 0, "gamma_def needs s >= 1 and n >= 0");
    if (i < 0)
        return 0;
    Count total = 0;
    for (const auto &shape : enumerate_family(
             {.cells = n, .max_width = s, .second_third_diff = i, .equal_pair = std::nullopt}))
        total += syt_count_hlf(shape);
    return total;
}

Count correction_r(int s, int j, int n, int i)
{
    require(s >= 1 && j >= 1 && n >= 0, "correction_r needs s >= 1, j >= 1, n >= 0");
    if (i < 0)
        return 0;
    Count total = 0;
    for (const auto &shape : enumerate_family(
             {.cells = n, .max_width = s, .second_third_diff = i, .equal_pair = j}))
        total += syt_count_hlf(shape);
    return total;
}

Count correction_r3(int n, int i)
{
    if (auto shape = r3_shape(n, i))
        return syt_count_hlf(*shape);
    return 0;
}

Count RowProfile::entry(int i) const { return at_or_zero(gamma, i); }

Count RowProfile::correction(int j, int i) const
{
    if (j < 1 || static_cast<std::size_t>(j) > corrections.size())
        return 0;
    return at_or_zero(corrections[static_cast<std::size_t>(j - 1)], i);
}

Count RowProfile::total() const
{
    Count sum = 0;
    for (const auto &g : gamma)
        sum += g;
    return sum;
}

RowProfile profile_row(int s, int n)
{
    require(s >= 1 && n >= 0, "profile_row needs s >= 1 and n >= 0");
    const auto width = static_cast<std::size_t>(n / 2 + 1);
    RowProfile row{s, n, std::vector<Count>(width),
                   std::vector<std::vector<Count>>(static_cast<std::size_t>(s - 1),
                                                   std::vector<Count>(width))};
    for_each_bounded_partition(n, s, [&](std::span<const int> columns) {
        const Count f = detail::hlf_columns(columns);
        const auto i = static_cast<std::size_t>(padded(columns, 2) - padded(columns, 3));
        row.gamma[i] += f;
        for (int j = 1; j < s; ++j)
            if (padded(columns, j) == padded(columns, j + 1))
                row.corrections[static_cast<std::size_t>(j - 1)][i] += f;
    });
    return row;
}

ShapeProfiles::ShapeProfiles(int s, int max_n, unsigned threads) : s_(s)
{
    require(s >= 1 && max_n >= 0, "ShapeProfiles needs s >= 1 and max_n >= 0");
    rows_.resize(static_cast<std::size_t>(max_n + 1));
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(max_n + 1));

    // Largest rows first so the long tail does not land on one worker.
    std::atomic<int> next{max_n};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (int n; (n = next.fetch_sub(1)) >= 0;) {
            try {
                rows_[static_cast<std::size_t>(n)] = profile_row(s, n);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
}

const RowProfile &ShapeProfiles::row(int n) const
{
    if (n < 0 || n > max_cells())
        throw std::out_of_range("profile row " + std::to_string(n) + " not computed (max " +
                                std::to_string(max_cells()) + ")");
    return rows_[static_cast<std::size_t>(n)];
}

std::string_view to_string(GammaMethod m)
{
    return m == GammaMethod::definitional ? "definitional" : "recurrence";
}

GammaTable::GammaTable(int s, GammaMethod method, std::vector<std::vector<Count>> rows)
    : s_(s), method_(method), rows_(std::move(rows))
{
}

Count GammaTable::entry(int n, int i) const
{
    if (n < 0 || n > max_cells())
        return 0;
    return at_or_zero(rows_[static_cast<std::size_t>(n)], i);
}

Count GammaTable::row_sum(int n) const
{
    Count sum = 0;
    if (n >= 0 && n <= max_cells())
        for (const auto &v : rows_[static_cast<std::size_t>(n)])
            sum += v;
    return sum;
}

std::string GammaTable::to_csv() const
{
    std::ostringstream out;
    out << "n,i,value\n";
    for (std::size_t n = 0; n < rows_.size(); ++n)
        for (std::size_t i = 0; i < rows_[n].size(); ++i)
            out << n << ',' << i << ',' << to_decimal(rows_[n][i]) << '\n';
    return out.str();
}

std::string GammaTable::to_json(int indent) const
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : rows_) {
        auto r = nlohmann::ordered_json::array();
        for (const auto &v : row)
            r.push_back(to_decimal(v));
        rows.push_back(std::move(r));
    }
    nlohmann::ordered_json doc;
    doc["s"] = s_;
    doc["method"] = to_string(method_);
    doc["rows"] = std::move(rows);
    return doc.dump(indent);
}

GammaTable build_definitional(const ShapeProfiles &profiles)
{
    std::vector<std::vector<Count>> rows;
    rows.reserve(static_cast<std::size_t>(profiles.max_cells() + 1));
    for (int n = 0; n <= profiles.max_cells(); ++n)
        rows.push_back(profiles.row(n).gamma);
    return GammaTable(profiles.width_bound(), GammaMethod::definitional, std::move(rows));
}

int default_seed_rows(int s) { return std::max(3, s - 1); }

std::vector<Count> correction_row(const RowProfile &previous)
{
    const int n = previous.n + 1;
    std::vector<Count> out(static_cast<std::size_t>(n / 2 + 1));
    for (int i = 0; i <= n / 2; ++i) {
        Count c = 0;
        if (i >= 1)
            c += previous.correction(1, i - 1);
        for (int j = 3; j <= previous.s - 1; ++j)
            c += previous.correction(j, i);
        out[static_cast<std::size_t>(i)] = std::move(c);
    }
    return out;
}

std::vector<Count> correction_row_r3(int n)
{
    std::vector<Count> out(static_cast<std::size_t>(n / 2 + 1));
    for (int i = 1; i <= n / 2; ++i)
        out[static_cast<std::size_t>(i)] = correction_r3(n, i);
    return out;
}

std::vector<Count> recurrence_row(int s, int n, std::span<const Count> previous,
                                  std::span<const Count> corrections)
{
    require(s >= 3 && n >= 1, "recurrence_row needs s >= 3 and n >= 1");
    std::vector<Count> row(static_cast<std::size_t>(n / 2 + 1));
    for (int i = 0; i <= n / 2; ++i) {
        Count value = at_or_zero(previous, i - 1) + (s - 2) * at_or_zero(previous, i) +
                      at_or_zero(previous, i + 1);
        const Count correction = at_or_zero(corrections, i);
        if (correction > value)
            throw NegativeIntermediateError(s, n, i);
        value -= correction;
        row[static_cast<std::size_t>(i)] = std::move(value);
    }
    return row;
}

namespace {

GammaTable recurrence_table(int s, int max_n, int seed, const ShapeProfiles &profiles)
{
    require(s >= 3, "the row recurrence needs s >= 3");
    require(seed >= 0, "at least row 0 must be seeded");
    seed = std::min(seed, max_n);
    std::vector<std::vector<Count>> rows;
    rows.reserve(static_cast<std::size_t>(max_n + 1));
    for (int n = 0; n <= seed; ++n)
        rows.push_back(profiles.row(n).gamma);
    for (int n = seed + 1; n <= max_n; ++n) {
        const auto corrections =
            s == 3 ? correction_row_r3(n) : correction_row(profiles.row(n - 1));
        rows.push_back(recurrence_row(s, n, rows.back(), corrections));
    }
    return GammaTable(s, GammaMethod::recurrence, std::move(rows));
}

} // namespace

GammaTable build_recurrence(const ShapeProfiles &profiles, std::optional<int> seed_through)
{
    const int s = profiles.width_bound();
    return recurrence_table(s, profiles.max_cells(), seed_through.value_or(default_seed_rows(s)),
                            profiles);
}

GammaTable build_recurrence(int s, int max_n, std::optional<int> seed_through)
{
    require(s >= 3 && max_n >= 0, "build_recurrence needs s >= 3 and max_n >= 0");
    const int seed = std::min(seed_through.value_or(default_seed_rows(s)), max_n);
    const int needed = s == 3 ? seed : std::max(seed, max_n - 1);
    const ShapeProfiles profiles(s, std::max(needed, 0));
    return recurrence_table(s, max_n, seed, profiles);
}

Count gamma_rec(int s, int n, int i)
{
    require(n >= 0, "gamma_rec needs n >= 0");
    return build_recurrence(s, n).entry(n, i);
}

VerificationReport compare_methods(int s, int max_n)
{
    require(s >= 3 && max_n >= 0, "compare_methods needs s >= 3 and max_n >= 0");
    return compare_methods(ShapeProfiles(s, max_n));
}

VerificationReport compare_methods(const ShapeProfiles &profiles, std::optional<int> seed_through)
{
    const int s = profiles.width_bound();
    VerificationReport report("compare_methods(s=" + std::to_string(s) +
                              ", max_n=" + std::to_string(profiles.max_cells()) + ")");
    const auto definitional = build_definitional(profiles);
    std::optional<GammaTable> recurrence;
    try {
        recurrence = build_recurrence(profiles, seed_through);
    } catch (const NegativeIntermediateError &e) {
        report.add({"recurrence evaluation", "s=" + std::to_string(s), 1, false, e.what()});
        return report;
    }
    for (int n = 0; n <= profiles.max_cells(); ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            const Count def = definitional.entry(n, i);
            const Count rec = recurrence->entry(n, i);
            Check check{"gamma(n=" + std::to_string(n) + ",i=" + std::to_string(i) + ")",
                        "s=" + std::to_string(s), 1, def == rec, std::nullopt};
            if (!check.passed)
                check.counterexample = "definition=" + to_decimal(def) +
                                       " recurrence=" + to_decimal(rec) +
                                       " discrepancy=" + to_decimal(Count(rec - def));
            report.add(std::move(check));
        }
    }
    return report;
}

Check check_substituted_recurrence(const ShapeProfiles &profiles)
{
    const int s = profiles.width_bound();
    CheckRecorder rec("row recurrence on definitional rows",
                      "s=" + std::to_string(s) + ", 1<=n<=" + std::to_string(profiles.max_cells()));
    for (int n = 1; n <= profiles.max_cells(); ++n) {
        const auto &previous = profiles.row(n - 1);
        const auto corrections = s == 3 ? correction_row_r3(n) : correction_row(previous);
        std::vector<Count> row;
        try {
            row = recurrence_row(s, n, previous.gamma, corrections);
        } catch (const NegativeIntermediateError &e) {
            rec.fail(e.what());
            continue;
        }
        const auto &expected = profiles.row(n).gamma;
        for (std::size_t i = 0; i < expected.size(); ++i)
            rec.expect(row[i] == expected[i], [&] {
                return "n=" + std::to_string(n) + " i=" + std::to_string(i) + ": recurrence " +
                       to_decimal(row[i]) + " vs definition " + to_decimal(expected[i]);
            });
    }
    return std::move(rec).finish();
}

} // namespace syt
