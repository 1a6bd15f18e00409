#pragma once

#include "syt/count.hpp"
#include "syt/report.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

// A recurrence subtraction went below zero: the correction terms being
// subtracted are not the ones the recurrence needs.
class NegativeIntermediateError : public std::runtime_error {
public:
    NegativeIntermediateError(int s, int n, int i);
    int s, n, i;
};

// alpha_{n,i}: tableaux of column shape (n-i, i). Built row by row with
// alpha_{n,i} = alpha_{n-1,i} + alpha_{n-1,i-1}; zero for i > n/2.
// Thread-safe, memoized process-wide.
Count alpha(int n, int i);

// Aigner's ballot matrix, re-indexed: ballot(j, k) = alpha(2j-k, j-k).
// Throws std::invalid_argument if 2j-k < 0 or j-k < 0.
Count ballot_entry(int j, int k);

// Sum of f over shapes with n cells, at most s columns and c2 - c3 = i.
Count gamma_def(int s, int n, int i);

// Same family restricted to shapes with c_j == c_{j+1} (zero padded).
Count correction_r(int s, int j, int n, int i);

// Tableaux of the single three-column shape returned by r3_shape(n, i),
// or 0 when there is none.
Count correction_r3(int n, int i);

// Definitional data for one row n of Gamma^(s): the entries and every
// correction family r_j(n, i), 1 <= j <= s-1, from one pass over the
// partitions of n into at most s columns.
struct RowProfile {
    int s = 0;
    int n = 0;
    std::vector<Count> gamma;                    // [i], i <= n/2
    std::vector<std::vector<Count>> corrections; // [j-1][i]

    Count entry(int i) const;
    Count correction(int j, int i) const; // 0 outside the stored range
    Count total() const;
};

RowProfile profile_row(int s, int n);

// Rows 0..max_n of definitional data for width bound s. Rows are computed
// in parallel (threads == 0 picks the hardware concurrency); the result is
// immutable and identical for any thread count.
class ShapeProfiles {
public:
    ShapeProfiles(int s, int max_n, unsigned threads = 0);

    int width_bound() const { return s_; }
    int max_cells() const { return static_cast<int>(rows_.size()) - 1; }
    const RowProfile &row(int n) const;

private:
    int s_;
    std::vector<RowProfile> rows_;
};

enum class GammaMethod { definitional, recurrence };

std::string_view to_string(GammaMethod m);

// Triangular table of gamma^(s)_{n,i}, 0 <= n <= max_cells, 0 <= i <= n/2.
class GammaTable {
public:
    GammaTable(int s, GammaMethod method, std::vector<std::vector<Count>> rows);

    int width_bound() const { return s_; }
    GammaMethod method() const { return method_; }
    int max_cells() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<std::vector<Count>> &rows() const { return rows_; }

    // 0 for i < 0, i > n/2 or n past the table.
    Count entry(int n, int i) const;
    Count row_sum(int n) const;

    // CSV "n,i,value" and {"s", "method", "rows"}; decimal strings.
    std::string to_csv() const;
    std::string to_json(int indent = -1) const;

private:
    int s_;
    GammaMethod method_;
    std::vector<std::vector<Count>> rows_;
};

GammaTable build_definitional(const ShapeProfiles &profiles);

// Rows 0..max(3, s-1) are taken from the definition unless overridden.
int default_seed_rows(int s);

// Corrections subtracted from each entry of row n, s >= 4:
// r_1(n-1, i-1) (for i >= 1) + sum_{j=3}^{s-1} r_j(n-1, i), read from the
// definitional profile of row n-1.
std::vector<Count> correction_row(const RowProfile &previous);

// s = 3 corrections for row n: correction_r3(n, i) for i >= 1, 0 at i = 0.
std::vector<Count> correction_row_r3(int n);

// Row n of the three-term recurrence from row n-1:
//   g(n,0) = (s-2) g(n-1,0) + g(n-1,1) - corr[0]
//   g(n,i) = g(n-1,i-1) + (s-2) g(n-1,i) + g(n-1,i+1) - corr[i]
// Out-of-range previous entries read as 0. Throws
// NegativeIntermediateError if a subtraction would go negative.
std::vector<Count> recurrence_row(int s, int n, std::span<const Count> previous,
                                  std::span<const Count> corrections);

// Recurrence table for s >= 3. Rows 0..seed_through come from the
// definition; s >= 4 reads its corrections from `profiles`, s = 3 uses
// correction_row_r3 and ignores profile corrections.
GammaTable build_recurrence(const ShapeProfiles &profiles,
                            std::optional<int> seed_through = std::nullopt);
// Convenience: for s = 3 this never enumerates more than the seed rows.
GammaTable build_recurrence(int s, int max_n,
                            std::optional<int> seed_through = std::nullopt);

Count gamma_rec(int s, int n, int i);

// Entrywise definitional vs recurrence, one Check per (n, i).
VerificationReport compare_methods(int s, int max_n);
VerificationReport compare_methods(const ShapeProfiles &profiles,
                                   std::optional<int> seed_through = std::nullopt);

// Feeds definitional row n-1 into recurrence_row and compares with the
// definitional row n, for 1 <= n <= max. Tests the recurrence itself rather
// than its propagation.
Check check_substituted_recurrence(const ShapeProfiles &profiles);

} // namespace syt
