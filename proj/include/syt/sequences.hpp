#pragma once

#include "syt/count.hpp"
#include "syt/gamma.hpp"

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syt {

// Reference sequences. None of these goes through tableau counting.
Count catalan(int n);          // C_{n+1} = C_n * 2(2n+1) / (n+2)
Count motzkin(int n);          // (n+2) M_n = (2n+1) M_{n-1} + 3(n-1) M_{n-2}
Count central_binomial(int n); // binomial(n, n/2) as a running product
Count involution_count(int n); // I(n) = I(n-1) + (n-1) I(n-2)

std::vector<Count> motzkin_sequence(int max_n);

// Exact rational in lowest terms with a positive denominator.
class ExactRatio {
public:
    ExactRatio() = default;
    ExactRatio(const Count &numerator, const Count &denominator);
    explicit ExactRatio(const mpq_class &q);

    Count numerator() const { return q_.get_num(); }
    Count denominator() const { return q_.get_den(); }
    const mpq_class &value() const { return q_; }

    // "p/q", or "p" when the denominator is 1.
    std::string to_string() const;
    // Fixed notation rounded half-up to `significant` digits; never
    // scientific. Presentation only.
    std::string to_decimal(int significant = 12) const;
    double to_double() const { return q_.get_d(); }

    friend ExactRatio operator+(const ExactRatio &a, const ExactRatio &b);
    friend ExactRatio operator-(const ExactRatio &a, const ExactRatio &b);
    friend bool operator==(const ExactRatio &a, const ExactRatio &b);
    friend std::strong_ordering operator<=>(const ExactRatio &a, const ExactRatio &b);
    friend bool operator==(const ExactRatio &a, long b);
    friend std::strong_ordering operator<=>(const ExactRatio &a, long b);

private:
    mpq_class q_{0};
};

enum class TauMethod { definition, recurrence, closed };

std::string_view to_string(TauMethod m);

// tau_s(n): tableaux with n cells and at most s columns.
//   definition  row sum of matrix A (s = 2) or of the definitional Gamma^(s)
//   recurrence  iterated tau recurrence from definitional seeds
//   closed      binomial(n, n/2) for s = 2, M_n for s = 3
// Throws std::invalid_argument for `closed` with s >= 4, s < 2 or n < 0.
Count tau(int s, int n, TauMethod method);

// tau_s(0..max_n). For s >= 3 the definition and recurrence routes reuse
// the given profiles (which must reach max_n).
std::vector<Count> tau_sequence(int s, int max_n, TauMethod method);
std::vector<Count> tau_sequence(const ShapeProfiles &profiles, TauMethod method);

// tau_s(n) = main - parity_term - gamma0_term - correction_total with
//   main = s tau_s(n-1), parity_term = E(n-1) C_{(n-1)/2},
//   gamma0_term = gamma_{n-1,0}, correction_total = every correction
//   subtracted while forming row n (both the i = 0 and i >= 1 formulas).
// For s = 2 the last two terms are 0.
struct TauRecurrenceTerms {
    int n = 0;
    int s = 0;
    Count main;
    Count parity_term;
    Count gamma0_term;
    Count correction_total;
    Count tau; // definitional tau_s(n) the terms were checked against

    Count value() const { return main - parity_term - gamma0_term - correction_total; }
};

class RecurrenceViolation : public std::runtime_error {
public:
    explicit RecurrenceViolation(TauRecurrenceTerms terms);
    TauRecurrenceTerms terms;
};

// Computes the four terms from definitional data and throws
// RecurrenceViolation unless they reproduce tau_s(n). Requires n >= 1 for
// s = 2 and n >= s otherwise (std::invalid_argument).
TauRecurrenceTerms tau_recurrence_step(int s, int n);
// Same for s >= 3, without the n >= s restriction, reading profiles.
TauRecurrenceTerms tau_recurrence_step(const ShapeProfiles &profiles, int n);

// tau_s(n) / tau_s(n-1) via the definition.
ExactRatio ratio(int s, int n);

struct RatioDecomposition {
    int n = 0;
    ExactRatio u1; // E(n-1) C_{(n-1)/2} / tau_3(n-1)
    ExactRatio u2; // beta_{n-1,0} / tau_3(n-1)
    ExactRatio u3; // R(n) / tau_3(n-1)

    ExactRatio sum() const { return u1 + u2 + u3; }
};

// 3 - tau_3(n)/tau_3(n-1) split into its three sources; n >= 3.
RatioDecomposition ratio_decomposition(int n);
RatioDecomposition ratio_decomposition(const ShapeProfiles &profiles3, int n);

struct RatioRow {
    int n = 0;
    ExactRatio value;
    std::string approx;
};

// Rows for n = 1..max_n of consecutive ratios of `taus`.
std::vector<RatioRow> ratio_rows(std::span<const Count> taus, int digits = 12);
std::vector<RatioRow> ratio_table(int s, int max_n, int digits = 12);

} // namespace syt
