#include "syt/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace syt {

namespace {

void require(bool ok, const char *what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

Count pow10(unsigned long k)
{
    Count p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

Count sum_of(std::span<const Count> values)
{
    Count total = 0;
    for (const auto &v : values)
        total += v;
    return total;
}

Count tau2_definition(int n)
{
    Count total = 0;
    for (int i = 0; i <= n / 2; ++i)
        total += alpha(n, i);
    return total;
}

Count parity_term(int n)
{
    return parity_indicator(n - 1) == 1 ? catalan((n - 1) / 2) : Count(0);
}

// Requires profiles through row max(s-1, max_n-1) for s >= 4, and through
// row s-1 for s = 3.
std::vector<Count> tau_by_recurrence(int s, int max_n, const ShapeProfiles &profiles)
{
    std::vector<Count> taus;
    const int seeds = std::min(s - 1, max_n);
    for (int n = 0; n <= seeds; ++n)
        taus.push_back(profiles.row(n).total());
    if (max_n <= seeds)
        return taus;

    // gamma_{n-1,0} comes from the recurrence table, never the definition.
    const GammaTable gammas = [&] {
        if (s == 3)
            return build_recurrence(3, max_n - 1);
        return build_recurrence(profiles);
    }();
    for (int n = seeds + 1; n <= max_n; ++n) {
        const auto corrections =
            s == 3 ? correction_row_r3(n) : correction_row(profiles.row(n - 1));
        Count value = s * taus.back() - parity_term(n) - gammas.entry(n - 1, 0) -
                      sum_of(corrections);
        taus.push_back(std::move(value));
    }
    return taus;
}

} // namespace

Count catalan(int n)
{
    require(n >= 0, "catalan needs n >= 0");
    Count c = 1;
    for (int k = 0; k < n; ++k) {
        c *= 2 * (2 * k + 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 2));
    }
    return c;
}

std::vector<Count> motzkin_sequence(int max_n)
{
    require(max_n >= 0, "motzkin needs n >= 0");
    std::vector<Count> m{1, 1};
    for (int n = 2; n <= max_n; ++n) {
        Count next = (2 * n + 1) * m[static_cast<std::size_t>(n - 1)] +
                     3 * (n - 1) * m[static_cast<std::size_t>(n - 2)];
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(n + 2));
        m.push_back(std::move(next));
    }
    m.resize(static_cast<std::size_t>(max_n + 1));
    return m;
}

Count motzkin(int n) { return motzkin_sequence(n).back(); }

Count central_binomial(int n)
{
    require(n >= 0, "central_binomial needs n >= 0");
    const int m = n / 2;
    Count b = 1;
    for (int k = 1; k <= m; ++k) {
        b *= n - m + k;
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return b;
}

Count involution_count(int n)
{
    require(n >= 0, "involution_count needs n >= 0");
    Count prev = 1, cur = 1;
    for (int k = 2; k <= n; ++k) {
        Count next = cur + (k - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ExactRatio::ExactRatio(const Count &numerator, const Count &denominator)
{
    if (denominator == 0)
        throw std::domain_error("ratio with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

ExactRatio::ExactRatio(const mpq_class &q) : q_(q) { q_.canonicalize(); }

std::string ExactRatio::to_string() const
{
    if (q_.get_den() == 1)
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string ExactRatio::to_decimal(int significant) const
{
    if (significant < 1)
        throw std::invalid_argument("need at least one significant digit");
    if (q_ == 0)
        return "0";
    const bool negative = q_ < 0;
    const Count a = abs(q_.get_num());
    const Count b = q_.get_den();

    // e = floor(log10(a / b))
    long e = 0;
    if (a >= b) {
        e = static_cast<long>(Count(a / b).get_str().size()) - 1;
    } else {
        while (a * pow10(static_cast<unsigned long>(-e)) < b)
            --e;
    }

    long scale = significant - 1 - e;
    auto rounded_at = [&](long k) {
        Count num = a, den = b;
        if (k >= 0)
            num *= pow10(static_cast<unsigned long>(k));
        else
            den *= pow10(static_cast<unsigned long>(-k));
        return Count((2 * num + den) / (2 * den));
    };
    Count digits = rounded_at(scale);
    if (digits >= pow10(static_cast<unsigned long>(significant)))
        digits = rounded_at(--scale);

    std::string text = digits.get_str();
    if (scale > 0) {
        if (text.size() <= static_cast<std::size_t>(scale))
            text.insert(0, static_cast<std::size_t>(scale) + 1 - text.size(), '0');
        text.insert(text.size() - static_cast<std::size_t>(scale), ".");
    } else {
        text.append(static_cast<std::size_t>(-scale), '0');
    }
    return negative ? "-" + text : text;
}

ExactRatio operator+(const ExactRatio &a, const ExactRatio &b)
{
    return ExactRatio(mpq_class(a.q_ + b.q_));
}

ExactRatio operator-(const ExactRatio &a, const ExactRatio &b)
{
    return ExactRatio(mpq_class(a.q_ - b.q_));
}

bool operator==(const ExactRatio &a, const ExactRatio &b) { return a.q_ == b.q_; }

std::strong_ordering operator<=>(const ExactRatio &a, const ExactRatio &b)
{
    return cmp(a.q_, b.q_) <=> 0;
}

bool operator==(const ExactRatio &a, long b) { return a.q_ == b; }

std::strong_ordering operator<=>(const ExactRatio &a, long b) { return cmp(a.q_, b) <=> 0; }

std::string_view to_string(TauMethod m)
{
    switch (m) {
    case TauMethod::definition:
        return "definition";
    case TauMethod::recurrence:
        return "recurrence";
    case TauMethod::closed:
        return "closed";
    }
    return "?";
}

std::vector<Count> tau_sequence(const ShapeProfiles &profiles, TauMethod method)
{
    const int s = profiles.width_bound();
    const int max_n = profiles.max_cells();
    switch (method) {
    case TauMethod::definition: {
        std::vector<Count> taus;
        for (int n = 0; n <= max_n; ++n)
            taus.push_back(profiles.row(n).total());
        return taus;
    }
    case TauMethod::recurrence:
        require(s >= 3, "profile-based recurrence needs s >= 3");
        return tau_by_recurrence(s, max_n, profiles);
    case TauMethod::closed:
        return tau_sequence(s, max_n, TauMethod::closed);
    }
    return {};
}

std::vector<Count> tau_sequence(int s, int max_n, TauMethod method)
{
    require(s >= 2, "tau needs s >= 2");
    require(max_n >= 0, "tau needs n >= 0");
    std::vector<Count> taus;
    switch (method) {
    case TauMethod::closed:
        require(s <= 3, "closed form is only known for s = 2 (central binomial) and s = 3 (Motzkin)");
        if (s == 3)
            return motzkin_sequence(max_n);
        for (int n = 0; n <= max_n; ++n)
            taus.push_back(central_binomial(n));
        return taus;
    case TauMethod::definition:
        if (s == 2) {
            for (int n = 0; n <= max_n; ++n)
                taus.push_back(tau2_definition(n));
            return taus;
        }
        return tau_sequence(ShapeProfiles(s, max_n), method);
    case TauMethod::recurrence:
        if (s == 2) {
            taus.push_back(1);
            for (int n = 1; n <= max_n; ++n)
                taus.push_back(2 * taus.back() - parity_term(n));
            return taus;
        }
        {
            const int needed = s == 3 ? s - 1 : std::max(s - 1, max_n - 1);
            return tau_by_recurrence(s, max_n, ShapeProfiles(s, std::max(needed, 0)));
        }
    }
    return taus;
}

Count tau(int s, int n, TauMethod method)
{
    require(s >= 2, "tau needs s >= 2");
    require(n >= 0, "tau needs n >= 0");
    if (method == TauMethod::definition)
        return s == 2 ? tau2_definition(n) : profile_row(s, n).total();
    return tau_sequence(s, n, method).back();
}

RecurrenceViolation::RecurrenceViolation(TauRecurrenceTerms t)
    : std::runtime_error("tau recurrence violated at s=" + std::to_string(t.s) +
                         ", n=" + std::to_string(t.n) + ": " + to_decimal(t.main) + " - " +
                         to_decimal(t.parity_term) + " - " + to_decimal(t.gamma0_term) + " - " +
                         to_decimal(t.correction_total) + " != " + to_decimal(t.tau)),
      terms(std::move(t))
{
}

TauRecurrenceTerms tau_recurrence_step(const ShapeProfiles &profiles, int n)
{
    const int s = profiles.width_bound();
    require(s >= 3, "profile-based tau step needs s >= 3");
    require(n >= 1 && n <= profiles.max_cells(), "tau step row outside the profiles");
    const auto &previous = profiles.row(n - 1);
    const auto corrections = s == 3 ? correction_row_r3(n) : correction_row(previous);
    TauRecurrenceTerms terms{n,
                             s,
                             s * previous.total(),
                             parity_term(n),
                             previous.entry(0),
                             sum_of(corrections),
                             profiles.row(n).total()};
    if (terms.value() != terms.tau)
        throw RecurrenceViolation(terms);
    return terms;
}

TauRecurrenceTerms tau_recurrence_step(int s, int n)
{
    require(s >= 2, "tau step needs s >= 2");
    if (s == 2) {
        require(n >= 1, "tau step for s = 2 needs n >= 1");
        TauRecurrenceTerms terms{n, 2, 2 * tau2_definition(n - 1), parity_term(n), 0, 0,
                                 tau2_definition(n)};
        if (terms.value() != terms.tau)
            throw RecurrenceViolation(terms);
        return terms;
    }
    require(n >= s, "tau step needs n >= s");
    return tau_recurrence_step(ShapeProfiles(s, n), n);
}

ExactRatio ratio(int s, int n)
{
    require(n >= 1, "ratio needs n >= 1");
    const auto taus = tau_sequence(s, n, TauMethod::definition);
    return ExactRatio(taus[static_cast<std::size_t>(n)], taus[static_cast<std::size_t>(n - 1)]);
}

RatioDecomposition ratio_decomposition(const ShapeProfiles &profiles3, int n)
{
    require(profiles3.width_bound() == 3, "ratio decomposition is for s = 3");
    require(n >= 3, "ratio decomposition needs n >= 3");
    const auto terms = tau_recurrence_step(profiles3, n);
    const Count denominator = profiles3.row(n - 1).total();
    return {n, ExactRatio(terms.parity_term, denominator), ExactRatio(terms.gamma0_term, denominator),
            ExactRatio(terms.correction_total, denominator)};
}

RatioDecomposition ratio_decomposition(int n)
{
    require(n >= 3, "ratio decomposition needs n >= 3");
    return ratio_decomposition(ShapeProfiles(3, n), n);
}

std::vector<RatioRow> ratio_rows(std::span<const Count> taus, int digits)
{
    std::vector<RatioRow> rows;
    for (std::size_t n = 1; n < taus.size(); ++n) {
        ExactRatio r(taus[n], taus[n - 1]);
        auto approx = r.to_decimal(digits);
        rows.push_back({static_cast<int>(n), std::move(r), std::move(approx)});
    }
    return rows;
}

std::vector<RatioRow> ratio_table(int s, int max_n, int digits)
{
    const auto taus = tau_sequence(s, max_n, TauMethod::definition);
    return ratio_rows(taus, digits);
}

} // namespace syt
