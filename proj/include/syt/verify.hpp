#pragma once

#include "syt/report.hpp"
#include "syt/tableau_count.hpp"

#include <span>
#include <string_view>

namespace syt {

struct SuiteOptions {
    int max_cells = 12;
    int oracle_cap = default_oracle_cap;
};

// alpha, gamma3, gammaS, tau, ratio, oracle, all
std::span<const std::string_view> suite_names();

// Runs one named suite with every range bounded by options.max_cells.
// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(std::string_view suite, const SuiteOptions &options);

VerificationReport verify_alpha(int max_n);
VerificationReport verify_gamma3(int max_n);
VerificationReport verify_gamma_general(int max_n);
VerificationReport verify_tau(int max_n);
VerificationReport verify_ratio(int max_n);
VerificationReport verify_oracle(int max_n, int oracle_cap);

} // namespace syt
