#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace congestion {

/// Outcome of one family of law checks.
struct LawCheck {
    std::string name;
    int samples = 0;
    int failures = 0;
    double worst = 0.0;  ///< worst normalised error (error / allowed error)

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

struct LawBatteryReport {
    std::vector<LawCheck> checks;
    [[nodiscard]] bool passed() const noexcept;
};

/// Randomised identity battery over (rho, gamma, beta, eps[, delta]):
///  - constraint residuals R1, R2, R3 <= 1e-12 (1 + |lhs|), exact laws;
///  - rho H' - H = p and rho Lambda' - Lambda = lambda by central differences
///    (relative 1e-5), exact and truncated branches;
///  - continuity of p, lambda, Lambda, H across rho = 1 - delta (relative 1e-12);
///  - 0 < nu <= 1 / (2 mu).
/// Deterministic for a given seed.
LawBatteryReport run_law_battery(int samples, std::uint64_t seed);

}  // namespace congestion
