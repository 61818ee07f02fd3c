#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wsqaoa {

struct TheoryCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoryOptions {
    std::uint64_t seed = 1;
    /// Monte Carlo samples per angle for the p=0 bound.
    int p0_samples = 100'000;
    /// Restart bundles per cycle for the solver check.
    int cycle_bundles = 10;
};

/// Closed-form and Monte Carlo checks of the warm-start results: the |+-> and
/// two-edge traps, the p=1 antipodal landscape, the p=0 half-weight value,
/// component additivity, the p=0 rotation bounds and even-cycle recovery.
std::vector<TheoryCheck> run_theory_battery(const TheoryOptions &opts = {});

}  // namespace wsqaoa
