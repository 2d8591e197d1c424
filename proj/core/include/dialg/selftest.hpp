#pragma once

#include <string>

namespace dialg {

struct SelftestReport {
    bool ok = true;
    int passed = 0;
    int total = 0;
    std::string text; // one "PASS name: detail" or "FAIL name: detail" line per check
};

/// The invariant suite on the bundled models with fixed seeds: tree
/// identities, δ² = 0, the cocycle properties of leading coefficients and
/// obstructions, extension, equivalence and trivialization checks, and the
/// frozen cohomology values. The report text is byte-identical across runs.
SelftestReport run_selftest();

} // namespace dialg
