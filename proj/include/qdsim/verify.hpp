#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qdsim/channels.hpp"

namespace qdsim {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
};

using GateFactory = std::function<DilationGates(double)>;

// POVM completeness, probability normalization, weak limits.
std::vector<CheckResult> verify_povm();

// Kraus trace preservation, lambda<->x mapping, coherence scaling,
// composition, weak-measurement equivalence.
std::vector<CheckResult> verify_channel();

// Unitarity, Kraus reconstruction, and circuit-vs-Kraus equivalence on
// random states. The gate factory is injectable so a corrupted gate set can
// be shown to fail.
std::vector<CheckResult> verify_dilation(const GateFactory& gates = dilation_gates);

// Route equivalence, ordering, monotonicity and limit checks for the three
// quantifiers.
std::vector<CheckResult> verify_discord();

std::vector<CheckResult> verify_all();

bool all_passed(const std::vector<CheckResult>& results);
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace qdsim
