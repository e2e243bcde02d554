#pragma once

#include "sign_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace svcalc {

// A would-be parallel-vector certificate taken apart. The pair (U, -V) is
// offered as a witness for U + (-V) being a parallel vector; the demonstration
// finds the members of the elimination set I(U, -V) inside the system, which
// disqualify the pair. Whether the sum is a parallel vector anyway (through
// other pairs) is reported separately.
struct FlawDemoData {
    SignVector n1, n2;     // distinct parallel vectors sharing a support
    SignVector u, uprime;  // first qualifying decomposition n1 = u + (-u')
    SignVector v;          // (-n2) o u, a member by the stabilizer property
    SignVector sum;        // u + (-v), the vector the pair would certify
    std::vector<SignVector> witnesses; // members of I(u, -v) inside the system
    bool sum_in_parallel;  // does the sum sit in the parallel vectors regardless
};

struct FlawDemoResult {
    std::optional<FlawDemoData> data;
    std::string skip_reason; // set instead of data when no pair qualifies
};

// Searches the parallel vectors for the first distinct equal-support pair and
// runs the demonstration on it. Throws input_error when the system is not an
// affine oriented matroid; throws internal_error if any step the construction
// guarantees (membership of v, a qualifying decomposition, a nonempty witness
// set) fails to materialize.
FlawDemoResult run_flaw_demo(const SignSystem& w);

// Same demonstration on a caller-chosen pair; both vectors must be parallel
// vectors of the system, distinct, with equal supports.
FlawDemoResult run_flaw_demo(const SignSystem& w, const SignVector& n1, const SignVector& n2);

} // namespace svcalc
