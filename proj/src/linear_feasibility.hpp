#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace svcalc {

// A conjunction of exact linear constraints: rows of eq mean a.x = b,
// rows of gt mean a.x > b.
struct StrictSystem {
    std::size_t dim = 0;
    std::vector<std::pair<std::vector<Rational>, Rational>> eq;
    std::vector<std::pair<std::vector<Rational>, Rational>> gt;
};

// Exact feasibility with a certifying point: Gaussian elimination on the
// equations, then Fourier-Motzkin on the strict inequalities (combining two
// strict rows stays strict), then back-substitution picks interior values.
std::optional<std::vector<Rational>> solve_strict_system(const StrictSystem& sys);

} // namespace svcalc
