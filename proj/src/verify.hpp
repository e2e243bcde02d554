#pragma once

#include "geometry.hpp"
#include "sign_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace svcalc {

// One system under test. Geometric sources are kept when known; systems cut
// out of a bigger covector set remember it together with the fixed
// coordinate, so reconstruction checks can compare against the original.
struct Instance {
    std::string name;
    std::string origin; // central-cells, affine-cells, restriction, fixture, mutant, file
    SignSystem system;
    std::optional<Arrangement> arrangement;
    std::optional<SignSystem> source_covectors;
    std::string source_label;
};

struct CorpusSpec {
    std::uint64_t base_seed = 1;
    std::size_t seed_count = 20;
    std::size_t max_n = 5;
    std::size_t max_dim = 3;
    bool include_fixtures = true;
    std::vector<Instance> extras;
};

// Seeded enumerations (half central, half affine), positive restrictions of
// the first central ones, the hand fixtures with a few broken mutations, and
// any extras. Deterministic for a given spec.
std::vector<Instance> build_corpus(const CorpusSpec& spec);

struct TheoremResult {
    std::string name;
    std::string claim;
    bool passed = true;
    std::size_t applicable = 0; // instances the check actually ran on
    std::string certificate;    // first failure, empty when passed
};

struct InstanceVerdict {
    std::string name;
    std::string origin;
    std::size_t elements = 0;
    std::size_t vectors = 0;
    bool om = false;
    bool aom = false;
};

struct SuiteResult {
    std::vector<InstanceVerdict> instances;
    std::vector<TheoremResult> theorems;
    bool all_passed = true;
};

// Runs every theorem check on every applicable corpus member. Failures are
// recorded with certificates, never thrown; the suite always runs to the end.
SuiteResult run_suite(const CorpusSpec& spec);

} // namespace svcalc
