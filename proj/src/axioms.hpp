#pragma once

#include "sign_system.hpp"

#include <optional>
#include <span>
#include <string_view>

namespace svcalc {

// Covector axioms O1..O4 with the union variant O4' and strong elimination SE;
// affine axioms A1..A3 with the relaxed variants A1', A2', A3'.
enum class Axiom {
    O1,
    O2,
    O3,
    O4,
    O4Prime,
    SE,
    A1,
    A1Prime,
    A2,
    A2Prime,
    A3,
    A3Prime,
};

std::string_view axiom_name(Axiom a); // "O4'" and friends
std::optional<Axiom> axiom_from_name(std::string_view name);

// A failing tuple, replayable against the definitional predicate.
struct Violation {
    Axiom axiom;
    std::vector<SignVector> witnesses; // X, then Y when the axiom quantifies pairs
    std::optional<std::size_t> coordinate;
    std::string note;
};

struct AxiomVerdict {
    Axiom axiom;
    bool passed;
    std::uint64_t tuples_checked; // tuples examined before the verdict settled
    std::optional<Violation> violation;
};

struct AxiomReport {
    std::vector<AxiomVerdict> verdicts;

    bool all_passed() const;
    const AxiomVerdict* find(Axiom a) const;
};

// Checkers are exhaustive over the stated tuple range, iterate in canonical
// order, and report the first failing tuple per axiom. The empty system
// passes everything vacuously except O1.
AxiomReport check_covector_axioms(const SignSystem& s, std::span<const Axiom> which);
AxiomReport check_affine_axioms(const SignSystem& w, std::span<const Axiom> which);

struct OmResult {
    bool is_om;
    AxiomReport report; // O1..O4
};
OmResult check_om(const SignSystem& s);

enum class AomStrategy { axioms, dagger, both };

struct AomResult {
    bool is_aom;
    std::optional<AxiomReport> affine_report;   // A1, A2, A3
    std::optional<AxiomReport> lifted_report;   // O1..O4 over the central extension
    std::optional<SignSystem> lifted_system;
};
// Strategy both runs A1-A3 and the O-check of the central extension and
// throws internal_error if the verdicts disagree.
AomResult check_aom(const SignSystem& w, AomStrategy strategy);

struct ComResult {
    bool is_com;
    AxiomReport report; // A1', A2'
};
ComResult check_com(const SignSystem& w);

// True when the violation still reproduces against the definitional predicate.
bool replay(const SignSystem& system, const Violation& v);

} // namespace svcalc
