#include "axioms.hpp"

#include <algorithm>
#include <array>

namespace svcalc {

namespace {

struct AxiomNameEntry {
    Axiom axiom;
    std::string_view name;
};

constexpr std::array<AxiomNameEntry, 12> axiom_names = {{
    {Axiom::O1, "O1"},
    {Axiom::O2, "O2"},
    {Axiom::O3, "O3"},
    {Axiom::O4, "O4"},
    {Axiom::O4Prime, "O4'"},
    {Axiom::SE, "SE"},
    {Axiom::A1, "A1"},
    {Axiom::A1Prime, "A1'"},
    {Axiom::A2, "A2"},
    {Axiom::A2Prime, "A2'"},
    {Axiom::A3, "A3"},
    {Axiom::A3Prime, "A3'"},
}};

bool is_covector_axiom(Axiom a) {
    switch (a) {
    case Axiom::O1:
    case Axiom::O2:
    case Axiom::O3:
    case Axiom::O4:
    case Axiom::O4Prime:
    case Axiom::SE:
        return true;
    default:
        return false;
    }
}

// Does some member of w lie in the elimination set of (x, y) at e?
bool elimination_at_meets(const SignSystem& w, const SignVector& x, const SignVector& y,
                          std::size_t e) {
    const std::uint32_t sep = separation_mask(x, y);
    const std::uint32_t bit = std::uint32_t(1) << e;
    const std::uint32_t base_p = x.plus_mask() & ~sep, base_m = x.minus_mask() & ~sep;
    for (const auto& z : w.members())
        if ((z.plus_mask() & ~sep) == base_p && (z.minus_mask() & ~sep) == base_m &&
            (z.support_mask() & bit) == 0)
            return true;
    return false;
}

bool extended_elimination_at_meets(const SignSystem& w, const SignVector& x, const SignVector& y,
                                   std::size_t e) {
    const std::uint32_t sep = separation_mask(x, y);
    const SignVector c = compose(x, y);
    const std::uint32_t bit = std::uint32_t(1) << e;
    const std::uint32_t base_p = c.plus_mask() & ~sep, base_m = c.minus_mask() & ~sep;
    for (const auto& z : w.members())
        if ((z.plus_mask() & ~sep) == base_p && (z.minus_mask() & ~sep) == base_m &&
            (z.support_mask() & bit) == 0)
            return true;
    return false;
}

AxiomVerdict check_zero_member(const SignSystem& s) {
    AxiomVerdict v{Axiom::O1, true, 1, std::nullopt};
    if (!s.contains_masks(0, 0)) {
        v.passed = false;
        v.violation = Violation{Axiom::O1, {}, std::nullopt, "zero vector is not a member"};
    }
    return v;
}

AxiomVerdict check_opposites(const SignSystem& s) {
    AxiomVerdict v{Axiom::O2, true, 0, std::nullopt};
    for (const auto& x : s.members()) {
        ++v.tuples_checked;
        if (!s.contains_masks(x.minus_mask(), x.plus_mask())) {
            v.passed = false;
            v.violation = Violation{Axiom::O2, {x}, std::nullopt, "opposite is not a member"};
            return v;
        }
    }
    return v;
}

AxiomVerdict check_composition(const SignSystem& s) {
    AxiomVerdict v{Axiom::O3, true, 0, std::nullopt};
    for (const auto& x : s.members()) {
        for (const auto& y : s.members()) {
            ++v.tuples_checked;
            if (!s.contains(compose(x, y))) {
                v.passed = false;
                v.violation =
                    Violation{Axiom::O3, {x, y}, std::nullopt, "composition escapes the system"};
                return v;
            }
        }
    }
    return v;
}

// Shared by O4 and A2: same predicate, quantified over one system.
AxiomVerdict check_elimination(const SignSystem& s, Axiom tag) {
    AxiomVerdict v{tag, true, 0, std::nullopt};
    for (const auto& x : s.members()) {
        for (const auto& y : s.members()) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            for (std::size_t e : positions(separation_mask(x, y))) {
                ++v.tuples_checked;
                if (!elimination_at_meets(s, x, y, e)) {
                    v.passed = false;
                    v.violation = Violation{tag, {x, y}, e,
                                            "no member eliminates the coordinate between the pair"};
                    return v;
                }
            }
        }
    }
    return v;
}

AxiomVerdict check_elimination_union(const SignSystem& s) {
    AxiomVerdict v{Axiom::O4Prime, true, 0, std::nullopt};
    for (const auto& x : s.members()) {
        for (const auto& y : s.members()) {
            if (x.support_mask() != y.support_mask() || x == y)
                continue;
            ++v.tuples_checked;
            if (!elimination_meets(s, x, y)) {
                v.passed = false;
                v.violation = Violation{Axiom::O4Prime, {x, y}, std::nullopt,
                                        "the elimination set misses the system"};
                return v;
            }
        }
    }
    return v;
}

// Shared by SE and A2': extended elimination over every separating coordinate.
AxiomVerdict check_strong_elimination(const SignSystem& s, Axiom tag) {
    AxiomVerdict v{tag, true, 0, std::nullopt};
    for (const auto& x : s.members()) {
        for (const auto& y : s.members()) {
            const std::uint32_t sep = separation_mask(x, y);
            for (std::size_t e : positions(sep)) {
                ++v.tuples_checked;
                if (!extended_elimination_at_meets(s, x, y, e)) {
                    v.passed = false;
                    v.violation = Violation{tag, {x, y}, e,
                                            "no member matches the composition off the "
                                            "separation set and eliminates the coordinate"};
                    return v;
                }
            }
        }
    }
    return v;
}

AxiomVerdict check_both_compositions(const SignSystem& w) {
    AxiomVerdict v{Axiom::A1, true, 0, std::nullopt};
    for (const auto& x : w.members()) {
        for (const auto& y : w.members()) {
            ++v.tuples_checked;
            if (!w.contains(compose(x, y)) || !w.contains(compose(x, -y))) {
                v.passed = false;
                v.violation = Violation{Axiom::A1, {x, y}, std::nullopt,
                                        "composition with the pair or its opposite escapes"};
                return v;
            }
        }
    }
    return v;
}

AxiomVerdict check_opposite_composition(const SignSystem& w) {
    AxiomVerdict v{Axiom::A1Prime, true, 0, std::nullopt};
    for (const auto& x : w.members()) {
        for (const auto& y : w.members()) {
            ++v.tuples_checked;
            if (!w.contains(compose(x, -y))) {
                v.passed = false;
                v.violation = Violation{Axiom::A1Prime, {x, y}, std::nullopt,
                                        "composition with the opposite escapes the system"};
                return v;
            }
        }
    }
    return v;
}

AxiomVerdict check_parallel_closure(const SignSystem& w, Axiom tag) {
    const SignSystem p =
        tag == Axiom::A3 ? parallel_vectors(w) : extended_parallel_vectors(w);
    AxiomVerdict v{tag, true, 0, std::nullopt};
    for (const auto& n : p.members()) {
        for (const auto& x : w.members()) {
            ++v.tuples_checked;
            if (!w.contains(compose(n, x))) {
                v.passed = false;
                v.violation = Violation{tag, {n, x}, std::nullopt,
                                        "composition of a parallel vector onto a member escapes"};
                return v;
            }
        }
    }
    return v;
}

AxiomVerdict dispatch(const SignSystem& s, Axiom a) {
    switch (a) {
    case Axiom::O1: return check_zero_member(s);
    case Axiom::O2: return check_opposites(s);
    case Axiom::O3: return check_composition(s);
    case Axiom::O4: return check_elimination(s, Axiom::O4);
    case Axiom::O4Prime: return check_elimination_union(s);
    case Axiom::SE: return check_strong_elimination(s, Axiom::SE);
    case Axiom::A1: return check_both_compositions(s);
    case Axiom::A1Prime: return check_opposite_composition(s);
    case Axiom::A2: return check_elimination(s, Axiom::A2);
    case Axiom::A2Prime: return check_strong_elimination(s, Axiom::A2Prime);
    case Axiom::A3: return check_parallel_closure(s, Axiom::A3);
    case Axiom::A3Prime: return check_parallel_closure(s, Axiom::A3Prime);
    }
    throw internal_error("unknown axiom");
}

} // namespace

std::string_view axiom_name(Axiom a) {
    for (const auto& e : axiom_names)
        if (e.axiom == a)
            return e.name;
    return "?";
}

std::optional<Axiom> axiom_from_name(std::string_view name) {
    for (const auto& e : axiom_names)
        if (e.name == name)
            return e.axiom;
    return std::nullopt;
}

bool AxiomReport::all_passed() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const AxiomVerdict& v) { return v.passed; });
}

const AxiomVerdict* AxiomReport::find(Axiom a) const {
    for (const auto& v : verdicts)
        if (v.axiom == a)
            return &v;
    return nullptr;
}

AxiomReport check_covector_axioms(const SignSystem& s, std::span<const Axiom> which) {
    AxiomReport report;
    for (Axiom a : which) {
        if (!is_covector_axiom(a))
            throw input_error(std::string("not a covector axiom: ") + std::string(axiom_name(a)));
        report.verdicts.push_back(dispatch(s, a));
    }
    return report;
}

AxiomReport check_affine_axioms(const SignSystem& w, std::span<const Axiom> which) {
    AxiomReport report;
    for (Axiom a : which) {
        if (is_covector_axiom(a))
            throw input_error(std::string("not an affine axiom: ") + std::string(axiom_name(a)));
        report.verdicts.push_back(dispatch(w, a));
    }
    return report;
}

OmResult check_om(const SignSystem& s) {
    constexpr std::array<Axiom, 4> axioms = {Axiom::O1, Axiom::O2, Axiom::O3, Axiom::O4};
    auto report = check_covector_axioms(s, axioms);
    return OmResult{report.all_passed(), std::move(report)};
}

AomResult check_aom(const SignSystem& w, AomStrategy strategy) {
    AomResult result{false, std::nullopt, std::nullopt, std::nullopt};
    std::optional<bool> by_axioms, by_lift;
    if (strategy == AomStrategy::axioms || strategy == AomStrategy::both) {
        constexpr std::array<Axiom, 3> axioms = {Axiom::A1, Axiom::A2, Axiom::A3};
        result.affine_report = check_affine_axioms(w, axioms);
        by_axioms = result.affine_report->all_passed();
    }
    if (strategy == AomStrategy::dagger || strategy == AomStrategy::both) {
        auto lifted = central_extension(w, fresh_label(*w.ground()));
        auto om = check_om(lifted.system);
        result.lifted_system = std::move(lifted.system);
        result.lifted_report = std::move(om.report);
        by_lift = om.is_om;
    }
    if (by_axioms && by_lift && *by_axioms != *by_lift)
        throw internal_error("affine axiom check and central extension check disagree");
    result.is_aom = by_axioms ? *by_axioms : *by_lift;
    return result;
}

ComResult check_com(const SignSystem& w) {
    constexpr std::array<Axiom, 2> axioms = {Axiom::A1Prime, Axiom::A2Prime};
    auto report = check_affine_axioms(w, axioms);
    return ComResult{report.all_passed(), std::move(report)};
}

bool replay(const SignSystem& s, const Violation& v) {
    const auto member = [&](std::size_t i) -> const SignVector& { return v.witnesses.at(i); };
    switch (v.axiom) {
    case Axiom::O1:
        return !s.contains_masks(0, 0);
    case Axiom::O2:
        return s.contains(member(0)) && !s.contains(-member(0));
    case Axiom::O3:
        return s.contains(member(0)) && s.contains(member(1)) &&
               !s.contains(compose(member(0), member(1)));
    case Axiom::O4:
    case Axiom::A2: {
        const auto &x = member(0), &y = member(1);
        if (!s.contains(x) || !s.contains(y) || !v.coordinate)
            return false;
        if (x.support_mask() != y.support_mask() || x == y)
            return false;
        const std::uint32_t bit = std::uint32_t(1) << *v.coordinate;
        if ((separation_mask(x, y) & bit) == 0)
            return false;
        return !elimination_at_meets(s, x, y, *v.coordinate);
    }
    case Axiom::O4Prime: {
        const auto &x = member(0), &y = member(1);
        return s.contains(x) && s.contains(y) && x.support_mask() == y.support_mask() &&
               x != y && !elimination_meets(s, x, y);
    }
    case Axiom::SE:
    case Axiom::A2Prime: {
        const auto &x = member(0), &y = member(1);
        if (!s.contains(x) || !s.contains(y) || !v.coordinate)
            return false;
        const std::uint32_t bit = std::uint32_t(1) << *v.coordinate;
        if ((separation_mask(x, y) & bit) == 0)
            return false;
        return !extended_elimination_at_meets(s, x, y, *v.coordinate);
    }
    case Axiom::A1:
        return s.contains(member(0)) && s.contains(member(1)) &&
               (!s.contains(compose(member(0), member(1))) ||
                !s.contains(compose(member(0), -member(1))));
    case Axiom::A1Prime:
        return s.contains(member(0)) && s.contains(member(1)) &&
               !s.contains(compose(member(0), -member(1)));
    case Axiom::A3:
        return parallel_vectors(s).contains(member(0)) && s.contains(member(1)) &&
               !s.contains(compose(member(0), member(1)));
    case Axiom::A3Prime:
        return extended_parallel_vectors(s).contains(member(0)) && s.contains(member(1)) &&
               !s.contains(compose(member(0), member(1)));
    }
    return false;
}

} // namespace svcalc
