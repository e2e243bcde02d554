#include "flaw_demo.hpp"

#include "axioms.hpp"
#include "errors.hpp"

namespace svcalc {

namespace {

void require_affine(const SignSystem& w) {
    const auto res = check_aom(w, AomStrategy::axioms);
    if (res.is_aom)
        return;
    std::string which = "the system is not an affine oriented matroid";
    for (const auto& v : res.affine_report->verdicts)
        if (!v.passed) {
            which += std::string(" (") + std::string(axiom_name(v.axiom)) + " fails)";
            break;
        }
    throw input_error(which);
}

// First asym pair with equal supports, both elimination sets missing w, and
// the given sum. Membership in the parallel vectors promises one exists.
std::optional<std::pair<SignVector, SignVector>> decompose(const SignSystem& w,
                                                           const SignVector& n1) {
    const auto as = asym(w);
    for (const auto& u : as.members()) {
        for (const auto& uprime : as.members()) {
            if (u.support_mask() != uprime.support_mask())
                continue;
            if (sum(u, -uprime) != n1)
                continue;
            if (elimination_meets(w, u, -uprime) || elimination_meets(w, -u, uprime))
                continue;
            return std::make_pair(u, uprime);
        }
    }
    return std::nullopt;
}

FlawDemoData demonstrate(const SignSystem& w, const SignSystem& parallels,
                         const SignVector& n1, const SignVector& n2) {
    const auto pair = decompose(w, n1);
    if (!pair)
        throw internal_error("no qualifying decomposition for the parallel vector " +
                             n1.str());
    const auto& [u, uprime] = *pair;

    const SignVector v = compose(-n2, u);
    if (!w.contains(v))
        throw internal_error("the composition " + v.str() +
                             " of a parallel vector onto a member left the system");
    if (w.contains_masks(v.minus_mask(), v.plus_mask()))
        throw internal_error("the composition " + v.str() +
                             " is symmetric, so the demonstration pair collapses");

    std::vector<SignVector> witnesses;
    const SignVector minus_v = -v;
    for (const auto& z : w.members())
        if (in_elimination_set(u, minus_v, z))
            witnesses.push_back(z);
    if (witnesses.empty())
        throw internal_error("the elimination set of (" + u.str() + ", " + minus_v.str() +
                             ") misses the system");

    const SignVector s = sum(u, minus_v);
    return {n1, n2, u, uprime, v, s, std::move(witnesses), parallels.contains(s)};
}

} // namespace

FlawDemoResult run_flaw_demo(const SignSystem& w) {
    require_affine(w);
    const auto parallels = parallel_vectors(w);
    for (const auto& n1 : parallels.members())
        for (const auto& n2 : parallels.members())
            if (n1 != n2 && n1.support_mask() == n2.support_mask())
                return {demonstrate(w, parallels, n1, n2), ""};
    return {std::nullopt, "no qualifying pair: the system has " +
                              std::to_string(parallels.size()) +
                              " parallel vector(s) and no two distinct ones share a support"};
}

FlawDemoResult run_flaw_demo(const SignSystem& w, const SignVector& n1, const SignVector& n2) {
    require_affine(w);
    if (!same_ground(n1.ground(), w.ground()) || !same_ground(n2.ground(), w.ground()))
        throw input_error("the chosen vectors live on a different ground set");
    const auto parallels = parallel_vectors(w);
    if (!parallels.contains(n1))
        throw input_error(n1.str() + " is not a parallel vector of the system");
    if (!parallels.contains(n2))
        throw input_error(n2.str() + " is not a parallel vector of the system");
    if (n1 == n2)
        throw input_error("the two chosen vectors must be distinct");
    if (n1.support_mask() != n2.support_mask())
        throw input_error("the two chosen vectors must share a support");
    return {demonstrate(w, parallels, n1, n2), ""};
}

} // namespace svcalc
