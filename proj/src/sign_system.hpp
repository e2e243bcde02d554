#pragma once

#include "sign_vector.hpp"

#include <span>
#include <unordered_set>
#include <vector>

namespace svcalc {

// Duplicate-free set of sign vectors over one ground set.
// Iteration order is canonical; membership is O(1) on packed masks.
class SignSystem {
public:
    explicit SignSystem(GroundSetPtr ground);
    static SignSystem of(GroundSetPtr ground, std::vector<SignVector> members);

    const GroundSetPtr& ground() const { return ground_; }
    std::span<const SignVector> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const SignVector& v) const;
    bool contains_masks(std::uint32_t plus, std::uint32_t minus) const;

    SignSystem without(const SignVector& v) const;

    bool operator==(const SignSystem& other) const;

private:
    GroundSetPtr ground_;
    std::vector<SignVector> members_; // sorted canonically, deduped
    std::unordered_set<std::uint64_t> keys_;
};

// Calls fn(plus, minus) for every vector over the ground set, in canonical order.
template <typename Fn>
void for_each_sign_pattern(const GroundSet& ground, Fn&& fn) {
    const std::size_t n = ground.size();
    // Odometer over per-position signs in canonical rank order +, -, 0.
    std::vector<int> digit(n, 0);
    for (;;) {
        std::uint32_t plus = 0, minus = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (digit[i] == 0)
                plus |= std::uint32_t(1) << i;
            else if (digit[i] == 1)
                minus |= std::uint32_t(1) << i;
        }
        fn(plus, minus);
        std::size_t i = n;
        while (i > 0 && digit[i - 1] == 2)
            digit[--i] = 0;
        if (i == 0)
            return;
        ++digit[i - 1];
    }
}

SignSystem sym(const SignSystem& w);  // members whose opposite is also present
SignSystem asym(const SignSystem& w); // the rest

// Members whose support is maximal under inclusion within the system.
SignSystem topes(const SignSystem& w);

// Eliminating e between equal-support X != Y: vectors supported inside
// supp X - {e} that agree with X outside the separation set.
SignSystem elimination_set(const SignVector& x, const SignVector& y, std::size_t e);
// Union over every e in the separation set.
SignSystem elimination_set(const SignVector& x, const SignVector& y);
// Equal-support companions: same support as X, agree with X off the
// separation set, X and Y themselves excluded.
SignSystem equal_support_set(const SignVector& x, const SignVector& y);

// Extension to arbitrary pairs: supported inside (supp X u supp Y) - {e},
// agreeing with X o Y outside the separation set. Empty separation set
// yields the empty system for every e.
SignSystem extended_elimination_set(const SignVector& x, const SignVector& y, std::size_t e);
SignSystem extended_elimination_set(const SignVector& x, const SignVector& y);

// Membership predicates matching the set builders above, without materializing.
bool in_elimination_set(const SignVector& x, const SignVector& y, std::size_t e,
                        const SignVector& z);
bool in_elimination_set(const SignVector& x, const SignVector& y, const SignVector& z);
bool in_equal_support_set(const SignVector& x, const SignVector& y, const SignVector& z);
bool in_extended_elimination_set(const SignVector& x, const SignVector& y, std::size_t e,
                                 const SignVector& z);
bool in_extended_elimination_set(const SignVector& x, const SignVector& y, const SignVector& z);

// Does the elimination set of (x, y) meet w? Scans members of w.
bool elimination_meets(const SignSystem& w, const SignVector& x, const SignVector& y);
bool extended_elimination_meets(const SignSystem& w, const SignVector& x, const SignVector& y);

// P(W): sums X + (-Y) over equal-support pairs from asym(W), kept when both
// elimination sets I(X,-Y) and I(-X,Y) miss W. Pairs with X = Y contribute;
// X = -Y cannot occur inside asym(W).
SignSystem parallel_vectors(const SignSystem& w);

// N(W): all N with (+/-N) o W inside W. Exhaustive 3^n scan.
SignSystem stabilizer(const SignSystem& w);

// Q(W): sums X + (-Y) over all pairs from W, kept when both extended
// elimination sets miss W.
SignSystem extended_parallel_vectors(const SignSystem& w);

// W with the fresh coordinate fixed at +, -W at -, and the stabilizer at 0.
// The three parts cannot collide on the new coordinate; parts_overlap reports
// a size mismatch anyway as a diagnostic.
struct CentralExtension {
    SignSystem system;
    bool parts_overlap;
};
CentralExtension central_extension(const SignSystem& w, const std::string& new_label);

std::string fresh_label(const GroundSet& ground, std::string_view stem = "g");

// Members positive at the named coordinate, with that coordinate dropped.
SignSystem restrict_positive(const SignSystem& w, const std::string& label);

// All V whose composition onto every tope stays inside the tope set.
SignSystem tope_closure(const SignSystem& tope_set);

} // namespace svcalc
