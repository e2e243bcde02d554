#include "sign_system.hpp"

#include <algorithm>

namespace svcalc {

SignSystem::SignSystem(GroundSetPtr ground) : ground_(std::move(ground)) {
    if (!ground_)
        throw input_error("null ground set");
}

SignSystem SignSystem::of(GroundSetPtr ground, std::vector<SignVector> members) {
    SignSystem out(std::move(ground));
    for (auto& v : members) {
        if (!same_ground(v.ground(), out.ground_))
            throw input_error("member over a different ground set");
        if (out.keys_.insert(packed_key(v)).second)
            out.members_.push_back(std::move(v));
    }
    std::sort(out.members_.begin(), out.members_.end(), canonical_less);
    return out;
}

bool SignSystem::contains(const SignVector& v) const {
    return same_ground(v.ground(), ground_) && keys_.count(packed_key(v)) != 0;
}

bool SignSystem::contains_masks(std::uint32_t plus, std::uint32_t minus) const {
    return keys_.count((std::uint64_t(plus) << 32) | minus) != 0;
}

SignSystem SignSystem::without(const SignVector& v) const {
    std::vector<SignVector> rest;
    rest.reserve(members_.size());
    for (const auto& m : members_)
        if (m != v)
            rest.push_back(m);
    return SignSystem::of(ground_, std::move(rest));
}

bool SignSystem::operator==(const SignSystem& other) const {
    if (!same_ground(ground_, other.ground_) || members_.size() != other.members_.size())
        return false;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].plus_mask() != other.members_[i].plus_mask() ||
            members_[i].minus_mask() != other.members_[i].minus_mask())
            return false;
    return true;
}

SignSystem sym(const SignSystem& w) {
    std::vector<SignVector> out;
    for (const auto& v : w.members())
        if (w.contains_masks(v.minus_mask(), v.plus_mask()))
            out.push_back(v);
    return SignSystem::of(w.ground(), std::move(out));
}

SignSystem asym(const SignSystem& w) {
    std::vector<SignVector> out;
    for (const auto& v : w.members())
        if (!w.contains_masks(v.minus_mask(), v.plus_mask()))
            out.push_back(v);
    return SignSystem::of(w.ground(), std::move(out));
}

SignSystem topes(const SignSystem& w) {
    std::vector<SignVector> out;
    for (const auto& v : w.members()) {
        const std::uint32_t s = v.support_mask();
        bool maximal = true;
        for (const auto& u : w.members()) {
            const std::uint32_t t = u.support_mask();
            if (t != s && (s & ~t) == 0) {
                maximal = false;
                break;
            }
        }
        if (maximal)
            out.push_back(v);
    }
    return SignSystem::of(w.ground(), std::move(out));
}

namespace {

void require_elimination_pair(const SignVector& x, const SignVector& y) {
    if (x.support_mask() != y.support_mask())
        throw input_error("elimination requires equal supports");
    if (x == y)
        throw input_error("elimination requires distinct vectors");
}

std::uint32_t require_separating(const SignVector& x, const SignVector& y, std::size_t e) {
    const std::uint32_t sep = separation_mask(x, y);
    if (e >= x.size() || ((std::uint32_t(1) << e) & sep) == 0)
        throw input_error("coordinate " + std::to_string(e) + " is not in the separation set");
    return sep;
}

// All vectors that agree with base off keep_free and run over {+,-,0} on it.
void enumerate_over(const GroundSetPtr& ground, std::uint32_t base_plus, std::uint32_t base_minus,
                    std::uint32_t free_mask, std::vector<SignVector>& out) {
    const auto free_pos = positions(free_mask);
    const std::size_t k = free_pos.size();
    std::vector<int> digit(k, 0);
    for (;;) {
        std::uint32_t plus = base_plus, minus = base_minus;
        for (std::size_t i = 0; i < k; ++i) {
            if (digit[i] == 0)
                plus |= std::uint32_t(1) << free_pos[i];
            else if (digit[i] == 1)
                minus |= std::uint32_t(1) << free_pos[i];
        }
        out.emplace_back(ground, plus, minus);
        std::size_t i = k;
        while (i > 0 && digit[i - 1] == 2)
            digit[--i] = 0;
        if (i == 0)
            return;
        ++digit[i - 1];
    }
}

} // namespace

SignSystem elimination_set(const SignVector& x, const SignVector& y, std::size_t e) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = require_separating(x, y, e);
    const std::uint32_t fixed = ~sep; // agree with x here; zero at e on top
    std::vector<SignVector> out;
    enumerate_over(x.ground(), x.plus_mask() & fixed, x.minus_mask() & fixed,
                   sep & ~(std::uint32_t(1) << e), out);
    return SignSystem::of(x.ground(), std::move(out));
}

SignSystem elimination_set(const SignVector& x, const SignVector& y) {
    require_elimination_pair(x, y);
    std::vector<SignVector> out;
    for (std::size_t e : positions(separation_mask(x, y))) {
        auto part = elimination_set(x, y, e);
        out.insert(out.end(), part.members().begin(), part.members().end());
    }
    return SignSystem::of(x.ground(), std::move(out));
}

SignSystem equal_support_set(const SignVector& x, const SignVector& y) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = separation_mask(x, y);
    std::vector<SignVector> all;
    // Nonzero on all of sep: enumerate +/- choices only.
    const auto sep_pos = positions(sep);
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << sep_pos.size()); ++bits) {
        std::uint32_t plus = x.plus_mask() & ~sep, minus = x.minus_mask() & ~sep;
        for (std::size_t i = 0; i < sep_pos.size(); ++i) {
            if (bits & (std::uint32_t(1) << i))
                minus |= std::uint32_t(1) << sep_pos[i];
            else
                plus |= std::uint32_t(1) << sep_pos[i];
        }
        SignVector v(x.ground(), plus, minus);
        if (v != x && v != y)
            all.push_back(std::move(v));
    }
    return SignSystem::of(x.ground(), std::move(all));
}

SignSystem extended_elimination_set(const SignVector& x, const SignVector& y, std::size_t e) {
    const std::uint32_t sep = separation_mask(x, y);
    if (sep == 0)
        return SignSystem(x.ground());
    require_separating(x, y, e);
    const SignVector c = compose(x, y);
    const std::uint32_t fixed = ~sep;
    std::vector<SignVector> out;
    enumerate_over(x.ground(), c.plus_mask() & fixed, c.minus_mask() & fixed,
                   sep & ~(std::uint32_t(1) << e), out);
    return SignSystem::of(x.ground(), std::move(out));
}

SignSystem extended_elimination_set(const SignVector& x, const SignVector& y) {
    const std::uint32_t sep = separation_mask(x, y);
    std::vector<SignVector> out;
    for (std::size_t e : positions(sep)) {
        auto part = extended_elimination_set(x, y, e);
        out.insert(out.end(), part.members().begin(), part.members().end());
    }
    return SignSystem::of(x.ground(), std::move(out));
}

bool in_elimination_set(const SignVector& x, const SignVector& y, std::size_t e,
                        const SignVector& z) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = require_separating(x, y, e);
    const std::uint32_t bit = std::uint32_t(1) << e;
    return (z.plus_mask() & ~sep) == (x.plus_mask() & ~sep) &&
           (z.minus_mask() & ~sep) == (x.minus_mask() & ~sep) && (z.support_mask() & bit) == 0;
}

bool in_elimination_set(const SignVector& x, const SignVector& y, const SignVector& z) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = separation_mask(x, y);
    return (z.plus_mask() & ~sep) == (x.plus_mask() & ~sep) &&
           (z.minus_mask() & ~sep) == (x.minus_mask() & ~sep) &&
           (sep & ~z.support_mask()) != 0;
}

bool in_equal_support_set(const SignVector& x, const SignVector& y, const SignVector& z) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = separation_mask(x, y);
    return z != x && z != y && z.support_mask() == x.support_mask() &&
           (z.plus_mask() & ~sep) == (x.plus_mask() & ~sep) &&
           (z.minus_mask() & ~sep) == (x.minus_mask() & ~sep);
}

bool in_extended_elimination_set(const SignVector& x, const SignVector& y, std::size_t e,
                                 const SignVector& z) {
    const std::uint32_t sep = separation_mask(x, y);
    if (sep == 0)
        return false;
    require_separating(x, y, e);
    const SignVector c = compose(x, y);
    const std::uint32_t bit = std::uint32_t(1) << e;
    return (z.plus_mask() & ~sep) == (c.plus_mask() & ~sep) &&
           (z.minus_mask() & ~sep) == (c.minus_mask() & ~sep) && (z.support_mask() & bit) == 0;
}

bool in_extended_elimination_set(const SignVector& x, const SignVector& y, const SignVector& z) {
    const std::uint32_t sep = separation_mask(x, y);
    if (sep == 0)
        return false;
    const SignVector c = compose(x, y);
    return (z.plus_mask() & ~sep) == (c.plus_mask() & ~sep) &&
           (z.minus_mask() & ~sep) == (c.minus_mask() & ~sep) &&
           (sep & ~z.support_mask()) != 0;
}

bool elimination_meets(const SignSystem& w, const SignVector& x, const SignVector& y) {
    require_elimination_pair(x, y);
    const std::uint32_t sep = separation_mask(x, y);
    const std::uint32_t base_p = x.plus_mask() & ~sep, base_m = x.minus_mask() & ~sep;
    for (const auto& z : w.members())
        if ((z.plus_mask() & ~sep) == base_p && (z.minus_mask() & ~sep) == base_m &&
            (sep & ~z.support_mask()) != 0)
            return true;
    return false;
}

bool extended_elimination_meets(const SignSystem& w, const SignVector& x, const SignVector& y) {
    const std::uint32_t sep = separation_mask(x, y);
    if (sep == 0)
        return false;
    const SignVector c = compose(x, y);
    const std::uint32_t base_p = c.plus_mask() & ~sep, base_m = c.minus_mask() & ~sep;
    for (const auto& z : w.members())
        if ((z.plus_mask() & ~sep) == base_p && (z.minus_mask() & ~sep) == base_m &&
            (sep & ~z.support_mask()) != 0)
            return true;
    return false;
}

SignSystem parallel_vectors(const SignSystem& w) {
    const SignSystem a = asym(w);
    std::vector<SignVector> out;
    for (const auto& x : a.members()) {
        for (const auto& y : a.members()) {
            if (x.support_mask() != y.support_mask())
                continue;
            // x = -y would make the pair ill-formed, but -y sits outside asym.
            if (!elimination_meets(w, x, -y) && !elimination_meets(w, -x, y))
                out.push_back(x + (-y));
        }
    }
    return SignSystem::of(w.ground(), std::move(out));
}

SignSystem stabilizer(const SignSystem& w) {
    std::vector<SignVector> out;
    for_each_sign_pattern(*w.ground(), [&](std::uint32_t plus, std::uint32_t minus) {
        const std::uint32_t open_p = ~(plus | minus);
        for (const auto& v : w.members()) {
            // n o v and (-n) o v must both stay inside w.
            if (!w.contains_masks(plus | (v.plus_mask() & open_p), minus | (v.minus_mask() & open_p)))
                return;
            if (!w.contains_masks(minus | (v.plus_mask() & open_p), plus | (v.minus_mask() & open_p)))
                return;
        }
        out.emplace_back(w.ground(), plus, minus);
    });
    return SignSystem::of(w.ground(), std::move(out));
}

SignSystem extended_parallel_vectors(const SignSystem& w) {
    std::vector<SignVector> out;
    for (const auto& x : w.members())
        for (const auto& y : w.members())
            if (!extended_elimination_meets(w, x, -y) && !extended_elimination_meets(w, -x, y))
                out.push_back(x + (-y));
    return SignSystem::of(w.ground(), std::move(out));
}

CentralExtension central_extension(const SignSystem& w, const std::string& new_label) {
    if (w.ground()->index_of(new_label))
        throw input_error("label '" + new_label + "' already in the ground set");
    const SignSystem n = stabilizer(w);
    std::vector<SignVector> out;
    out.reserve(2 * w.size() + n.size());
    for (const auto& v : w.members())
        out.push_back(lift(v, new_label, Sign::plus));
    for (const auto& v : w.members())
        out.push_back(lift(-v, new_label, Sign::minus));
    for (const auto& v : n.members())
        out.push_back(lift(v, new_label, Sign::zero));
    const std::size_t expected = out.size();
    auto labels = w.ground()->labels();
    labels.push_back(new_label);
    auto system = SignSystem::of(GroundSet::make(std::move(labels)), std::move(out));
    const bool overlap = system.size() != expected;
    return CentralExtension{std::move(system), overlap};
}

std::string fresh_label(const GroundSet& ground, std::string_view stem) {
    std::string candidate(stem);
    for (int i = 2; ground.index_of(candidate); ++i)
        candidate = std::string(stem) + std::to_string(i);
    return candidate;
}

SignSystem restrict_positive(const SignSystem& w, const std::string& label) {
    auto pos = w.ground()->index_of(label);
    if (!pos)
        throw input_error("label '" + label + "' not in the ground set");
    std::vector<SignVector> out;
    for (const auto& v : w.members())
        if (v.at(*pos) == Sign::plus)
            out.push_back(drop(v, label));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < w.ground()->size(); ++i)
        if (i != *pos)
            labels.push_back(w.ground()->label(i));
    return SignSystem::of(GroundSet::make(std::move(labels)), std::move(out));
}

SignSystem tope_closure(const SignSystem& tope_set) {
    std::vector<SignVector> out;
    for_each_sign_pattern(*tope_set.ground(), [&](std::uint32_t plus, std::uint32_t minus) {
        const std::uint32_t open = ~(plus | minus);
        for (const auto& t : tope_set.members())
            if (!tope_set.contains_masks(plus | (t.plus_mask() & open),
                                         minus | (t.minus_mask() & open)))
                return;
        out.emplace_back(tope_set.ground(), plus, minus);
    });
    return SignSystem::of(tope_set.ground(), std::move(out));
}

} // namespace svcalc
