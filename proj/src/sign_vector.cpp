#include "sign_vector.hpp"

#include <algorithm>
#include <unordered_set>

namespace svcalc {

char sign_char(Sign s) {
    switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    default: return '0';
    }
}

Sign sign_from_char(char c) {
    switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    default: throw input_error(std::string("invalid sign character '") + c + "'");
    }
}

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    full_mask_ = labels_.empty() ? 0 : (std::uint32_t(1) << labels_.size()) - 1;
}

GroundSetPtr GroundSet::make(std::vector<std::string> labels) {
    if (labels.size() > max_elements)
        throw input_error("ground set exceeds " + std::to_string(max_elements) + " elements");
    std::unordered_set<std::string_view> seen;
    for (const auto& l : labels) {
        if (l.empty())
            throw input_error("empty element label");
        if (!seen.insert(l).second)
            throw input_error("duplicate element label '" + l + "'");
    }
    return GroundSetPtr(new GroundSet(std::move(labels)));
}

std::optional<std::size_t> GroundSet::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

bool same_ground(const GroundSetPtr& a, const GroundSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

std::vector<std::size_t> positions(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u)
            out.push_back(i);
    return out;
}

namespace {

void require_same_ground(const SignVector& a, const SignVector& b) {
    if (!same_ground(a.ground(), b.ground()))
        throw input_error("sign vectors over different ground sets");
}

} // namespace

SignVector::SignVector(GroundSetPtr ground, std::uint32_t plus, std::uint32_t minus)
    : ground_(std::move(ground)), plus_(plus), minus_(minus) {
    if (!ground_)
        throw input_error("null ground set");
    if ((plus_ & minus_) != 0)
        throw input_error("plus and minus sets overlap");
    if (((plus_ | minus_) & ~ground_->full_mask()) != 0)
        throw input_error("sign mask outside the ground set");
}

SignVector SignVector::zero(GroundSetPtr ground) {
    return SignVector(std::move(ground), 0, 0);
}

SignVector SignVector::parse(GroundSetPtr ground, std::string_view text) {
    if (!ground)
        throw input_error("null ground set");
    if (text.size() != ground->size())
        throw input_error("sign vector has length " + std::to_string(text.size()) +
                          ", expected " + std::to_string(ground->size()));
    std::uint32_t plus = 0, minus = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (sign_from_char(text[i])) {
        case Sign::plus: plus |= std::uint32_t(1) << i; break;
        case Sign::minus: minus |= std::uint32_t(1) << i; break;
        case Sign::zero: break;
        }
    }
    return SignVector(std::move(ground), plus, minus);
}

Sign SignVector::at(std::size_t pos) const {
    const std::uint32_t bit = std::uint32_t(1) << pos;
    if (plus_ & bit)
        return Sign::plus;
    if (minus_ & bit)
        return Sign::minus;
    return Sign::zero;
}

std::string SignVector::str() const {
    std::string out(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
        out[i] = sign_char(at(i));
    return out;
}

SignVector compose(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    const std::uint32_t open = ~x.support_mask();
    return SignVector(x.ground(), x.plus_mask() | (y.plus_mask() & open),
                      x.minus_mask() | (y.minus_mask() & open));
}

SignVector opposite(const SignVector& x) {
    return SignVector(x.ground(), x.minus_mask(), x.plus_mask());
}

std::uint32_t separation_mask(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    return (x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask());
}

SignVector sum(const SignVector& x, const SignVector& y) {
    const std::uint32_t sep = separation_mask(x, y);
    const SignVector c = compose(x, y);
    return SignVector(x.ground(), c.plus_mask() & ~sep, c.minus_mask() & ~sep);
}

SignVector restrict_to(const SignVector& x, std::uint32_t keep) {
    if ((keep & ~x.ground()->full_mask()) != 0)
        throw input_error("restriction set outside the ground set");
    return SignVector(x.ground(), x.plus_mask() & keep, x.minus_mask() & keep);
}

SignVector reorient(const SignVector& x, std::uint32_t flip) {
    if ((flip & ~x.ground()->full_mask()) != 0)
        throw input_error("reorientation set outside the ground set");
    return SignVector(x.ground(), (x.plus_mask() & ~flip) | (x.minus_mask() & flip),
                      (x.minus_mask() & ~flip) | (x.plus_mask() & flip));
}

bool conforms(const SignVector& x, const SignVector& y) {
    require_same_ground(x, y);
    return (x.plus_mask() & ~y.plus_mask()) == 0 && (x.minus_mask() & ~y.minus_mask()) == 0;
}

SignVector lift(const SignVector& x, const std::string& new_label, Sign s) {
    if (x.ground()->index_of(new_label))
        throw input_error("label '" + new_label + "' already in the ground set");
    auto labels = x.ground()->labels();
    labels.push_back(new_label);
    auto ground = GroundSet::make(std::move(labels));
    const std::uint32_t bit = std::uint32_t(1) << x.size();
    return SignVector(std::move(ground), x.plus_mask() | (s == Sign::plus ? bit : 0),
                      x.minus_mask() | (s == Sign::minus ? bit : 0));
}

SignVector drop(const SignVector& x, const std::string& label) {
    auto pos = x.ground()->index_of(label);
    if (!pos)
        throw input_error("label '" + label + "' not in the ground set");
    std::vector<std::string> labels;
    labels.reserve(x.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (i != *pos)
            labels.push_back(x.ground()->label(i));
    auto ground = GroundSet::make(std::move(labels));
    const std::uint32_t low = (std::uint32_t(1) << *pos) - 1;
    auto shrink = [&](std::uint32_t m) { return (m & low) | ((m >> 1) & ~low); };
    return SignVector(std::move(ground), shrink(x.plus_mask()), shrink(x.minus_mask()));
}

bool canonical_less(const SignVector& a, const SignVector& b) {
    auto rank = [](Sign s) { return s == Sign::plus ? 0 : s == Sign::minus ? 1 : 2; };
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int ra = rank(a.at(i)), rb = rank(b.at(i));
        if (ra != rb)
            return ra < rb;
    }
    return false;
}

} // namespace svcalc
