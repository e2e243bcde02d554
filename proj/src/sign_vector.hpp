#pragma once

#include "errors.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace svcalc {

enum class Sign : int { minus = -1, zero = 0, plus = 1 };

char sign_char(Sign s);
Sign sign_from_char(char c); // throws input_error on anything but '+', '-', '0'

// Ordered set of distinct element labels. Coordinate order is label order.
// Shared immutably by every vector over it.
class GroundSet;
using GroundSetPtr = std::shared_ptr<const GroundSet>;

class GroundSet {
public:
    // Hard cap: masks live in a single 32-bit word.
    static constexpr std::size_t max_elements = 30;

    static GroundSetPtr make(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t pos) const { return labels_[pos]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;
    std::uint32_t full_mask() const { return full_mask_; }

    bool operator==(const GroundSet& other) const { return labels_ == other.labels_; }

private:
    explicit GroundSet(std::vector<std::string> labels);

    std::vector<std::string> labels_;
    std::uint32_t full_mask_ = 0;
};

// True when both point at the same set or the label sequences agree.
bool same_ground(const GroundSetPtr& a, const GroundSetPtr& b);

std::vector<std::size_t> positions(std::uint32_t mask);

// Sign vector over a ground set, stored as disjoint plus/minus bitmasks.
// Equality is mask equality over an equal ground set.
class SignVector {
public:
    SignVector(GroundSetPtr ground, std::uint32_t plus, std::uint32_t minus);

    static SignVector zero(GroundSetPtr ground);
    // Expects exactly one character per element, over {+, -, 0}.
    static SignVector parse(GroundSetPtr ground, std::string_view text);

    const GroundSetPtr& ground() const { return ground_; }
    std::size_t size() const { return ground_->size(); }
    std::uint32_t plus_mask() const { return plus_; }
    std::uint32_t minus_mask() const { return minus_; }
    std::uint32_t support_mask() const { return plus_ | minus_; }
    std::uint32_t zero_mask() const { return ground_->full_mask() & ~support_mask(); }
    bool is_zero() const { return support_mask() == 0; }

    Sign at(std::size_t pos) const;
    std::string str() const;

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_ && same_ground(a.ground_, b.ground_);
    }
    friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }

private:
    GroundSetPtr ground_;
    std::uint32_t plus_;
    std::uint32_t minus_;
};

// (X o Y)_e = X_e when nonzero, else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);

SignVector opposite(const SignVector& x);
inline SignVector operator-(const SignVector& x) { return opposite(x); }

// Positions where X and Y carry strictly opposite signs.
std::uint32_t separation_mask(const SignVector& x, const SignVector& y);

// (X + Y)_e = 0 on the separation set, (X o Y)_e elsewhere.
SignVector sum(const SignVector& x, const SignVector& y);
inline SignVector operator+(const SignVector& x, const SignVector& y) { return sum(x, y); }

// Zeroes every coordinate outside keep; the ground set is unchanged.
SignVector restrict_to(const SignVector& x, std::uint32_t keep);

// Flips the sign on every coordinate in flip.
SignVector reorient(const SignVector& x, std::uint32_t flip);

// x <= y in the sign order: x+ within y+ and x- within y-.
bool conforms(const SignVector& x, const SignVector& y);

// Appends a fresh coordinate carrying s; the new label must not be present yet.
SignVector lift(const SignVector& x, const std::string& new_label, Sign s);

// Removes the named coordinate; the only operation that shrinks a ground set.
SignVector drop(const SignVector& x, const std::string& label);

// Canonical order: position by position with '+' < '-' < '0'. Serialized
// vectors sort identically (ASCII has '+' < '-' < '0').
bool canonical_less(const SignVector& a, const SignVector& b);

// Masks packed into one word; usable as a set key within one ground set.
inline std::uint64_t packed_key(const SignVector& v) {
    return (std::uint64_t(v.plus_mask()) << 32) | v.minus_mask();
}

} // namespace svcalc
