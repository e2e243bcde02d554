#pragma once

#include "rational.hpp"
#include "sign_system.hpp"
#include "sign_vector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace svcalc {

enum class ArrangementKind { central, affine };

// Oriented hyperplane normal . x = offset; the positive side is normal . x > offset.
struct Hyperplane {
    std::string label;
    std::vector<Rational> normal;
    Rational offset;
};

class Arrangement {
public:
    // Central arrangements must have every offset zero. Normals must be nonzero
    // and of length dim; labels must be distinct. Coincident hyperplanes under
    // different labels are allowed (they realize parallel elements).
    Arrangement(ArrangementKind kind, std::size_t dim, std::vector<Hyperplane> hyperplanes);

    ArrangementKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const GroundSetPtr& ground() const { return ground_; }

private:
    ArrangementKind kind_;
    std::size_t dim_;
    std::vector<Hyperplane> hyperplanes_;
    GroundSetPtr ground_;
};

Sign sign_at(const Hyperplane& h, const std::vector<Rational>& point);
SignVector sign_vector_at(const Arrangement& arr, const std::vector<Rational>& point);

// A point realizing the pattern (strict sides for +/-, incidence for 0), if any.
std::optional<std::vector<Rational>> cell_witness(const Arrangement& arr,
                                                  const SignVector& pattern);

// All sign vectors realized by some point of the space. For a central
// arrangement this is the covector set of the realized oriented matroid.
SignSystem enumerate_covectors(const Arrangement& arr);

// Homogenize an affine arrangement: each normal.x = offset becomes a central
// hyperplane in one more dimension, and the hyperplane of the extra coordinate
// is appended last under a fresh label. Points of the affine arrangement
// correspond to points of the central one with positive last coordinate.
Arrangement embed_affine(const Arrangement& arr);

// Whether the normals span the whole space.
bool check_regularity(const Arrangement& arr);

// Region count of an affine line arrangement (dim 2, pairwise distinct lines)
// by the classical count: 1 + n + sum over vertices of (multiplicity - 1).
// Independent of the covector machinery, so it serves as a cross-check.
std::size_t planar_region_count(const Arrangement& arr);

// Deterministic pseudo-random arrangement: dimension up to max_dim, up to
// max_n hyperplanes split into parallel classes sharing a normal. Affine
// offsets within a class are distinct; central arrangements keep offset zero,
// so a repeated class yields coincident hyperplanes there.
Arrangement random_arrangement(std::uint64_t seed,
                               std::size_t max_n,
                               std::size_t max_dim,
                               ArrangementKind kind);

} // namespace svcalc
