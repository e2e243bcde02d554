#include "geometry.hpp"

#include "errors.hpp"
#include "linear_feasibility.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>

namespace svcalc {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        r += a[i] * b[i];
    return r;
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

} // namespace

Arrangement::Arrangement(ArrangementKind kind, std::size_t dim,
                         std::vector<Hyperplane> hyperplanes)
    : kind_(kind), dim_(dim), hyperplanes_(std::move(hyperplanes)) {
    if (dim_ == 0)
        throw input_error("arrangement dimension must be positive");
    std::vector<std::string> labels;
    labels.reserve(hyperplanes_.size());
    for (const auto& h : hyperplanes_) {
        if (h.normal.size() != dim_)
            throw input_error("hyperplane " + h.label + " has a normal of the wrong dimension");
        if (all_zero(h.normal))
            throw input_error("hyperplane " + h.label + " has a zero normal");
        if (kind_ == ArrangementKind::central && h.offset != 0)
            throw input_error("central arrangement requires zero offsets (hyperplane " +
                              h.label + ")");
        labels.push_back(h.label);
    }
    ground_ = GroundSet::make(std::move(labels));
}

Sign sign_at(const Hyperplane& h, const std::vector<Rational>& point) {
    if (point.size() != h.normal.size())
        throw input_error("point dimension does not match hyperplane " + h.label);
    const int s = sign_of(dot(h.normal, point) - h.offset);
    return s > 0 ? Sign::plus : s < 0 ? Sign::minus : Sign::zero;
}

SignVector sign_vector_at(const Arrangement& arr, const std::vector<Rational>& point) {
    std::uint32_t plus = 0, minus = 0;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        switch (sign_at(arr.hyperplanes()[i], point)) {
        case Sign::plus: plus |= std::uint32_t(1) << i; break;
        case Sign::minus: minus |= std::uint32_t(1) << i; break;
        case Sign::zero: break;
        }
    }
    return SignVector(arr.ground(), plus, minus);
}

std::optional<std::vector<Rational>> cell_witness(const Arrangement& arr,
                                                  const SignVector& pattern) {
    if (!same_ground(pattern.ground(), arr.ground()))
        throw input_error("sign pattern does not match the arrangement's hyperplanes");
    StrictSystem sys;
    sys.dim = arr.dim();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& h = arr.hyperplanes()[i];
        switch (pattern.at(i)) {
        case Sign::plus:
            sys.gt.emplace_back(h.normal, h.offset);
            break;
        case Sign::minus: {
            std::vector<Rational> neg(h.normal.size());
            for (std::size_t j = 0; j < h.normal.size(); ++j)
                neg[j] = -h.normal[j];
            sys.gt.emplace_back(std::move(neg), -h.offset);
            break;
        }
        case Sign::zero:
            sys.eq.emplace_back(h.normal, h.offset);
            break;
        }
    }
    return solve_strict_system(sys);
}

SignSystem enumerate_covectors(const Arrangement& arr) {
    std::vector<SignVector> found;
    for_each_sign_pattern(*arr.ground(), [&](std::uint32_t plus, std::uint32_t minus) {
        SignVector v(arr.ground(), plus, minus);
        if (cell_witness(arr, v))
            found.push_back(std::move(v));
    });
    return SignSystem::of(arr.ground(), std::move(found));
}

Arrangement embed_affine(const Arrangement& arr) {
    if (arr.kind() != ArrangementKind::affine)
        throw input_error("embedding expects an affine arrangement");
    std::vector<Hyperplane> hs;
    hs.reserve(arr.size() + 1);
    for (const auto& h : arr.hyperplanes()) {
        auto normal = h.normal;
        normal.push_back(-h.offset);
        hs.push_back({h.label, std::move(normal), Rational(0)});
    }
    std::vector<Rational> last(arr.dim() + 1, Rational(0));
    last.back() = 1;
    hs.push_back({fresh_label(*arr.ground()), std::move(last), Rational(0)});
    return Arrangement(ArrangementKind::central, arr.dim() + 1, std::move(hs));
}

bool check_regularity(const Arrangement& arr) {
    // Rank of the normal matrix by elimination.
    std::vector<std::vector<Rational>> rows;
    rows.reserve(arr.size());
    for (const auto& h : arr.hyperplanes())
        rows.push_back(h.normal);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < arr.dim() && rank < rows.size(); ++c) {
        std::size_t k = rank;
        while (k < rows.size() && rows[k][c] == 0)
            ++k;
        if (k == rows.size())
            continue;
        std::swap(rows[rank], rows[k]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            const Rational f = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < arr.dim(); ++j)
                rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank == arr.dim();
}

std::size_t planar_region_count(const Arrangement& arr) {
    if (arr.kind() != ArrangementKind::affine || arr.dim() != 2)
        throw input_error("region count needs an affine arrangement of lines");
    const auto& hs = arr.hyperplanes();
    // Lines through each pairwise intersection point; coincident input lines
    // would break the count, so they are rejected.
    std::map<std::pair<Rational, Rational>, std::set<std::size_t>> through;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const auto& a = hs[i].normal;
            const auto& b = hs[j].normal;
            const Rational det = a[0] * b[1] - a[1] * b[0];
            if (det == 0) {
                const std::size_t k = a[0] != 0 ? 0 : 1;
                if (hs[j].offset * a[k] == hs[i].offset * b[k])
                    throw input_error("lines " + hs[i].label + " and " + hs[j].label +
                                      " coincide");
                continue;
            }
            const Rational x = (hs[i].offset * b[1] - hs[j].offset * a[1]) / det;
            const Rational y = (a[0] * hs[j].offset - b[0] * hs[i].offset) / det;
            auto& lines = through[{x, y}];
            lines.insert(i);
            lines.insert(j);
        }
    }
    std::size_t regions = 1 + hs.size();
    for (const auto& [point, lines] : through)
        regions += lines.size() - 1;
    return regions;
}

Arrangement random_arrangement(std::uint64_t seed,
                               std::size_t max_n,
                               std::size_t max_dim,
                               ArrangementKind kind) {
    if (max_n == 0 || max_dim == 0)
        throw input_error("random arrangement needs positive bounds");
    std::mt19937_64 eng(seed);
    // Interval picks via modulo; the tiny bias is irrelevant here and keeps
    // the stream identical across standard libraries.
    auto pick = [&eng](long lo, long hi) {
        return lo + long(eng() % std::uint64_t(hi - lo + 1));
    };
    const auto dim = std::size_t(pick(1, long(max_dim)));
    const auto n = std::size_t(pick(1, long(max_n)));
    const auto classes = std::size_t(pick(1, long(n)));

    std::vector<std::vector<Rational>> normals(classes);
    for (auto& normal : normals) {
        do {
            normal.clear();
            for (std::size_t j = 0; j < dim; ++j)
                normal.emplace_back(pick(-3, 3));
        } while (all_zero(normal));
    }

    std::vector<std::set<Rational>> used(classes);
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = std::size_t(pick(0, long(classes) - 1));
        Rational offset = 0;
        if (kind == ArrangementKind::affine) {
            // Distinct offsets within a parallel class keep its lines apart.
            const long span = long(n) + 3;
            offset = pick(-span, span);
            for (int tries = 0; used[c].count(offset) && tries < 64; ++tries)
                offset = pick(-span, span);
            while (used[c].count(offset))
                offset += 1;
            used[c].insert(offset);
        }
        hs.push_back({"h" + std::to_string(i + 1), normals[c], offset});
    }
    return Arrangement(kind, dim, std::move(hs));
}

} // namespace svcalc
