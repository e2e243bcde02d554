#include "fixtures.hpp"

namespace svcalc::fixtures {

namespace {

SignSystem parse_all(const std::vector<std::string>& labels,
                     const std::vector<std::string>& rows) {
    auto ground = GroundSet::make(labels);
    std::vector<SignVector> members;
    members.reserve(rows.size());
    for (const auto& row : rows)
        members.push_back(SignVector::parse(ground, row));
    return SignSystem::of(ground, std::move(members));
}

} // namespace

Arrangement crossing_lines() {
    return Arrangement(ArrangementKind::central, 2,
                       {{"h1", {Rational(1), Rational(0)}, Rational(0)},
                        {"h2", {Rational(0), Rational(1)}, Rational(0)}});
}

SignSystem crossing_pair() {
    return parse_all({"h1", "h2"},
                     {"++", "+-", "+0", "-+", "--", "-0", "0+", "0-", "00"});
}

Arrangement parallel_lines() {
    // a: x = 0 (positive side x < 0); b: y = 1 (below positive); c: y = -1.
    return Arrangement(ArrangementKind::affine, 2,
                       {{"a", {Rational(-1), Rational(0)}, Rational(0)},
                        {"b", {Rational(0), Rational(-1)}, Rational(-1)},
                        {"c", {Rational(0), Rational(-1)}, Rational(1)}});
}

SignSystem parallel_demo() {
    // Vertical position on a is free; b and c are crossed top to bottom.
    std::vector<std::string> rows;
    for (const char sa : {'+', '-', '0'})
        for (const auto* bc : {"--", "0-", "+-", "+0", "++"})
            rows.push_back(std::string(1, sa) + bc);
    return parse_all({"a", "b", "c"}, rows);
}

Arrangement five_lines() {
    return Arrangement(ArrangementKind::affine, 2,
                       {{"h1", {Rational(0), Rational(-1)}, Rational(-1)},
                        {"h2", {Rational(-1), Rational(-1)}, Rational(1)},
                        {"h3", {Rational(-1), Rational(0)}, Rational(0)},
                        {"h4", {Rational(-1), Rational(0)}, Rational(-3, 2)},
                        {"h5", {Rational(-1), Rational(1)}, Rational(-1)}});
}

} // namespace svcalc::fixtures
