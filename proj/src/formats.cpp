#include "formats.hpp"

#include "errors.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace svcalc {

namespace {

// Significant lines of the text: comments stripped, blanks dropped,
// 1-based line numbers kept for error messages.
std::vector<std::pair<std::size_t, std::string>> significant_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        ++lineno;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos)
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.emplace_back(lineno, std::string(line.substr(first, last - first + 1)));
    }
    return out;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw input_error("line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

} // namespace

SignSystem parse_sign_system(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty())
        throw input_error("sign system file has no elements: line");
    auto [header_line, header] = lines.front();
    if (header.rfind("elements:", 0) != 0)
        fail(header_line, "expected an elements: line first");
    auto labels = split_words(std::string_view(header).substr(9));
    GroundSetPtr ground;
    try {
        ground = GroundSet::make(std::move(labels));
    } catch (const input_error& e) {
        fail(header_line, e.what());
    }

    std::vector<SignVector> members;
    std::map<std::uint64_t, std::size_t> first_seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [lineno, row] = lines[i];
        if (split_words(row).size() != 1)
            fail(lineno, "expected one sign row, got '" + row + "'");
        std::string_view body = row;
        if (body == "()") {
            if (ground->size() != 0)
                fail(lineno, "'()' is the vector over no elements; this file has " +
                                 std::to_string(ground->size()));
            body = "";
        }
        if (body.size() != ground->size())
            fail(lineno, "row '" + row + "' has " + std::to_string(body.size()) +
                             " signs for " + std::to_string(ground->size()) + " elements");
        SignVector v = SignVector::zero(ground);
        try {
            v = SignVector::parse(ground, body);
        } catch (const input_error& e) {
            fail(lineno, e.what());
        }
        auto [it, fresh] = first_seen.emplace(packed_key(v), lineno);
        if (!fresh)
            fail(lineno, "duplicate vector '" + row + "' (first at line " +
                             std::to_string(it->second) + ")");
        members.push_back(std::move(v));
    }
    return SignSystem::of(ground, std::move(members));
}

std::string format_sign_system(const SignSystem& s) {
    std::string out = "elements:";
    for (const auto& l : s.ground()->labels()) {
        out += ' ';
        out += l;
    }
    out += '\n';
    for (const auto& v : s.members()) {
        out += s.ground()->size() == 0 ? "()" : v.str();
        out += '\n';
    }
    return out;
}

Arrangement parse_arrangement(std::string_view text) {
    std::optional<std::size_t> dim;
    std::optional<ArrangementKind> kind;
    std::vector<Hyperplane> hyperplanes;
    for (const auto& [lineno, line] : significant_lines(text)) {
        if (line.rfind("dim:", 0) == 0) {
            if (!hyperplanes.empty())
                fail(lineno, "dim: must come before the hyperplanes");
            const auto words = split_words(std::string_view(line).substr(4));
            std::size_t value = 0;
            if (words.size() == 1 && !words[0].empty() && words[0].size() <= 3 &&
                words[0].find_first_not_of("0123456789") == std::string::npos)
                value = std::stoul(words[0]);
            if (value == 0)
                fail(lineno, "dim: needs one positive integer");
            dim = value;
            continue;
        }
        if (line.rfind("kind:", 0) == 0) {
            if (!hyperplanes.empty())
                fail(lineno, "kind: must come before the hyperplanes");
            const auto words = split_words(std::string_view(line).substr(5));
            if (words.size() == 1 && words[0] == "central")
                kind = ArrangementKind::central;
            else if (words.size() == 1 && words[0] == "affine")
                kind = ArrangementKind::affine;
            else
                fail(lineno, "kind: must be central or affine");
            continue;
        }
        if (!dim || !kind)
            fail(lineno, "dim: and kind: must come before the hyperplanes");
        // label : c1 ... cd : offset
        const auto c1 = line.find(':');
        const auto c2 = line.rfind(':');
        if (c1 == std::string::npos || c2 == c1)
            fail(lineno, "expected 'label : coefficients : offset'");
        const auto label_words = split_words(std::string_view(line).substr(0, c1));
        if (label_words.size() != 1)
            fail(lineno, "expected one label before the first ':'");
        const auto coeff_words =
            split_words(std::string_view(line).substr(c1 + 1, c2 - c1 - 1));
        if (coeff_words.size() != *dim)
            fail(lineno, "expected " + std::to_string(*dim) + " coefficients, got " +
                             std::to_string(coeff_words.size()));
        std::vector<Rational> normal;
        for (const auto& w : coeff_words) {
            auto r = parse_rational(w);
            if (!r)
                fail(lineno, "bad rational '" + w + "'");
            normal.push_back(std::move(*r));
        }
        const auto offset_words = split_words(std::string_view(line).substr(c2 + 1));
        if (offset_words.size() != 1)
            fail(lineno, "expected one offset after the last ':'");
        auto offset = parse_rational(offset_words[0]);
        if (!offset)
            fail(lineno, "bad rational '" + offset_words[0] + "'");
        hyperplanes.push_back({label_words[0], std::move(normal), std::move(*offset)});
    }
    if (!dim || !kind)
        throw input_error("arrangement file needs dim: and kind: lines");
    return Arrangement(*kind, *dim, std::move(hyperplanes));
}

std::string format_arrangement(const Arrangement& arr) {
    std::string out = "dim: " + std::to_string(arr.dim()) + "\n";
    out += arr.kind() == ArrangementKind::central ? "kind: central\n" : "kind: affine\n";
    for (const auto& h : arr.hyperplanes()) {
        out += h.label + " :";
        for (const auto& c : h.normal) {
            out += ' ';
            out += rational_str(c);
        }
        out += " : " + rational_str(h.offset) + "\n";
    }
    return out;
}

} // namespace svcalc
