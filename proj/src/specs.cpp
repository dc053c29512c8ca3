#include "delpezzo/specs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace delpezzo {

namespace {

std::int64_t parse_int(const std::string& text) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    if (used != text.size())
        throw std::invalid_argument("trailing characters in integer: '" +
                                    text + "'");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

Surface parse_surface(const std::string& spec) {
    if (spec == "P2")
        return Surface::projective_plane();
    if (spec == "P1xP1")
        return Surface::quadric_product();
    if (spec.rfind("dP:", 0) == 0) {
        const std::int64_t n = parse_int(spec.substr(3));
        if (n < 1 || n > 8)
            throw std::invalid_argument("blow-up count must lie in 1..8: '" +
                                        spec + "'");
        return Surface::blow_up(static_cast<int>(n));
    }
    throw std::invalid_argument("unknown surface spec '" + spec +
                                "' (expected P2, P1xP1, or dP:<n>)");
}

CurveClass parse_class(const Surface& s, const std::string& spec) {
    CurveClass c;
    switch (s.kind()) {
    case SurfaceKind::projective_plane:
        c.coords = {parse_int(spec)};
        break;
    case SurfaceKind::quadric_product: {
        const auto parts = split(spec, ',');
        if (parts.size() != 2)
            throw std::invalid_argument("class on P1xP1 must be 'a,b'");
        c.coords = {parse_int(parts[0]), parse_int(parts[1])};
        break;
    }
    case SurfaceKind::blow_up: {
        const auto halves = split(spec, ';');
        if (halves.size() != 2)
            throw std::invalid_argument(
                "class on a blow-up must be 'd;m1,...,mn'");
        c.coords.push_back(parse_int(halves[0]));
        const auto parts = split(halves[1], ',');
        if (static_cast<int>(parts.size()) != s.blown_up_points())
            throw std::invalid_argument(
                "expected " + std::to_string(s.blown_up_points()) +
                " multiplicities");
        for (const auto& p : parts)
            c.coords.push_back(parse_int(p));
        break;
    }
    }
    return c;
}

std::string class_spec(const Surface& s, const CurveClass& c) {
    std::ostringstream out;
    switch (s.kind()) {
    case SurfaceKind::projective_plane:
        out << c.coords[0];
        break;
    case SurfaceKind::quadric_product:
        out << c.coords[0] << "," << c.coords[1];
        break;
    case SurfaceKind::blow_up:
        out << c.coords[0] << ";";
        for (int i = 1; i < c.rank(); ++i)
            out << (i > 1 ? "," : "") << c.coords[i];
        break;
    }
    return out.str();
}

BettiInput read_betti_csv(std::istream& in) {
    BettiInput input;
    std::string line;
    if (!std::getline(in, line) || line != "k,m,b")
        throw std::invalid_argument("Betti CSV must start with header 'k,m,b'");
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto parts = split(line, ',');
        if (parts.size() != 3)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected 'k,m,b'");
        const int k = static_cast<int>(parse_int(parts[0]));
        const int m = static_cast<int>(parse_int(parts[1]));
        if (k < 0 || m < 0)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": indices must be nonnegative");
        Int value;
        if (value.set_str(parts[2], 10) != 0)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": bad integer '" + parts[2] + "'");
        input.b[{k, m}] = value;
        input.k_max = std::max(input.k_max, k);
        input.m_max = std::max(input.m_max, m);
    }
    return input;
}

void write_betti_csv(std::ostream& out, const BettiInput& input) {
    out << "k,m,b\n";
    for (const auto& [key, value] : input.b)
        out << key.first << "," << key.second << "," << value.get_str()
            << "\n";
}

} // namespace delpezzo
