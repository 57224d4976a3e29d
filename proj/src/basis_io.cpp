#include "homtoric/basis_io.hpp"

#include "homtoric/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace homtoric {

namespace {

std::string_view trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

long long parse_int(std::string_view s, const char* what) {
    s = trim(s);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
    return value;
}

Variable parse_factor(std::string_view tok, const ToricSystem& sys) {
    if (tok.front() == '[') {
        if (tok.back() != ']') throw ParseError("unterminated map literal '" + std::string(tok) + "'");
        VertexMap map;
        std::string_view body = tok.substr(1, tok.size() - 2);
        while (!body.empty()) {
            auto comma = body.find(',');
            map.push_back(static_cast<Vertex>(parse_int(body.substr(0, comma), "map entry")));
            if (comma == std::string_view::npos) break;
            body.remove_prefix(comma + 1);
        }
        auto i = sys.homs().index_of(map);
        if (!i) throw ParseError("map " + std::string(tok) + " is not a homomorphism of this system");
        return static_cast<Variable>(*i);
    }
    long long v = parse_int(tok, "variable");
    if (v < 0 || static_cast<std::size_t>(v) >= sys.variable_count())
        throw ParseError("variable " + std::to_string(v) + " out of range");
    return static_cast<Variable>(v);
}

}  // namespace

ExponentVector parse_monomial(std::string_view text, const ToricSystem& sys) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty monomial");
    std::vector<Variable> factors;
    while (!text.empty()) {
        auto star = text.find('*');
        std::string_view tok = trim(text.substr(0, star));
        if (tok.empty()) throw ParseError("empty factor");
        long long power = 1;
        if (auto caret = tok.rfind('^'); caret != std::string_view::npos && tok.back() != ']') {
            power = parse_int(tok.substr(caret + 1), "exponent");
            if (power < 1 || power > 1000) throw ParseError("exponent out of range");
            tok = trim(tok.substr(0, caret));
        }
        Variable x = parse_factor(tok, sys);
        factors.insert(factors.end(), static_cast<std::size_t>(power), x);
        if (star == std::string_view::npos) break;
        text.remove_prefix(star + 1);
    }
    return ExponentVector(std::move(factors));
}

OrientedBasis read_basis(std::istream& in, const ToricSystem& sys) {
    OrientedBasis out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string_view body = trim(line);
        if (body.empty()) continue;
        try {
            // the separator is a '-' outside brackets
            std::size_t split = std::string_view::npos;
            int depth = 0;
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (body[i] == '[') ++depth;
                if (body[i] == ']') --depth;
                if (body[i] == '-' && depth == 0) {
                    if (split != std::string_view::npos) throw ParseError("more than one '-'");
                    split = i;
                }
            }
            if (split == std::string_view::npos) throw ParseError("expected '<monomial> - <monomial>'");
            out.elements.emplace_back(parse_monomial(body.substr(0, split), sys),
                                      parse_monomial(body.substr(split + 1), sys));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

OrientedBasis parse_basis(std::string_view text, const ToricSystem& sys) {
    std::istringstream in{std::string(text)};
    return read_basis(in, sys);
}

OrientedBasis load_basis(const std::string& path, const ToricSystem& sys) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open basis file '" + path + "'");
    return read_basis(in, sys);
}

std::string format_monomial(const ExponentVector& m, const ToricSystem& sys, bool maps) {
    if (!maps) return to_string(m);
    std::string out;
    for (Variable x : m.factors()) {
        if (!out.empty()) out += '*';
        out += map_literal(sys.homs()[x]);
    }
    return out;
}

void write_basis(std::ostream& out, const OrientedBasis& basis, const ToricSystem& sys,
                 const BasisWriteOptions& options) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Binomial& b = basis.elements[i];
        out << format_monomial(b.plus(), sys, options.maps) << " - " << format_monomial(b.minus(), sys, options.maps);
        if (i < options.tags.size() && !options.tags[i].empty()) out << "  # " << options.tags[i];
        out << '\n';
    }
}

}  // namespace homtoric
