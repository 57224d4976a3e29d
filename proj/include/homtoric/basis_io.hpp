#pragma once

#include "homtoric/monomial.hpp"
#include "homtoric/toric.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace homtoric {

/// Text form of a binomial list. One element per line, `<monomial> - <monomial>`,
/// leading side first. A monomial is a `*`-joined list of variable indices or map
/// literals such as `[0,1,0]` (0-based images); `x^k` repeats a factor. `#` starts a
/// comment. Throws ParseError with a line number on bad input.
OrientedBasis read_basis(std::istream& in, const ToricSystem& sys);
OrientedBasis parse_basis(std::string_view text, const ToricSystem& sys);
OrientedBasis load_basis(const std::string& path, const ToricSystem& sys);

/// Parses one monomial in the same syntax.
ExponentVector parse_monomial(std::string_view text, const ToricSystem& sys);

struct BasisWriteOptions {
    /// Write factors as map literals instead of indices.
    bool maps = false;
    /// Optional per-element comment, written after `#`.
    std::span<const std::string> tags;
};

void write_basis(std::ostream& out, const OrientedBasis& basis, const ToricSystem& sys,
                 const BasisWriteOptions& options = {});
std::string format_monomial(const ExponentVector& m, const ToricSystem& sys, bool maps);

}  // namespace homtoric
