#pragma once

#include <optional>
#include <string>

#include "sea/effect_algebra.hpp"

namespace sea {

/// Positioned syntax/consistency error in an algebra file.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_number(line) {}
    int line_number;
};

/// Parsed algebra file: a finite effect algebra candidate and, when `prod`
/// lines are present, a total product table.
///
/// Grammar (whitespace-insensitive, '#' comments):
///   algebra NAME
///   elements e1 e2 ...        # must include 0 and 1
///   sum a b = c               # zero or more
///   prod a b = c              # optional; must be total if present
///
/// Loading adds 0 ⊕ x = x for every x and closes `sum` under symmetry;
/// conflicting duplicates are reported with their line number.
struct AlgebraFile {
    std::string name;
    FiniteEffectAlgebra algebra;
    std::optional<SeqProductTable> product;
};

AlgebraFile parse_algebra(const std::string& text);

/// Canonical form: elements in declaration order, one `sum` line per
/// unordered pair (implicit zero sums omitted), `prod` lines row-major.
/// parse(serialize(x)) reproduces x exactly.
std::string serialize_algebra(const AlgebraFile& file);

AlgebraFile load_algebra_file(const std::string& path);

}  // namespace sea
