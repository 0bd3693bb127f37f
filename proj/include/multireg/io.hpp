#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multireg/presentation.hpp"

namespace multireg {

struct ParseError : std::runtime_error {
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

/// Contents of a .mr file: a ring and either an ideal (the module is S/I) or
/// a presentation matrix.
struct ModuleInput {
  enum class Kind { Ideal, Matrix };
  Kind kind;
  RingSpec ring;
  std::vector<Poly> ideal;
  Presentation module;
};

/// Parses the .mr grammar:
///   ring p=<prime> n=[n1,...,nr]
///   ideal <poly>; <poly>; ...
/// or
///   module rows=[(..),..] [cols=[(..),..]] matrix [[..],[..]]
/// '#' starts a comment. `prime_override` replaces the p given in the file.
ModuleInput parse_input(std::string_view text, std::optional<std::uint32_t> prime_override = {});

/// Canonical text form; parse_input(print_input(x)) reproduces x.
std::string print_input(const ModuleInput& in);

Poly parse_poly(std::string_view text, const RingSpec& ring);
/// "1,2" or "(1,2)".
MultiDegree parse_degree(std::string_view text);
/// "a,b:c,d".
DegreeBox parse_box(std::string_view text);

} // namespace multireg
