#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "polyflow/multipoly.hpp"

namespace polyflow {

/// Syntax error with the offending position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*        (juxtaposition also multiplies)
//   factor   := coeff | var ('^' uint)? | '(' expr ')'
//   coeff    := rational | 'pi' ('^' int)?
//   var      := 'u' uint | 't' | 's' | 'w'
//   rational := int ('/' uint)?
// Named variables t, s, w are assigned the lowest variable indices not
// claimed by explicit u<k> references, in order of first appearance.
MultiPoly parse_poly(const std::string& text, int d);

// Comma-separated exprs sharing one variable assignment across the whole
// text. When d is not given it is inferred from the variables used.
PolyFamily parse_family(const std::string& text, std::optional<int> d = std::nullopt);

}  // namespace polyflow
