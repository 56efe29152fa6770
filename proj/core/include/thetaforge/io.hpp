#pragma once

#include <stdexcept>
#include <string>

#include "thetaforge/polynomial.hpp"

namespace thetaforge {

enum class OutputFormat { text, json, latex };

OutputFormat parse_output_format(const std::string& name);

/// Raised on malformed polynomial input; `position` is the 0-based
/// offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Canonical text rendering, e.g. "c[1] - 2*t[1]". Terms appear in the
/// canonical monomial order, so output is stable across runs.
std::string to_text(const Polynomial& f);

/// LaTeX rendering, e.g. "c_{1} - 2t_{1}".
std::string to_latex(const Polynomial& f);

/// JSON rendering: {"terms":[{"c":[[p,e],...],"t":[[i,e],...],"coeff":"..."}]}
/// with terms in canonical order.
std::string to_json(const Polynomial& f);

std::string format(const Polynomial& f, OutputFormat fmt);

/// Inverse of to_text. Grammar: term ('+'|'-') term ..., where
/// term = [coeff ['*']] factor ('*' factor)* and factor = c[p] | t[i]
/// | factor^e.
Polynomial parse_text(const std::string& input);

/// Inverse of to_json.
Polynomial parse_json(const std::string& input);

}  // namespace thetaforge
