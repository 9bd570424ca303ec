#pragma once

// Problem and assignment files.
//
// Problem file:    {"A": [[lit, ...], ...], "b": [lit, ...], "name": "...", "comment": "..."}
// Assignment file: {"x": [lit, ...]}
//
// A literal is a string holding a decimal ("0.85"), a ratio ("13/15") or an
// integer, or a bare JSON number. Bare numbers are read from their source
// text, so 0.1 means exactly 1/10.

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "fri/core.hpp"

namespace fri {

struct ProblemDocument {
  Problem problem;
  std::optional<std::string> name;
  std::optional<std::string> comment;
};

// Throws InputError on malformed text, with the offending location.
ProblemDocument parse_problem_document(std::string_view text);
Problem parse_problem(std::string_view text);
Assignment parse_assignment(std::string_view text);

// Exact ratio strings throughout; parse_problem(render_problem(p)) == p.
std::string render_problem(const Problem& p, const std::optional<std::string>& name = {});
std::string render_assignment(const Assignment& x);

// {"exact": "13/15", "approx": "0.866666666667"}
nlohmann::ordered_json scalar_json(const Rational& value);
nlohmann::ordered_json vector_json(const Assignment& x);

}  // namespace fri
