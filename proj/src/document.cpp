#include "fri/document.hpp"

#include <utility>
#include <vector>

#include "fri/errors.hpp"

namespace fri {
namespace {

using nlohmann::json;

// DOM builder that keeps every number as its source literal.
class LiteralPreservingSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_integer(number_integer_t val) {
    string_t s = std::to_string(val);
    return Base::string(s);
  }
  bool number_unsigned(number_unsigned_t val) {
    string_t s = std::to_string(val);
    return Base::string(s);
  }
  bool number_float(number_float_t /*val*/, const string_t& literal) {
    string_t s = literal;
    return Base::string(s);
  }
};

json parse_json(std::string_view text) {
  json root;
  LiteralPreservingSax sax(root);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!root.is_object()) throw InputError("document must be an object");
  return root;
}

Rational literal(const json& value, const std::string& where) {
  if (!value.is_string()) throw InputError(where + ": expected a number literal");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

std::vector<Rational> literal_array(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(arr.size());
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(literal(arr[k], std::string(key) + "[" + std::to_string(k + 1) + "]"));
  return out;
}

std::optional<std::string> optional_string(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  if (!doc.at(key).is_string()) throw InputError(std::string("\"") + key + "\" must be a string");
  return doc.at(key).get<std::string>();
}

}  // namespace

ProblemDocument parse_problem_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.contains("A")) throw InputError("missing key \"A\"");
  const json& rows = doc.at("A");
  if (!rows.is_array()) throw InputError("\"A\" must be an array of rows");
  std::vector<std::vector<Rational>> a;
  a.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array())
      throw InputError("A row " + std::to_string(i + 1) + " must be an array");
    std::vector<Rational> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      row.push_back(literal(rows[i][j],
                            "A[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
    a.push_back(std::move(row));
  }
  return ProblemDocument{Problem(a, literal_array(doc, "b")), optional_string(doc, "name"),
                         optional_string(doc, "comment")};
}

Problem parse_problem(std::string_view text) { return parse_problem_document(text).problem; }

Assignment parse_assignment(std::string_view text) {
  return Assignment(literal_array(parse_json(text), "x"));
}

std::string render_problem(const Problem& p, const std::optional<std::string>& name) {
  nlohmann::ordered_json doc;
  if (name) doc["name"] = *name;
  doc["A"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& v : p.row(i)) row.push_back(to_exact_string(v));
    doc["A"].push_back(std::move(row));
  }
  doc["b"] = nlohmann::ordered_json::array();
  for (const auto& v : p.requirements()) doc["b"].push_back(to_exact_string(v));
  return doc.dump(2);
}

std::string render_assignment(const Assignment& x) {
  nlohmann::ordered_json doc;
  doc["x"] = nlohmann::ordered_json::array();
  for (const auto& v : x) doc["x"].push_back(to_exact_string(v));
  return doc.dump();
}

nlohmann::ordered_json scalar_json(const Rational& value) {
  return {{"exact", to_exact_string(value)}, {"approx", to_approx_string(value)}};
}

nlohmann::ordered_json vector_json(const Assignment& x) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : x) arr.push_back(scalar_json(v));
  return arr;
}

}  // namespace fri
