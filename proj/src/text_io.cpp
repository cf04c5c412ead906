#include "hopf/text_io.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hopf {

std::string lincomb_text(const Lin& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    out += "*";
    out += b;
  }
  return out;
}

std::string paircomb_text(const Pair2& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    out += "*[";
    out += p.first;
    out += " | ";
    out += p.second;
    out += "]";
  }
  return out;
}

std::string lincomb_json(const Lin& a) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [b, c] : a.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = c.str();
    term["basis"] = b;
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

std::string paircomb_json(const Pair2& a) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [p, c] : a.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = c.str();
    term["left"] = p.first;
    term["right"] = p.second;
    arr.push_back(std::move(term));
  }
  return arr.dump();
}

Lin lincomb_from_json(const HopfAlgebra& alg, std::string_view text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw std::invalid_argument("expected a JSON array of {coeff, basis} terms");
  }
  Lin out;
  for (const auto& term : parsed) {
    if (!term.is_object() || !term.contains("coeff") || !term.contains("basis") ||
        !term["coeff"].is_string() || !term["basis"].is_string()) {
      throw std::invalid_argument("each term must be {\"coeff\": string, \"basis\": string}");
    }
    Rational c = Rational::parse(term["coeff"].get<std::string>());
    BasisKey b = alg.canonical(term["basis"].get<std::string>());
    out.add(b, c);
  }
  return out;
}

Lin lincomb_parse_input(const HopfAlgebra& alg, std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    return lincomb_from_json(alg, text);
  }
  return Lin::basis(alg.canonical(text));
}

}  // namespace hopf
