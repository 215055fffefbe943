#include "lpviz/linear_program.hpp"

#include <regex>
#include <sstream>

#include "json_exact.hpp"
#include "lpviz/errors.hpp"

namespace lpviz {

namespace {

std::string default_name(VarId var) { return "x" + std::to_string(var + 1); }

Rational number_from_json(const nlohmann::json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      if (value.is_number_unsigned()) return Rational(Integer(value.get<std::uint64_t>()));
      return Rational(Integer(value.get<std::int64_t>()));
    }
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a number or \"p/q\" string");
}

Vector vector_from_json(const nlohmann::json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  Vector out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(number_from_json(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

LinearProgram lp_from_json(const nlohmann::json& root) {
  if (!root.is_object()) throw ParseError("LP file must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "A" && key != "b" && key != "c" && key != "variable_names") {
      throw ParseError("unknown key \"" + key + "\" (expected A, b, c, variable_names)");
    }
  }
  for (const char* key : {"A", "b", "c"}) {
    if (!root.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  }
  const auto& a_json = root.at("A");
  if (!a_json.is_array()) throw ParseError("A: expected an array of rows");
  Matrix A;
  for (std::size_t i = 0; i < a_json.size(); ++i) {
    A.push_back(vector_from_json(a_json[i], "A[" + std::to_string(i) + "]"));
  }
  Vector b = vector_from_json(root.at("b"), "b");
  Vector c = vector_from_json(root.at("c"), "c");
  std::vector<std::string> names;
  if (root.contains("variable_names")) {
    const auto& names_json = root.at("variable_names");
    if (!names_json.is_array()) throw ParseError("variable_names: expected an array of strings");
    for (const auto& v : names_json) {
      if (!v.is_string()) throw ParseError("variable_names: expected an array of strings");
      names.push_back(v.get<std::string>());
    }
  }
  return LinearProgram(std::move(A), std::move(b), std::move(c), std::move(names));
}

std::string format_term_coefficient(const Rational& magnitude) {
  if (magnitude == 1) return "";
  if (magnitude.is_integer()) return magnitude.to_string();
  return "(" + magnitude.to_string() + ")";
}

}  // namespace

LinearProgram::LinearProgram(Matrix A, Vector b, Vector c, std::vector<std::string> variable_names)
    : A_(std::move(A)), b_(std::move(b)), c_(std::move(c)), names_(std::move(variable_names)) {
  const int cols = n();
  if (cols < 1) throw DimensionMismatch("LP needs at least one decision variable");
  if (A_.size() != b_.size()) {
    throw DimensionMismatch("A has " + std::to_string(A_.size()) + " rows but b has " +
                            std::to_string(b_.size()) + " entries");
  }
  for (std::size_t i = 0; i < A_.size(); ++i) {
    if (static_cast<int>(A_[i].size()) != cols) {
      throw DimensionMismatch("row " + std::to_string(i + 1) + " of A has " +
                              std::to_string(A_[i].size()) + " entries but c has " +
                              std::to_string(cols));
    }
  }
  const auto total = static_cast<std::size_t>(variable_count());
  if (!names_.empty() && names_.size() != static_cast<std::size_t>(cols) && names_.size() != total) {
    throw DimensionMismatch("variable_names must list n or n+m names");
  }
  for (auto k = names_.size(); k < total; ++k) names_.push_back(default_name(static_cast<VarId>(k)));
}

std::string LinearProgram::name(VarId var) const {
  if (var == kArtificial) return "x0";
  if (var >= 0 && var < variable_count()) return names_[static_cast<std::size_t>(var)];
  return default_name(var);
}

Rational LinearProgram::objective(std::span<const Rational> x) const {
  Rational z;
  for (int j = 0; j < n(); ++j) z += c_[j] * x[j];
  return z;
}

Vector LinearProgram::slack_values(std::span<const Rational> x) const {
  Vector out(b_);
  for (int i = 0; i < m(); ++i) {
    for (int j = 0; j < n(); ++j) {
      if (!A_[i][j].is_zero()) out[i] -= A_[i][j] * x[j];
    }
  }
  return out;
}

Vector LinearProgram::full_solution(std::span<const Rational> x) const {
  Vector out(x.begin(), x.begin() + n());
  Vector slacks = slack_values(x);
  out.insert(out.end(), slacks.begin(), slacks.end());
  return out;
}

bool LinearProgram::is_feasible(std::span<const Rational> x) const {
  for (int j = 0; j < n(); ++j) {
    if (x[j].sign() < 0) return false;
  }
  for (const auto& s : slack_values(x)) {
    if (s.sign() < 0) return false;
  }
  return true;
}

LinearProgram LinearProgram::with_rows(const Matrix& rows, const Vector& rhs) const {
  Matrix A = A_;
  Vector b = b_;
  A.insert(A.end(), rows.begin(), rows.end());
  b.insert(b.end(), rhs.begin(), rhs.end());
  std::vector<std::string> names(names_.begin(), names_.begin() + n());
  return LinearProgram(std::move(A), std::move(b), c_, std::move(names));
}

LinearProgram lp_new(Matrix A, Vector b, Vector c) {
  return LinearProgram(std::move(A), std::move(b), std::move(c));
}

Vector EqualityForm::evaluate(std::span<const Rational> x) const {
  Vector out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Rational v = row.constant;
    for (std::size_t j = 0; j < row.coeffs.size(); ++j) v += row.coeffs[j] * x[j];
    out.push_back(std::move(v));
  }
  return out;
}

EqualityForm to_equality_form(const LinearProgram& lp) {
  EqualityForm form{lp, {}, {}};
  for (int i = 0; i < lp.m(); ++i) {
    SlackRow row;
    row.slack = lp.n() + i;
    row.constant = lp.b()[i];
    row.coeffs.reserve(lp.A()[i].size());
    for (const auto& a : lp.A()[i]) row.coeffs.push_back(-a);
    form.slack_indices.push_back(row.slack);
    form.rows.push_back(std::move(row));
  }
  return form;
}

LinearProgram parse_lp_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = detail::parse_json_exact(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return lp_from_json(root);
}

LinearProgram parse_lp_inline(std::string_view text) {
  static const std::regex fraction(R"((-?\d+/\d+))");
  nlohmann::json root = nlohmann::json::object();
  std::string source(text);
  std::stringstream parts(source);
  std::string part;
  while (std::getline(parts, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value in \"" + part + "\"");
    std::string key = part.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    std::string value = std::regex_replace(part.substr(eq + 1), fraction, "\"$1\"");
    try {
      root[key] = detail::parse_json_exact(value);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("malformed value for " + key + ": " + e.what());
    }
  }
  return lp_from_json(root);
}

std::string format_linear(const LinearProgram& lp, std::span<const Rational> coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const Rational& a = coeffs[j];
    if (a.is_zero()) continue;
    if (first) {
      if (a.sign() < 0) os << "-";
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    os << format_term_coefficient(abs(a)) << lp.name(static_cast<VarId>(j));
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string format_constraint(const LinearProgram& lp, int row) {
  return format_linear(lp, lp.A()[row]) + " <= " + lp.b()[row].to_string();
}

}  // namespace lpviz
