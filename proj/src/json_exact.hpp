#pragma once

// JSON parsing that keeps floating-point literals as their source text, so
// "0.1" in an instructor's file becomes exactly 1/10 rather than a double.

#include <string>
#include <string_view>

#include <json.hpp>

namespace lpviz::detail {

class ExactNumberSax {
 public:
  using json = nlohmann::json;

  explicit ExactNumberSax(json& root) : dom_(root, true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return dom_.number_unsigned(v); }
  bool number_float(json::number_float_t, const json::string_t& raw) {
    json::string_t text = raw;
    return dom_.string(text);
  }
  bool string(json::string_t& v) { return dom_.string(v); }
  bool binary(json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(json::string_t& v) { return dom_.key(v); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t pos, const std::string& token, const Exception& ex) {
    return dom_.parse_error(pos, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<json> dom_;
};

/// Throws nlohmann::json::parse_error on malformed input.
inline nlohmann::json parse_json_exact(std::string_view text) {
  nlohmann::json root;
  ExactNumberSax sax(root);
  nlohmann::json::sax_parse(text.begin(), text.end(), &sax);
  return root;
}

}  // namespace lpviz::detail
