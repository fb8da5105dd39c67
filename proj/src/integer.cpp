#include "nilrank/integer.hpp"

#include <algorithm>
#include <cctype>

namespace nilrank {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  // mpz_set_str rejects a leading '+'.
  std::string normalized(text.front() == '+' ? text.substr(1) : text);
  return Integer(normalized, 10);
}

IntVec parse_integer_list(std::string_view text) {
  IntVec values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    values.push_back(parse_integer(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::string to_string(const IntVec& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ",";
    out += values[i].get_str();
  }
  return out + ")";
}

}  // namespace nilrank
