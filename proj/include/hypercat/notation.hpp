#pragma once

// Compact symbol notation shared by subdigon serialization and Raney strings:
// naturals 0-9 are single digits, larger ones are written "[12]".

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercat {

using Symbol = std::uint32_t;

/// Parse failure with the byte offset where it happened.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

inline std::string symbol_text(Symbol s) {
  if (s <= 9) return std::string(1, static_cast<char>('0' + s));
  return "[" + std::to_string(s) + "]";
}

/// Reads one compact symbol at `pos` and advances past it.
inline Symbol read_symbol(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
  const char ch = text[pos];
  if (std::isdigit(static_cast<unsigned char>(ch))) {
    ++pos;
    return static_cast<Symbol>(ch - '0');
  }
  if (ch != '[') throw ParseError(std::string("unexpected character '") + ch + "'", pos);
  const auto start = pos;
  ++pos;
  std::uint64_t value = 0;
  std::size_t digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
    if (value > UINT32_MAX) throw ParseError("symbol too large", start);
    ++pos;
    ++digits;
  }
  if (digits == 0 || pos >= text.size() || text[pos] != ']') {
    throw ParseError("malformed bracketed symbol", start);
  }
  ++pos;
  return static_cast<Symbol>(value);
}

}  // namespace hypercat
