#pragma once

#include <bit>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "boolevo/bitstring.hpp"

namespace boolevo {

// Truth table of an n-variable Boolean function. bits[i] = f(x) where x is
// the n-bit big-endian expansion of i, so index 0 carries f(0,...,0). The
// same object doubles as a GA chromosome of length 2^n.
struct TruthTable {
  int n = 0;
  BitString bits;

  bool operator==(const TruthTable&) const = default;
};

inline std::size_t table_size(int n) {
  return std::size_t{1} << n;
}

inline TruthTable make_truth_table(int n, BitString bits) {
  if (n < 1) {
    throw std::invalid_argument("truth table: variable count must be positive");
  }
  if (bits.size() != table_size(n)) {
    throw std::invalid_argument("truth table: wrong length, expected 2^n bits");
  }
  for (Bit b : bits) {
    if (b > 1) {
      throw std::invalid_argument("truth table: entries must be 0 or 1");
    }
  }
  return TruthTable{n, std::move(bits)};
}

inline std::size_t hamming_weight(const TruthTable& t) {
  return hamming_weight(t.bits);
}

// Balanced <=> weight is exactly 2^(n-1) <=> W_f(0) == 0.
inline bool is_balanced(const TruthTable& t) {
  return hamming_weight(t.bits) == table_size(t.n) / 2;
}

namespace detail {

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace detail

// Hex text, leftmost digit covering input indices 0..3. Requires n >= 2.
inline TruthTable parse_truth_table_hex(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("truth table: empty input");
  }
  if (!std::has_single_bit(text.size())) {
    throw std::invalid_argument("truth table: hex length must be a power of two");
  }
  BitString bits;
  bits.reserve(text.size() * 4);
  for (char c : text) {
    const int v = detail::hex_value(c);
    if (v < 0) {
      throw std::invalid_argument(std::string("truth table: invalid character '") + c + "'");
    }
    for (int shift = 3; shift >= 0; --shift) {
      bits.push_back(static_cast<Bit>((v >> shift) & 1));
    }
  }
  const int n = std::countr_zero(bits.size());
  return TruthTable{n, std::move(bits)};
}

// Accepts either a binary string of length 2^n (n >= 1) or a hex string of
// length 2^n / 4 (n >= 2), leftmost character first. An all-0/1 string of
// valid binary length is read as binary; "6" and "0110" denote the same
// 2-variable table.
inline TruthTable parse_truth_table(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("truth table: empty input");
  }
  bool binary_chars = true;
  for (char c : text) {
    if (c != '0' && c != '1') {
      binary_chars = false;
      break;
    }
  }
  if (binary_chars && text.size() >= 2 && std::has_single_bit(text.size())) {
    BitString bits;
    bits.reserve(text.size());
    for (char c : text) {
      bits.push_back(static_cast<Bit>(c - '0'));
    }
    const int n = std::countr_zero(bits.size());
    return TruthTable{n, std::move(bits)};
  }
  if (binary_chars && text.size() >= 2) {
    throw std::invalid_argument("truth table: binary length must be a power of two");
  }
  return parse_truth_table_hex(text);
}

inline std::string format_truth_table(const TruthTable& t) {
  std::string s;
  s.reserve(t.bits.size());
  for (Bit b : t.bits) {
    s.push_back(b ? '1' : '0');
  }
  return s;
}

inline std::string format_truth_table_hex(const TruthTable& t) {
  if (t.n < 2) {
    throw std::invalid_argument("truth table: hex format requires n >= 2");
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(t.bits.size() / 4);
  for (std::size_t i = 0; i < t.bits.size(); i += 4) {
    const int nibble = (t.bits[i] << 3) | (t.bits[i + 1] << 2) | (t.bits[i + 2] << 1) | t.bits[i + 3];
    s.push_back(kDigits[nibble]);
  }
  return s;
}

}  // namespace boolevo
