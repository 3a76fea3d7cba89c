#pragma once

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>

#include "lsk/error.hpp"

namespace lsk {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly from_coefficients(const std::map<int, std::int64_t>& coeffs) {
    LaurentPoly p;
    for (auto [e, c] : coeffs) p.add(e, c);
    return p;
  }

  void add(int exponent, std::int64_t c) {
    if (c == 0) return;
    auto& slot = terms_[exponent];
    slot += c;
    if (slot == 0) terms_.erase(exponent);
  }

  std::int64_t coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
  }

  const std::map<int, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const { return terms_.begin()->first; }
  int max_exponent() const { return terms_.rbegin()->first; }

  std::int64_t value_at_one() const {
    std::int64_t s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
  }

  LaurentPoly shifted(int by) const {
    LaurentPoly p;
    for (auto [e, c] : terms_) p.terms_[e + by] = c;
    return p;
  }

  LaurentPoly negated() const {
    LaurentPoly p;
    for (auto [e, c] : terms_) p.terms_[e] = -c;
    return p;
  }

  /// Representative up to units +-t^k: lowest exponent 0, top coefficient positive.
  LaurentPoly normalized() const {
    if (is_zero()) return *this;
    LaurentPoly p = shifted(-min_exponent());
    return p.terms_.rbegin()->second < 0 ? p.negated() : p;
  }

  /// Delta(t) = t^span Delta(1/t).
  bool is_palindromic() const {
    if (is_zero()) return true;
    const int lo = min_exponent(), hi = max_exponent();
    for (auto [e, c] : terms_) {
      if (coefficient(lo + hi - e) != c) return false;
    }
    return true;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (auto [ea, ca] : a.terms_)
      for (auto [eb, cb] : b.terms_) p.add(ea + eb, ca * cb);
    return p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p = a;
    for (auto [e, c] : b.terms_) p.add(e, c);
    return p;
  }

  /// "t^4 - t^3 + t^2 - t + 1", highest exponent first.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (e == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag);
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<int, std::int64_t> terms_;
};

/// Parse a signed sum of monomials in t, e.g. "t^4 - t^3 + t^2 - t + 1" or
/// "t - 1 + t^-1". Whitespace is ignored.
inline LaurentPoly parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&](std::size_t at, const std::string& what) {
    throw Error(ErrorKind::SyntaxError, "polynomial offset " + std::to_string(at) + ": " + what);
  };
  if (s.empty()) fail(0, "empty polynomial");
  LaurentPoly p;
  std::size_t i = 0;
  auto read_int = [&](std::int64_t& out) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    if (i - start > 12) fail(start, "number too large");
    out = std::stoll(s.substr(start, i - start));
    return true;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(i, "expected '+' or '-'");
    }
    first = false;
    std::int64_t coeff = 1;
    bool has_coeff = read_int(coeff);
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail(i, "unexpected '*'");
      ++i;
    }
    int exponent = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::int64_t e = 0;
        if (!read_int(e)) fail(i, "expected exponent");
        exponent = static_cast<int>(esign * e);
      }
    } else if (!has_coeff) {
      fail(i, "expected coefficient or 't'");
    }
    p.add(exponent, sign * coeff);
  }
  return p;
}

}  // namespace lsk
