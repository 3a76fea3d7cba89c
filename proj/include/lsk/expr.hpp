#pragma once

// Curve expressions:
//
//   expr  := atom
//          | "T(" expr ")" power? "(" expr ")"     twist of the second about the first
//          | "psi(" expr ")"
//          | "phi[" int "](" expr ")"
//   atom  := ("a" | "b") int | "c" | "B[" int "," int "]"
//   power := "^" "-"? int
//
// Whitespace between tokens is ignored. Every input either parses or yields
// a SyntaxError carrying the byte offset and the set of tokens expected there.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/mapping_class.hpp"

namespace lsk {

struct Expr {
  enum class Kind { Alpha, Beta, C, BetaGN, Twist, Psi, Phi };

  Kind kind = Kind::C;
  long index = 0;   // a_i / b_i / first index of B[g,n]
  long n = 0;       // B[g,n] and phi[n]
  long power = 1;   // T(.)^power
  std::size_t offset = 0;
  std::vector<Expr> args;  // Twist: {about, target}; Psi, Phi: {target}

  std::string to_string() const {
    switch (kind) {
      case Kind::Alpha: return "a" + std::to_string(index);
      case Kind::Beta: return "b" + std::to_string(index);
      case Kind::C: return "c";
      case Kind::BetaGN: return "B[" + std::to_string(index) + "," + std::to_string(n) + "]";
      case Kind::Twist:
        return "T(" + args[0].to_string() + ")" + (power != 1 ? "^" + std::to_string(power) : "") + "(" +
               args[1].to_string() + ")";
      case Kind::Psi: return "psi(" + args[0].to_string() + ")";
      case Kind::Phi: return "phi[" + std::to_string(n) + "](" + args[0].to_string() + ")";
    }
    return "?";
  }
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& found)
      : Error(ErrorKind::SyntaxError, describe(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::set<std::string>& expected, const std::string& found) {
    std::string s = "at offset " + std::to_string(offset) + ", found " + found + ", expected one of";
    for (const auto& e : expected) s += " '" + e + "'";
    return s;
  }

  std::size_t offset_;
  std::set<std::string> expected_;
};

namespace detail {

class ExprParser {
 public:
  ExprParser(std::string_view text, int genus) : s_(text), genus_(genus) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string found() const {
    if (pos_ >= s_.size()) return "end of input";
    return "'" + std::string(1, s_[pos_]) + "'";
  }

  [[noreturn]] void fail(std::set<std::string> expected) const { throw SyntaxError(pos_, std::move(expected), found()); }

  bool peek(char ch) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) fail({std::string(1, ch)});
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail({"integer"});
    if (pos_ - start > 9) {
      pos_ = start;
      fail({"integer below 10^9"});
    }
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  void check_index(long i, std::size_t at, const std::string& what) const {
    if (i < 1 || i > genus_) {
      throw Error(ErrorKind::IndexOutOfRange, what + std::to_string(i) + " at offset " + std::to_string(at) +
                                                  " is outside 1.." + std::to_string(genus_));
    }
  }

  Expr expr() {
    skip_ws();
    const std::size_t at = pos_;
    if (depth_ >= kMaxDepth) fail({"nesting depth below " + std::to_string(kMaxDepth)});
    ++depth_;
    Expr e = expr_body(at);
    --depth_;
    return e;
  }

  Expr expr_body(std::size_t at) {
    const std::string id = ident();
    Expr e;
    e.offset = at;
    if (id == "a" || id == "b") {
      e.kind = id == "a" ? Expr::Kind::Alpha : Expr::Kind::Beta;
      std::size_t num_at = pos_;
      e.index = integer(false);
      check_index(e.index, num_at, id);
      return e;
    }
    if (id == "c") {
      e.kind = Expr::Kind::C;
      return e;
    }
    if (id == "B") {
      e.kind = Expr::Kind::BetaGN;
      expect('[');
      skip_ws();
      std::size_t num_at = pos_;
      e.index = integer(false);
      if (e.index != genus_) {
        throw Error(ErrorKind::IndexOutOfRange, "B[" + std::to_string(e.index) + ",n] at offset " +
                                                    std::to_string(num_at) + " must use the genus " +
                                                    std::to_string(genus_));
      }
      expect(',');
      e.n = integer(false);
      expect(']');
      return e;
    }
    if (id == "T") {
      e.kind = Expr::Kind::Twist;
      expect('(');
      Expr about = expr();
      expect(')');
      if (peek('^')) {
        ++pos_;
        e.power = integer(true);
      }
      if (!peek('(')) fail({"(", "^"});
      ++pos_;
      Expr target = expr();
      expect(')');
      e.args.push_back(std::move(about));
      e.args.push_back(std::move(target));
      return e;
    }
    if (id == "psi") {
      e.kind = Expr::Kind::Psi;
      expect('(');
      e.args.push_back(expr());
      expect(')');
      return e;
    }
    if (id == "phi") {
      e.kind = Expr::Kind::Phi;
      expect('[');
      e.n = integer(false);
      expect(']');
      expect('(');
      e.args.push_back(expr());
      expect(')');
      return e;
    }
    pos_ = at;
    fail({"a", "b", "c", "B[", "T(", "psi(", "phi["});
  }

  static constexpr int kMaxDepth = 200;

  std::string_view s_;
  int genus_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

inline Expr parse_expression(std::string_view input, int genus) {
  if (genus < 2) throw Error(ErrorKind::GenusTooSmall, "genus must be at least 2");
  return detail::ExprParser(input, genus).parse();
}

inline Curve evaluate(const Expr& e, const StandardCurveSystem& sys) {
  switch (e.kind) {
    case Expr::Kind::Alpha: return sys.alpha(static_cast<int>(e.index));
    case Expr::Kind::Beta: return sys.beta(static_cast<int>(e.index));
    case Expr::Kind::C: return sys.c();
    case Expr::Kind::BetaGN: return beta_gn(sys, e.n);
    case Expr::Kind::Twist: return dehn_twist(evaluate(e.args[1], sys), evaluate(e.args[0], sys), e.power);
    case Expr::Kind::Psi: return apply_word(monodromy_psi(sys), evaluate(e.args[0], sys));
    case Expr::Kind::Phi: return apply_word(monodromy_phi(sys, e.n), evaluate(e.args[0], sys));
  }
  throw Error(ErrorKind::InvalidInput, "unknown expression kind");
}

inline Curve evaluate(std::string_view text, const StandardCurveSystem& sys) {
  return evaluate(parse_expression(text, sys.genus()), sys);
}

}  // namespace lsk
