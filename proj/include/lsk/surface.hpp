#pragma once

// The compact genus-g surface with one boundary circle, presented as a ribbon
// graph with a single vertex and 2g loops. Dually, the loops are the cut arcs
// e1..e2g; cutting S along them leaves one disk. A letter +k / -k records a
// crossing of arc k in the positive / negative direction, so a closed curve
// is a cyclic word in the free group on 2g generators.
//
// Loop 2i-1 is the handle generator a_i, loop 2i is b_i. Around the vertex the
// 4g half-edges sit in counterclockwise order
//
//   a1 b1 A1 B1  a2 b2 A2 B2  ...  ag bg Ag Bg
//
// (capitals are inverses), which yields exactly one boundary component.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lsk/error.hpp"

namespace lsk {

using Letter = int;
using Word = std::vector<Letter>;

class SurfaceSpec {
 public:
  explicit SurfaceSpec(int genus) : genus_(genus) {
    if (genus < 2) {
      throw Error(ErrorKind::GenusTooSmall, "genus must be at least 2, got " + std::to_string(genus));
    }
  }

  int genus() const noexcept { return genus_; }
  int num_arcs() const noexcept { return 2 * genus_; }
  int num_half_edges() const noexcept { return 4 * genus_; }

  bool valid_letter(Letter l) const noexcept { return l != 0 && std::abs(l) <= num_arcs(); }

  /// Counterclockwise slot of the half-edge that leaves the vertex along `l`.
  int slot(Letter l) const noexcept {
    int k = std::abs(l);
    int handle = (k - 1) / 2;
    int is_b = (k % 2 == 0) ? 1 : 0;
    int inv = l < 0 ? 2 : 0;
    return 4 * handle + is_b + inv;
  }

  Letter letter_at_slot(int s) const noexcept {
    int handle = s / 4;
    int r = s % 4;
    Letter base = 2 * handle + 1 + (r % 2);
    return r >= 2 ? -base : base;
  }

  /// Counterclockwise distance from half-edge `from` to half-edge `to`, in [0, 4g).
  int ccw(Letter from, Letter to) const noexcept {
    int d = slot(to) - slot(from);
    return d < 0 ? d + num_half_edges() : d;
  }

  /// Arc identifiers e1..e2g.
  std::vector<std::string> cut_arcs() const {
    std::vector<std::string> out;
    for (int k = 1; k <= num_arcs(); ++k) out.push_back("e" + std::to_string(k));
    return out;
  }

  /// Arc-endpoint labels around the cut-open disk, counterclockwise.
  std::vector<std::string> boundary_order() const {
    std::vector<std::string> out;
    for (int s = 0; s < num_half_edges(); ++s) {
      Letter l = letter_at_slot(s);
      out.push_back("e" + std::to_string(std::abs(l)) + (l > 0 ? "+" : "-"));
    }
    return out;
  }

  /// The word read along the boundary circle: prod_i a_i B_i A_i b_i.
  Word boundary_word() const {
    Word w;
    Letter cur = 1;
    for (int step = 0; step < num_half_edges(); ++step) {
      w.push_back(cur);
      cur = letter_at_slot((slot(-cur) + 1) % num_half_edges());
    }
    return w;
  }

  /// Number of boundary circles of the ribbon graph (1 for this surface).
  int count_boundary_components() const {
    std::vector<bool> used(static_cast<std::size_t>(num_half_edges()), false);
    int components = 0;
    for (int s = 0; s < num_half_edges(); ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      ++components;
      int cur = s;
      while (!used[static_cast<std::size_t>(cur)]) {
        used[static_cast<std::size_t>(cur)] = true;
        cur = (slot(-letter_at_slot(cur)) + 1) % num_half_edges();
      }
    }
    return components;
  }

  /// Euler characteristic of the ribbon graph: one vertex, 2g edges.
  int euler_characteristic() const noexcept { return 1 - num_arcs(); }

  friend bool operator==(const SurfaceSpec& a, const SurfaceSpec& b) { return a.genus_ == b.genus_; }

 private:
  int genus_;
};

inline void require_same_surface(const SurfaceSpec& a, const SurfaceSpec& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::SurfaceMismatch,
                "genus " + std::to_string(a.genus()) + " vs genus " + std::to_string(b.genus()));
  }
}

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

/// Free reduction followed by cyclic reduction.
inline Word cyclically_reduce(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

/// Index of the lexicographically least rotation (Booth's algorithm).
inline std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = w[j % n];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

inline Word rotate(const Word& w, std::size_t start) {
  Word out;
  out.reserve(w.size());
  for (std::size_t t = 0; t < w.size(); ++t) out.push_back(w[(start + t) % w.size()]);
  return out;
}

/// Canonical representative of an unoriented cyclic word: least rotation of w or w^-1.
inline Word canonical_cyclic(const Word& w) {
  if (w.empty()) return w;
  Word fwd = rotate(w, least_rotation(w));
  Word inv = inverse(w);
  Word bwd = rotate(inv, least_rotation(inv));
  return bwd < fwd ? bwd : fwd;
}

/// Smallest p dividing |w| with w invariant under rotation by p.
inline std::size_t cyclic_period(const Word& w) {
  const std::size_t n = w.size();
  // prefix function of w; the period of the string w is n - pi[n-1]
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  if (n == 0) return 0;
  std::size_t p = n - pi[n - 1];
  return (n % p == 0) ? p : n;
}

/// "e1+ e3- e2+" token form.
inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += 'e';
    out += std::to_string(std::abs(w[i]));
    out += w[i] > 0 ? '+' : '-';
  }
  return out;
}

inline Word parse_word(std::string_view text, const SurfaceSpec& surface) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 3 || tok.front() != 'e' || (tok.back() != '+' && tok.back() != '-')) {
      throw Error(ErrorKind::InvalidInput, "bad crossing token '" + tok + "', expected e<k>+ or e<k>-");
    }
    std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
      throw Error(ErrorKind::InvalidInput, "bad arc index in '" + tok + "'");
    }
    int k = std::stoi(digits);
    Letter l = tok.back() == '+' ? k : -k;
    if (!surface.valid_letter(l)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "arc e" + digits + " does not exist on the genus " + std::to_string(surface.genus()) + " surface");
    }
    w.push_back(l);
  }
  return w;
}

}  // namespace lsk
