#pragma once

// Rank-level Floer calculus over a field. Nothing here builds a chain
// complex: exact triangles are used only through the inequalities they force
// on ranks, and knot Floer groups of L-space knots only through the shape
// their Alexander polynomial dictates.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsk/curve.hpp"
#include "lsk/poly.hpp"

namespace lsk {

/// Bounds lo <= rank <= hi on an unknown rank; hi empty means unbounded.
struct RankInterval {
  std::int64_t lo = 0;
  std::optional<std::int64_t> hi;

  static RankInterval exactly(std::int64_t v) { return {v, v}; }
  static RankInterval at_least(std::int64_t v) { return {v, std::nullopt}; }
  static RankInterval unbounded() { return {0, std::nullopt}; }

  bool bounded() const noexcept { return hi.has_value(); }
  bool is_exact() const noexcept { return hi && *hi == lo; }
  bool contains(std::int64_t v) const noexcept { return v >= lo && (!hi || v <= *hi); }
  bool valid() const noexcept { return lo >= 0 && (!hi || *hi >= lo); }

  std::string to_string() const {
    return "[" + std::to_string(lo) + ", " + (hi ? std::to_string(*hi) : std::string("inf")) + "]";
  }

  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

/// Rank of a tensor product of spaces whose ranks lie in x and y.
inline RankInterval tensor_rank(const RankInterval& x, const RankInterval& y) {
  if ((x.hi && *x.hi == 0) || (y.hi && *y.hi == 0)) return RankInterval::exactly(0);
  RankInterval r;
  r.lo = x.lo * y.lo;
  if (x.hi && y.hi) r.hi = *x.hi * *y.hi;
  return r;
}

/// Bounds on the third vertex B of an exact triangle A -> B -> C -> A (the
/// rule is symmetric in A and C): |rk A - rk C| <= rk B <= rk A + rk C.
inline RankInterval triangle_propagate(const RankInterval& a, const RankInterval& c) {
  RankInterval b;
  std::int64_t lo = 0;
  if (c.hi) lo = std::max(lo, a.lo - *c.hi);
  if (a.hi) lo = std::max(lo, c.lo - *a.hi);
  b.lo = lo;
  if (a.hi && c.hi) b.hi = *a.hi + *c.hi;
  return b;
}

/// Rank of Lagrangian Floer homology of two essential curves on the fibre:
/// 2 for isotopic curves, the geometric intersection number otherwise.
inline std::int64_t hf_rank(const Curve& a, const Curve& b) {
  if (is_isotopic(a, b)) return 2;
  return static_cast<std::int64_t>(intersection_number(a, b));
}

/// Knot Floer homology shape of an L-space knot: Alexander gradings
/// n_0 = 0 < n_1 < ... < n_k and Maslov levels delta_i.
class Staircase {
 public:
  /// Levels follow from the positions: delta_k = 0, and going down,
  /// delta_i = delta_{i+1} - 2(n_{i+1} - n_i) + 1 when k - i is odd,
  /// delta_i = delta_{i+1} - 1 when k - i is even.
  static Staircase from_positions(std::vector<std::int64_t> ns) {
    if (ns.empty() || ns.front() != 0) throw Error(ErrorKind::NotLSpaceForm, "positions must start at n_0 = 0");
    for (std::size_t i = 1; i < ns.size(); ++i) {
      if (ns[i] <= ns[i - 1]) throw Error(ErrorKind::NotLSpaceForm, "positions must be strictly increasing");
    }
    const std::size_t k = ns.size() - 1;
    std::vector<std::int64_t> deltas(ns.size(), 0);
    for (std::size_t idx = k; idx-- > 0;) {
      if ((k - idx) % 2 == 1) {
        deltas[idx] = deltas[idx + 1] - 2 * (ns[idx + 1] - ns[idx]) + 1;
      } else {
        deltas[idx] = deltas[idx + 1] - 1;
      }
    }
    return Staircase(std::move(ns), std::move(deltas));
  }

  const std::vector<std::int64_t>& positions() const noexcept { return ns_; }
  const std::vector<std::int64_t>& deltas() const noexcept { return deltas_; }
  std::size_t k() const noexcept { return ns_.size() - 1; }
  std::int64_t genus() const noexcept { return ns_.back(); }

  /// Symmetrized Alexander polynomial sum_i (-1)^{k-i} (t^{n_i} + t^{-n_i}), n_0 counted once.
  LaurentPoly alexander() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < ns_.size(); ++i) {
      const std::int64_t sign = ((k() - i) % 2 == 0) ? 1 : -1;
      p.add(static_cast<int>(ns_[i]), sign);
      if (ns_[i] != 0) p.add(static_cast<int>(-ns_[i]), sign);
    }
    return p;
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  Staircase(std::vector<std::int64_t> ns, std::vector<std::int64_t> deltas)
      : ns_(std::move(ns)), deltas_(std::move(deltas)) {}

  std::vector<std::int64_t> ns_;
  std::vector<std::int64_t> deltas_;
};

/// Read the staircase off an Alexander polynomial, rejecting anything outside
/// the L-space form: symmetric, coefficients +-1 alternating in sign from the
/// top, nonzero middle coefficient.
inline Staircase staircase_from_alexander(const LaurentPoly& poly) {
  auto reject = [](const std::string& why) -> Staircase { throw Error(ErrorKind::NotLSpaceForm, why); };
  if (poly.is_zero()) return reject("zero polynomial");
  LaurentPoly p = poly.normalized();
  const int span = p.max_exponent();
  if (span % 2 != 0) return reject("odd degree span, not symmetric");
  if (!p.is_palindromic()) return reject("not symmetric under t -> 1/t");
  p = p.shifted(-span / 2);
  std::int64_t expected = 1;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const std::int64_t c = it->second;
    if (c != 1 && c != -1) return reject("coefficient " + std::to_string(c) + " of t^" + std::to_string(it->first) + " is not +-1");
    if (c != expected) return reject("signs do not alternate at t^" + std::to_string(it->first));
    expected = -expected;
  }
  if (p.coefficient(0) == 0) return reject("middle coefficient vanishes");
  std::vector<std::int64_t> ns;
  for (auto [e, c] : p.terms()) {
    if (e >= 0) ns.push_back(e);
  }
  return Staircase::from_positions(std::move(ns));
}

/// Per-grading ranks of HFK-hat for an L-space knot.
struct HfkProfile {
  std::map<std::int64_t, std::int64_t> rank;    // Alexander grading -> rank
  std::map<std::int64_t, std::int64_t> maslov;  // grading -> Maslov level where supported

  std::int64_t rank_at(std::int64_t j) const {
    auto it = rank.find(j);
    return it == rank.end() ? 0 : it->second;
  }

  std::int64_t total_rank() const {
    std::int64_t s = 0;
    for (auto [j, r] : rank) s += r;
    return s;
  }

  std::int64_t max_rank() const {
    std::int64_t m = 0;
    for (auto [j, r] : rank) m = std::max(m, r);
    return m;
  }
};

/// Rank 1 at j = +-n_i with Maslov level delta_i, rank 0 elsewhere.
inline HfkProfile lspace_profile(const Staircase& s) {
  HfkProfile prof;
  const auto n = static_cast<std::int64_t>(s.genus());
  for (std::int64_t j = -n; j <= n; ++j) prof.rank[j] = 0;
  for (std::size_t i = 0; i < s.positions().size(); ++i) {
    for (std::int64_t j : {s.positions()[i], -s.positions()[i]}) {
      prof.rank[j] = 1;
      prof.maslov[j] = s.deltas()[i];
    }
  }
  return prof;
}

enum class Verdict { ObstructionFound, Inconclusive };

inline std::string to_string(Verdict v) {
  return v == Verdict::ObstructionFound ? "obstruction_found" : "inconclusive";
}

/// An L-space knot has rank at most 1 in every Alexander grading, so any
/// grading whose rank is provably above 1 rules it out. Gradings beyond the
/// genus carry no knot Floer homology and are rejected.
inline Verdict lspace_obstruction(std::int64_t rank_lower_bound, std::int64_t at_grading, std::int64_t genus) {
  if (genus < 1 || at_grading < -genus || at_grading > genus) {
    throw Error(ErrorKind::InvalidInput, "grading " + std::to_string(at_grading) + " is outside [-g, g] for g = " +
                                             std::to_string(genus));
  }
  return rank_lower_bound > 1 ? Verdict::ObstructionFound : Verdict::Inconclusive;
}

}  // namespace lsk
