#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lsk/detail/axis.hpp"
#include "lsk/surface.hpp"

namespace lsk {

/// Integer vector of length 2g in the basis ([a1],[b1],...,[ag],[bg]) of the
/// handle generators. For the standard system a1 = alpha_1 and bi = beta_i.
using HomologyClass = std::vector<std::int64_t>;

/// An unoriented essential simple closed curve, stored as its canonical
/// cyclically reduced crossing word. Immutable.
class Curve {
 public:
  const SurfaceSpec& surface() const noexcept { return surface_; }
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  std::string to_string() const { return format_word(word_); }

  friend bool operator==(const Curve& a, const Curve& b) {
    return a.surface_ == b.surface_ && a.word_ == b.word_;
  }

  /// Build from a word already known to be reduced, simple and essential.
  /// Intended for kernel outputs; user input goes through normalize().
  static Curve trusted(const SurfaceSpec& surface, const Word& w) { return Curve(surface, canonical_cyclic(w)); }

 private:
  Curve(SurfaceSpec surface, Word canonical) : surface_(surface), word_(std::move(canonical)) {}

  SurfaceSpec surface_;
  Word word_;
};

namespace detail {

inline bool is_peripheral(const SurfaceSpec& surface, const Word& reduced) {
  return !reduced.empty() && canonical_cyclic(reduced) == canonical_cyclic(surface.boundary_word());
}

inline std::size_t self_crossing_count(const SurfaceSpec& surface, const Word& w) {
  std::size_t count = 0;
  for_each_crossing(surface, w, w, [&](const Crossing&) { ++count; });
  return count / 2;
}

}  // namespace detail

/// True iff the word is a nonempty cyclic word realizable without
/// self-crossings by an essential, non-peripheral curve.
inline bool validate_simple(const Word& raw, const SurfaceSpec& surface) {
  for (Letter l : raw) {
    if (!surface.valid_letter(l)) return false;
  }
  Word w = cyclically_reduce(raw);
  if (w.empty() || detail::is_peripheral(surface, w)) return false;
  if (cyclic_period(w) != w.size()) return false;
  return detail::self_crossing_count(surface, w) == 0;
}

/// Reduce a raw crossing word to minimal position against the cut arcs.
inline Curve normalize(const Word& raw, const SurfaceSpec& surface) {
  for (Letter l : raw) {
    if (!surface.valid_letter(l)) {
      throw Error(ErrorKind::IndexOutOfRange, "letter " + std::to_string(l) + " names no arc of the surface");
    }
  }
  Word w = cyclically_reduce(raw);
  if (w.empty()) throw Error(ErrorKind::Inessential, "word reduces to the trivial curve");
  if (detail::is_peripheral(surface, w)) throw Error(ErrorKind::Inessential, "curve is parallel to the boundary");
  if (cyclic_period(w) != w.size()) throw Error(ErrorKind::NotSimple, "word is a proper power");
  if (detail::self_crossing_count(surface, w) != 0) {
    throw Error(ErrorKind::NotSimple, "word [" + format_word(w) + "] has self-crossings");
  }
  return Curve::trusted(surface, w);
}

inline Curve normalize(std::string_view tokens, const SurfaceSpec& surface) {
  return normalize(parse_word(tokens, surface), surface);
}

inline bool is_isotopic(const Curve& a, const Curve& b) {
  require_same_surface(a.surface(), b.surface());
  return a.word() == b.word();
}

/// Geometric intersection number: minimal count of transverse intersections.
inline std::size_t intersection_number(const Curve& a, const Curve& b) {
  require_same_surface(a.surface(), b.surface());
  if (a.word() == b.word()) return 0;
  std::size_t count = 0;
  detail::for_each_crossing(a.surface(), a.word(), b.word(), [&](const detail::Crossing&) { ++count; });
  return count;
}

/// Signed count of crossings, +1 where b (oriented by its stored word) crosses
/// a (likewise oriented) from right to left.
inline std::int64_t algebraic_intersection(const Curve& a, const Curve& b) {
  require_same_surface(a.surface(), b.surface());
  if (a.word() == b.word()) return 0;
  std::int64_t total = 0;
  detail::for_each_crossing(a.surface(), a.word(), b.word(),
                            [&](const detail::Crossing& c) { total += c.sign * c.v_dir; });
  return total;
}

/// Abelianization of the stored word in the handle basis; sign chosen so the
/// first nonzero coordinate is positive.
inline HomologyClass homology_class(const Curve& a) {
  HomologyClass h(static_cast<std::size_t>(a.surface().num_arcs()), 0);
  for (Letter l : a.word()) h[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  auto first = std::find_if(h.begin(), h.end(), [](std::int64_t x) { return x != 0; });
  if (first != h.end() && *first < 0) {
    for (auto& x : h) x = -x;
  }
  return h;
}

/// Oriented abelianization of a word, no sign normalization.
inline HomologyClass oriented_homology(const Word& w, const SurfaceSpec& surface) {
  HomologyClass h(static_cast<std::size_t>(surface.num_arcs()), 0);
  for (Letter l : w) h[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  return h;
}

namespace detail {

struct TwistSite {
  Crossing crossing;
  Ray left;               // endpoint of the twisting curve's lift on the left of the target
  std::size_t slot = 0;   // vertex of the target where the loop is spliced in
  std::ptrdiff_t shift = 0;
};

class TwistSurgery {
 public:
  TwistSurgery(const SurfaceSpec& surface, const Word& target, const Word& about)
      : surface_(surface), b_(target), a_(about), order_(surface, 4 * (target.size() + about.size()) + 8) {}

  Word run(long power) {
    collect();
    if (sites_.empty()) return b_;
    assign_slots();
    return splice(power);
  }

 private:
  // Line position of site s translated by `period` copies of the target.
  std::ptrdiff_t pos(const TwistSite& s, std::ptrdiff_t period) const {
    return static_cast<std::ptrdiff_t>(s.crossing.u_pos) + period * static_cast<std::ptrdiff_t>(b_.size());
  }

  void collect() {
    for_each_crossing(surface_, b_, a_, [&](const Crossing& c) {
      AxisRay axis{&a_, c.v_pos, c.v_dir};
      // a crossing from right to left leaves through its forward end
      TwistSite site{c, Ray{{}, c.sign > 0 ? axis : axis.reversed()}, 0, 0};
      sites_.push_back(site);
    });
  }

  // Is the crossing of lift (s, ps) met before that of (t, pt) along the target's axis?
  bool before(const TwistSite& s, std::ptrdiff_t ps, const TwistSite& t, std::ptrdiff_t pt) const {
    const std::ptrdiff_t s0 = pos(s, ps), t0 = pos(t, pt);
    const std::ptrdiff_t s1 = s0 + static_cast<std::ptrdiff_t>(s.crossing.overlap);
    const std::ptrdiff_t t1 = t0 + static_cast<std::ptrdiff_t>(t.crossing.overlap);
    if (s1 < t0) return true;
    if (t1 < s0) return false;
    if (s0 > t0) return !before(t, pt, s, ps);
    // Express both left endpoints as rays from the vertex s0.
    const std::size_t nb = b_.size();
    std::vector<Letter> path;
    path.reserve(static_cast<std::size_t>(t0 - s0));
    for (std::ptrdiff_t p = s0; p < t0; ++p) {
      path.push_back(b_[static_cast<std::size_t>(((p % static_cast<std::ptrdiff_t>(nb)) + static_cast<std::ptrdiff_t>(nb)) % static_cast<std::ptrdiff_t>(nb))]);
    }
    const AxisRay fwd{&b_, s.crossing.u_pos, 1};
    const Ray plus{{}, fwd};
    const Ray ls = s.left;
    const Ray lt{path, t.left.tail};
    // Going counterclockwise from the forward end, left endpoints of later
    // crossings come first.
    return order_.ccw_before(plus, lt, ls);
  }

  // Splice slots: each crossing is moved to the latest start among crossings
  // met no later than it, which keeps the splice order equal to the order of
  // the crossings along the target.
  void assign_slots() {
    const std::size_t nb = b_.size();
    std::size_t max_overlap = 0;
    for (const auto& s : sites_) max_overlap = std::max(max_overlap, s.crossing.overlap);
    const std::ptrdiff_t periods = static_cast<std::ptrdiff_t>(max_overlap / nb + 1);

    std::vector<std::size_t> by_start(sites_.size());
    for (std::size_t k = 0; k < sites_.size(); ++k) by_start[k] = k;
    std::sort(by_start.begin(), by_start.end(),
              [&](std::size_t x, std::size_t y) { return sites_[x].crossing.u_pos < sites_[y].crossing.u_pos; });

    for (auto& c : sites_) {
      const std::ptrdiff_t c0 = pos(c, 0);
      const std::ptrdiff_t c1 = c0 + static_cast<std::ptrdiff_t>(c.crossing.overlap);
      std::ptrdiff_t slot = c0;
      for (std::ptrdiff_t period = 0; period <= periods; ++period) {
        for (std::size_t idx : by_start) {
          const TwistSite& d = sites_[idx];
          const std::ptrdiff_t d0 = pos(d, period);
          if (d0 <= slot) continue;
          if (d0 > c1) break;
          if (before(d, period, c, 0)) slot = d0;
        }
      }
      c.slot = static_cast<std::size_t>(slot % static_cast<std::ptrdiff_t>(nb));
      c.shift = -(slot / static_cast<std::ptrdiff_t>(nb));
    }
  }

  Word splice(long power) const {
    const std::size_t nb = b_.size();
    std::vector<std::vector<std::size_t>> at(nb);
    for (std::size_t k = 0; k < sites_.size(); ++k) at[sites_[k].slot].push_back(k);
    Word out;
    for (std::size_t p = 0; p < nb; ++p) {
      auto& group = at[p];
      std::sort(group.begin(), group.end(), [&](std::size_t x, std::size_t y) {
        return before(sites_[x], sites_[x].shift, sites_[y], sites_[y].shift);
      });
      for (std::size_t k : group) append_loop(out, sites_[k], power);
      out.push_back(b_[p]);
    }
    return out;
  }

  // The twisting curve read once around from the splice vertex, in the
  // direction that heads to the target's left, repeated |power| times.
  void append_loop(Word& out, const TwistSite& s, long power) const {
    const std::size_t na = a_.size();
    const std::size_t advance = s.slot + static_cast<std::size_t>(-s.shift) * b_.size() - s.crossing.u_pos;
    AxisRay loop = AxisRay{&a_, s.crossing.v_pos, s.crossing.v_dir}.advanced(advance);
    long reps = power;
    if (s.crossing.sign < 0) reps = -reps;
    if (reps < 0) {
      loop = loop.reversed();
      reps = -reps;
    }
    for (long r = 0; r < reps; ++r) {
      for (std::size_t k = 0; k < na; ++k) out.push_back(loop[k]);
    }
  }

  const SurfaceSpec& surface_;
  const Word& b_;
  const Word& a_;
  BoundaryOrder order_;
  std::vector<TwistSite> sites_;
};

}  // namespace detail

/// t_about^power(target). Positive powers are right-handed twists: the target
/// turns left onto `about`, runs once around it, and continues.
inline Curve dehn_twist(const Curve& target, const Curve& about, long power = 1) {
  require_same_surface(target.surface(), about.surface());
  if (power == 0 || target.word() == about.word()) return target;
  Word raw = detail::TwistSurgery(target.surface(), target.word(), about.word()).run(power);
  return Curve::trusted(target.surface(), cyclically_reduce(raw));
}

}  // namespace lsk
