#pragma once

// Lifts of closed curves to the universal cover. The cover of the ribbon graph
// is a planar tree; a cyclically reduced word w lifts to a bi-infinite
// geodesic (an axis) and every vertex on it corresponds to a rotation of w.
// Two curves cross once for every pair of axes, up to deck transformations,
// whose endpoints interleave on the circle at infinity.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lsk/surface.hpp"

namespace lsk::detail {

/// Ray from a vertex on the axis of `word`, reading the word (dir = +1) or its
/// inverse (dir = -1) starting at rotation `start`.
struct AxisRay {
  const Word* word = nullptr;
  std::size_t start = 0;
  int dir = 1;

  Letter operator[](std::size_t k) const {
    const std::size_t n = word->size();
    if (dir > 0) return (*word)[(start + k) % n];
    std::size_t back = (k % n) + 1;
    return -(*word)[(start + n - back) % n];
  }

  AxisRay reversed() const { return AxisRay{word, start, -dir}; }

  /// Same axis, `steps` vertices further along the ray.
  AxisRay advanced(std::size_t steps) const {
    const std::size_t n = word->size();
    std::size_t s = steps % n;
    return AxisRay{word, dir > 0 ? (start + s) % n : (start + n - s) % n, dir};
  }
};

/// A finite reduced path followed by an axis ray.
struct Ray {
  std::span<const Letter> prefix;
  AxisRay tail;

  Letter operator[](std::size_t k) const { return k < prefix.size() ? prefix[k] : tail[k - prefix.size()]; }
};

/// Length of the common prefix of two axis rays, or `limit` if they agree that far.
inline std::size_t common_prefix(const AxisRay& r, const AxisRay& s, std::size_t limit) {
  std::size_t k = 0;
  while (k < limit && r[k] == s[k]) ++k;
  return k;
}

/// Cyclic order of endpoints at infinity for rays leaving a common vertex.
class BoundaryOrder {
 public:
  BoundaryOrder(const SurfaceSpec& surface, std::size_t depth_limit) : surface_(surface), limit_(depth_limit) {}

  /// True when r and s (sharing their first `depth` letters) diverge so that r
  /// comes first counterclockwise inside the subtree they share.
  bool linear_before(const Ray& r, const Ray& s, std::size_t depth) const {
    for (std::size_t d = depth; d < limit_; ++d) {
      Letter hr = r[d];
      Letter hs = s[d];
      if (hr != hs) {
        Letter incoming = -r[d - 1];
        return surface_.ccw(incoming, hr) < surface_.ccw(incoming, hs);
      }
    }
    throw std::logic_error("rays share an endpoint at infinity");
  }

  /// True when, turning counterclockwise from the endpoint of r0, the endpoint
  /// of r1 is met before that of r2. All three endpoints must be distinct.
  bool ccw_before(const Ray& r0, const Ray& r1, const Ray& r2) const {
    std::size_t d = 0;
    while (d < limit_ && r0[d] == r1[d] && r1[d] == r2[d]) ++d;
    if (d == limit_) throw std::logic_error("rays share an endpoint at infinity");
    Letter h0 = r0[d], h1 = r1[d], h2 = r2[d];
    if (d > 0) {
      // All three live in one subtree: the circle order is the cyclic
      // closure of the linear order there.
      if (h0 != h1 && h1 != h2 && h0 != h2) {
        Letter in = -r0[d - 1];
        return cyclic3(surface_.ccw(in, h0), surface_.ccw(in, h1), surface_.ccw(in, h2));
      }
      bool l01 = linear_before(r0, r1, d);
      bool l12 = linear_before(r1, r2, d);
      bool l02 = linear_before(r0, r2, d);
      return (l01 && l12) || (l12 && !l02) || (!l02 && l01);
    }
    if (h0 != h1 && h1 != h2 && h0 != h2) {
      return surface_.ccw(h0, h1) < surface_.ccw(h0, h2);
    }
    if (h1 == h2) return linear_before(r1, r2, 1);
    if (h0 == h1) return linear_before(r0, r1, 1);
    return !linear_before(r0, r2, 1);
  }

 private:
  // p0 -> p1 -> p2 is counterclockwise for distinct linear positions.
  static bool cyclic3(int p0, int p1, int p2) {
    return (p0 < p1 && p1 < p2) || (p1 < p2 && p2 < p0) || (p2 < p0 && p0 < p1);
  }

  const SurfaceSpec& surface_;
  std::size_t limit_;
};

/// One transverse intersection of curves u and v in minimal position, recorded
/// at the vertex of u's axis where the two lifts start to run together.
struct Crossing {
  std::size_t u_pos = 0;   // rotation of u at the first shared vertex
  std::size_t v_pos = 0;   // rotation of v at the same vertex
  int v_dir = 1;           // +1 if v runs along u in u's direction
  std::size_t overlap = 0; // number of shared edges
  int sign = 1;            // +1 if v crosses u from its right to its left
};

/// Enumerate the crossings of u with v (or with u itself when `same` is set,
/// in which case each self-crossing appears twice). Words must be cyclically
/// reduced and nonempty. Returns false if two lifts were found to coincide
/// (u and v are conjugate up to inversion, or u is a proper power).
template <class Fn>
bool for_each_crossing(const SurfaceSpec& surface, const Word& u, const Word& v, Fn&& fn) {
  const std::size_t nu = u.size();
  const std::size_t nv = v.size();
  const std::size_t limit = nu + nv;
  bool coincident = false;
  for (std::size_t i = 0; i < nu; ++i) {
    const AxisRay uf{&u, i, 1};
    const AxisRay ub{&u, i, -1};
    const Letter x = ub[0];
    const Letter f = uf[0];
    for (int dir : {1, -1}) {
      for (std::size_t j = 0; j < nv; ++j) {
        const AxisRay vf{&v, j, dir};
        const AxisRay vb = vf.reversed();
        const Letter xv = vb[0];
        if (xv == x) continue;  // shared edge extends backwards
        const Letter fv = vf[0];
        if (fv != f) {
          // Lifts meet in a single vertex; count it once, for dir = +1.
          if (dir < 0 || fv == x || xv == f) continue;
          const int cx = surface.ccw(f, x);
          const bool xv_left = surface.ccw(f, xv) < cx;
          const bool fv_left = surface.ccw(f, fv) < cx;
          if (xv_left != fv_left) {
            fn(Crossing{i, j, dir, 0, fv_left ? 1 : -1});
          }
          continue;
        }
        const std::size_t len = common_prefix(uf, vf, limit);
        if (len == limit) {
          coincident = true;
          continue;
        }
        const bool u_left_start = surface.ccw(f, x) < surface.ccw(f, xv);
        const Letter in = -uf[len - 1];
        const bool u_left_end = !(surface.ccw(in, uf[len]) < surface.ccw(in, vf[len]));
        if (u_left_start != u_left_end) {
          fn(Crossing{i, j, dir, len, u_left_start ? 1 : -1});
        }
      }
    }
  }
  return !coincident;
}

}  // namespace lsk::detail
