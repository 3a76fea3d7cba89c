#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lsk/curve.hpp"
#include "lsk/poly.hpp"

namespace lsk {

/// Crossing words of the standard curves, before validation. Kept separate
/// from StandardCurveSystem so a caller can hand in altered words.
struct CurveWords {
  int genus = 0;
  std::vector<std::string> alphas;  // alpha_1 .. alpha_g
  std::vector<std::string> betas;   // beta_1 .. beta_g
  std::string c;
};

namespace detail {

inline std::string arc_token(int arc, bool positive) {
  return "e" + std::to_string(arc) + (positive ? "+" : "-");
}

}  // namespace detail

/// The chain alpha_1, beta_1, ..., alpha_g, beta_g and the separating curve c
/// bounding a neighbourhood of alpha_g and beta_{g-1}:
///   alpha_1 = a1,  alpha_i = a_{i-1} b_{i-1} A_i B_{i-1},  beta_i = b_i,
///   c = A_g B_{g-1} a_{g-1} B_{g-1} A_{g-1} b_{g-1} a_g b_{g-1}.
inline CurveWords standard_curve_words(int g) {
  if (g < 2) throw Error(ErrorKind::GenusTooSmall, "the curve c needs alpha_g and beta_{g-1}; got genus " + std::to_string(g));
  using detail::arc_token;
  auto a = [](int i) { return 2 * i - 1; };
  auto b = [](int i) { return 2 * i; };
  CurveWords w;
  w.genus = g;
  w.alphas.push_back(arc_token(a(1), true));
  for (int i = 2; i <= g; ++i) {
    w.alphas.push_back(arc_token(a(i - 1), true) + " " + arc_token(b(i - 1), true) + " " + arc_token(a(i), false) + " " +
                       arc_token(b(i - 1), false));
  }
  for (int i = 1; i <= g; ++i) w.betas.push_back(arc_token(b(i), true));
  const int p = g - 1;
  w.c = arc_token(a(g), false) + " " + arc_token(b(p), false) + " " + arc_token(a(p), true) + " " + arc_token(b(p), false) +
        " " + arc_token(a(p), false) + " " + arc_token(b(p), true) + " " + arc_token(a(g), true) + " " +
        arc_token(b(p), true);
  return w;
}

class StandardCurveSystem {
 public:
  /// Normalizes every word and checks the chain pattern and the intersection
  /// and homology properties of c. Throws AnchorViolation naming the first
  /// failed property.
  static StandardCurveSystem from_words(const CurveWords& words) {
    SurfaceSpec surface(words.genus);
    const int g = words.genus;
    if (static_cast<int>(words.alphas.size()) != g || static_cast<int>(words.betas.size()) != g) {
      throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(g) + " alpha and beta words");
    }
    std::vector<Curve> alphas, betas;
    for (const auto& t : words.alphas) alphas.push_back(normalize(std::string_view(t), surface));
    for (const auto& t : words.betas) betas.push_back(normalize(std::string_view(t), surface));
    Curve c = normalize(std::string_view(words.c), surface);
    StandardCurveSystem sys(surface, std::move(alphas), std::move(betas), std::move(c));
    sys.check_anchors();
    return sys;
  }

  const SurfaceSpec& surface() const noexcept { return surface_; }
  int genus() const noexcept { return surface_.genus(); }
  const Curve& alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i - 1)); }
  const Curve& beta(int i) const { return betas_.at(static_cast<std::size_t>(i - 1)); }
  const Curve& c() const noexcept { return c_; }

  /// alpha_1, beta_1, ..., alpha_g, beta_g.
  std::vector<Curve> chain() const {
    std::vector<Curve> out;
    for (int i = 1; i <= genus(); ++i) {
      out.push_back(alpha(i));
      out.push_back(beta(i));
    }
    return out;
  }

  static std::string chain_label(std::size_t k) {
    return (k % 2 == 0 ? "a" : "b") + std::to_string(k / 2 + 1);
  }

 private:
  StandardCurveSystem(SurfaceSpec s, std::vector<Curve> a, std::vector<Curve> b, Curve c)
      : surface_(s), alphas_(std::move(a)), betas_(std::move(b)), c_(std::move(c)) {}

  static void expect(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::AnchorViolation, what);
  }

  void check_anchors() const {
    const int g = genus();
    auto ch = chain();
    for (std::size_t x = 0; x < ch.size(); ++x) {
      for (std::size_t y = x + 1; y < ch.size(); ++y) {
        const std::size_t want = (y == x + 1) ? 1 : 0;
        const std::size_t got = intersection_number(ch[x], ch[y]);
        expect(got == want, "chain pattern: i(" + chain_label(x) + "," + chain_label(y) + ") = " + std::to_string(got) +
                                ", expected " + std::to_string(want));
      }
    }
    for (std::size_t k = 0; k < ch.size(); ++k) {
      const bool touches = (k == static_cast<std::size_t>(2 * g - 1)) || (k == static_cast<std::size_t>(2 * g - 4));
      const std::size_t want = touches ? 2 : 0;
      const std::size_t got = intersection_number(c_, ch[k]);
      expect(got == want, "i(c," + chain_label(k) + ") = " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    for (auto x : homology_class(c_)) expect(x == 0, "c is not nullhomologous");
  }

  SurfaceSpec surface_;
  std::vector<Curve> alphas_;
  std::vector<Curve> betas_;
  Curve c_;
};

inline StandardCurveSystem standard_curve_system(int g) {
  return StandardCurveSystem::from_words(standard_curve_words(g));
}

/// beta_{g,n} = t_c^n(beta_g), built in a single surgery pass.
inline Curve beta_gn(const StandardCurveSystem& sys, long n) {
  if (n < 0) throw Error(ErrorKind::NegativePower, "beta_{g,n} needs n >= 0, got " + std::to_string(n));
  return dehn_twist(sys.beta(sys.genus()), sys.c(), n);
}

inline Curve beta_gn(int g, long n) { return beta_gn(standard_curve_system(g), n); }

struct TwistFactor {
  Curve curve;
  long power = 1;
  std::string label;
};

/// Product of Dehn twists, outermost factor first: [f1, f2, f3] = f1 o f2 o f3.
class TwistWord {
 public:
  TwistWord() = default;
  explicit TwistWord(std::vector<TwistFactor> factors) : factors_(std::move(factors)) { simplify(); }

  const std::vector<TwistFactor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }

  /// this o inner
  TwistWord compose(const TwistWord& inner) const {
    std::vector<TwistFactor> f = factors_;
    f.insert(f.end(), inner.factors_.begin(), inner.factors_.end());
    return TwistWord(std::move(f));
  }

  std::string to_string() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += " ";
      out += "T(" + (f.label.empty() ? "[" + f.curve.to_string() + "]" : f.label) + ")";
      if (f.power != 1) out += "^" + std::to_string(f.power);
    }
    return out.empty() ? "id" : out;
  }

  friend bool operator==(const TwistWord& x, const TwistWord& y) {
    if (x.factors_.size() != y.factors_.size()) return false;
    for (std::size_t k = 0; k < x.factors_.size(); ++k) {
      if (!(x.factors_[k].curve == y.factors_[k].curve) || x.factors_[k].power != y.factors_[k].power) return false;
    }
    return true;
  }

 private:
  // Merge adjacent twists about the same curve; drop zero powers.
  void simplify() {
    std::vector<TwistFactor> out;
    for (auto& f : factors_) {
      if (!out.empty() && out.back().curve == f.curve) {
        out.back().power += f.power;
        if (out.back().power == 0) out.pop_back();
        continue;
      }
      if (f.power != 0) out.push_back(f);
    }
    for (std::size_t k = 1; k < out.size(); ++k) require_same_surface(out[0].curve.surface(), out[k].curve.surface());
    factors_ = std::move(out);
  }

  std::vector<TwistFactor> factors_;
};

/// phi_n = (t_{beta_{g,n}} o t_{beta_{g-1}} o ... o t_{beta_1}) o (t_{alpha_g} o ... o t_{alpha_1}).
inline TwistWord monodromy_phi(const StandardCurveSystem& sys, long n) {
  const int g = sys.genus();
  std::vector<TwistFactor> f;
  f.push_back({beta_gn(sys, n), 1, "B[" + std::to_string(g) + "," + std::to_string(n) + "]"});
  for (int i = g - 1; i >= 1; --i) f.push_back({sys.beta(i), 1, "b" + std::to_string(i)});
  for (int i = g; i >= 1; --i) f.push_back({sys.alpha(i), 1, "a" + std::to_string(i)});
  return TwistWord(std::move(f));
}

/// psi = t_{beta_{g-1}} o ... o t_{beta_1} o t_{alpha_g} o ... o t_{alpha_1}, so phi_n = t_{beta_{g,n}} o psi.
inline TwistWord monodromy_psi(const StandardCurveSystem& sys) {
  const int g = sys.genus();
  std::vector<TwistFactor> f;
  for (int i = g - 1; i >= 1; --i) f.push_back({sys.beta(i), 1, "b" + std::to_string(i)});
  for (int i = g; i >= 1; --i) f.push_back({sys.alpha(i), 1, "a" + std::to_string(i)});
  return TwistWord(std::move(f));
}

inline TwistWord monodromy_phi(int g, long n) { return monodromy_phi(standard_curve_system(g), n); }
inline TwistWord monodromy_psi(int g) { return monodromy_psi(standard_curve_system(g)); }

/// Image of a curve under a twist word, innermost factor first. Factors
/// disjoint from the current image leave it unchanged.
inline Curve apply_word(const TwistWord& w, const Curve& a) {
  Curve cur = a;
  const auto& f = w.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    require_same_surface(it->curve.surface(), cur.surface());
    cur = dehn_twist(cur, it->curve, it->power);
  }
  return cur;
}

/// Square integer matrix acting on homology column vectors.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, 0) {}

  static SymplecticMatrix identity(std::size_t dim) {
    SymplecticMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  friend SymplecticMatrix operator*(const SymplecticMatrix& x, const SymplecticMatrix& y) {
    SymplecticMatrix m(x.dim_);
    for (std::size_t i = 0; i < x.dim_; ++i)
      for (std::size_t k = 0; k < x.dim_; ++k) {
        const std::int64_t xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.dim_; ++j) m(i, j) += xik * y(k, j);
      }
    return m;
  }

  HomologyClass apply(const HomologyClass& v) const {
    HomologyClass out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  SymplecticMatrix transposed() const {
    SymplecticMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend bool operator==(const SymplecticMatrix& x, const SymplecticMatrix& y) { return x.e_ == y.e_; }

 private:
  std::size_t dim_;
  std::vector<std::int64_t> e_;
};

/// Algebraic intersection pairing <x,y> = x^T J y on the handle basis:
/// <a_i,b_i> = 1, <b_i,a_i> = -1, all else 0.
inline SymplecticMatrix intersection_form(int g) {
  SymplecticMatrix j(static_cast<std::size_t>(2 * g));
  for (std::size_t i = 0; i < static_cast<std::size_t>(g); ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

inline std::int64_t pairing(const HomologyClass& x, const HomologyClass& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < x.size(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

inline bool is_symplectic(const SymplecticMatrix& m) {
  const auto j = intersection_form(static_cast<int>(m.dim() / 2));
  return m.transposed() * j * m == j;
}

/// Transvection x -> x + power * <x,h> h.
inline SymplecticMatrix transvection(const HomologyClass& h, long power) {
  const std::size_t n = h.size();
  // <x,h> = sum_s x_s (J h)_s
  HomologyClass jh(n, 0);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    jh[i] = h[i + 1];
    jh[i + 1] = -h[i];
  }
  SymplecticMatrix m = SymplecticMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) += power * h[r] * jh[c];
  return m;
}

/// Action of the word on H_1(S), the product of the factors' transvections.
inline SymplecticMatrix homology_action(const TwistWord& w, int g) {
  SymplecticMatrix m = SymplecticMatrix::identity(static_cast<std::size_t>(2 * g));
  for (const auto& f : w.factors()) {
    m = m * transvection(oriented_homology(f.curve.word(), f.curve.surface()), f.power);
  }
  return m;
}

inline SymplecticMatrix homology_action(const TwistWord& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "empty twist word has no surface; pass the genus");
  return homology_action(w, w.factors().front().curve.surface().genus());
}

/// det(t I - M) by Faddeev-LeVerrier; every division is exact over the integers.
inline LaurentPoly characteristic_polynomial(const SymplecticMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  SymplecticMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    SymplecticMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = next;
    SymplecticMatrix am = a * m;
    std::int64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<std::int64_t>(k);
  }
  LaurentPoly p;
  for (std::size_t i = 0; i <= n; ++i) p.add(static_cast<int>(i), c[i]);
  return p;
}

/// Alexander polynomial of the fibred knot with monodromy w: the characteristic
/// polynomial of its homological action, top coefficient +1.
inline LaurentPoly alexander_polynomial(const TwistWord& w, int g) {
  return characteristic_polynomial(homology_action(w, g)).normalized();
}

inline LaurentPoly alexander_polynomial(const TwistWord& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "empty twist word has no surface; pass the genus");
  return alexander_polynomial(w, w.factors().front().curve.surface().genus());
}

}  // namespace lsk
