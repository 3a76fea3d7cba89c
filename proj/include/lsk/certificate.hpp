#pragma once

// Replayable derivation that genus-g fibred knots K_n with monodromy
// phi_n = t_{beta_{g,n}} o psi have rk HFK-hat(S^3, K_n; -g+1) >= 16n^2 - 5.
//
// Curve-level numbers are recomputed by the kernel every time; the two exact
// triangles enter only as rank inequalities:
//
//   knot Floer:  HFK(Y,K;-g+1) -> HFK(Y',K';-g+1) -> HF(gamma, psi(gamma))
//   twist:       HF(t_c(a), b) -> HF(a, b) -> HF(c, a) (x) HF(b, c)
//
// (Y, K) is the open book (S, psi); Y' is -1 surgery on gamma in a fibre.
// These spaces appear only in step labels.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lsk/expr.hpp"
#include "lsk/floer_rank.hpp"
#include "lsk/mapping_class.hpp"

namespace lsk {

enum class StepKind { RankFact, TrianglePropagation, ArithmeticBound, Conclusion };

inline std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::RankFact: return "rank_fact";
    case StepKind::TrianglePropagation: return "triangle_propagation";
    case StepKind::ArithmeticBound: return "arithmetic_bound";
    case StepKind::Conclusion: return "conclusion";
  }
  return "?";
}

/// Signed lower bound on a rank; may be negative (then vacuous).
struct SignedBound {
  std::int64_t value = 0;
  friend bool operator==(const SignedBound&, const SignedBound&) = default;
};

using StepOutput = std::variant<RankInterval, SignedBound, Verdict>;

struct Citation {
  std::string anchor;
  std::string statement;
  friend bool operator==(const Citation&, const Citation&) = default;
};

/// Rules:
///   RankFact            hf_rank(curves[0], curves[1]) | hfk_lspace_knot(grading) | unconstrained
///   TrianglePropagation triangle(refs[0], refs[1])
///   ArithmeticBound     tensor(refs[0], refs[1]) | difference(refs[0], refs[1]) = lower(refs[0]) - upper(refs[1])
///   Conclusion          lspace_obstruction(refs[0], grading)
struct DerivationStep {
  std::size_t index = 0;
  StepKind kind = StepKind::RankFact;
  std::string rule;
  std::string label;
  std::string tag;  // stable key for notable steps, e.g. "base_bound"
  std::vector<std::size_t> refs;
  std::vector<std::string> curves;
  std::optional<std::int64_t> grading;
  StepOutput output;
  Citation citation;

  friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct Certificate {
  int genus = 0;
  long n = 0;
  std::vector<DerivationStep> steps;
  std::int64_t final_bound = 0;
  Verdict verdict = Verdict::Inconclusive;

  const DerivationStep* find_tag(const std::string& tag) const {
    for (const auto& s : steps) {
      if (s.tag == tag) return &s;
    }
    return nullptr;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

namespace cite {

inline Citation hf_rank() {
  return {"hf-rank", "rk HF(a,b) = 2 if a, b are isotopic, else rk HF(a,b) = i(a,b)"};
}
inline Citation knot_floer_triangle() {
  return {"knot-floer-triangle", "HFK(Y,K;-g+1) -> HFK(Y',K';-g+1) -> HF(gamma, phi(gamma)) is exact"};
}
inline Citation twist_triangle() {
  return {"twist-triangle", "HF(t_c(a),b) -> HF(a,b) -> HF(c,a) (x) HF(b,c) is exact"};
}
inline Citation lspace_staircase() {
  return {"lspace-staircase", "an L-space knot has rk HFK(S^3,K;j) <= 1 for every j"};
}
inline Citation torus_knot() {
  return {"torus-knot-base", "K_0 = T(2,2g+1), monodromy phi_0, an L-space knot"};
}
inline Citation tensor() { return {"tensor-rank", "rk (V (x) W) = rk V * rk W"}; }
inline Citation rank_nullity() {
  return {"rank-nullity", "exactness at each vertex bounds rk B >= rk A - rk C"};
}
inline Citation disjoint() {
  return {"disjoint-support", "t_x(y) = y whenever i(x,y) = 0"};
}
inline Citation nonnegative() { return {"rank-nonnegative", "rk V >= 0"}; }

}  // namespace cite

namespace detail {

inline std::int64_t lower_of(const StepOutput& o) {
  if (auto* r = std::get_if<RankInterval>(&o)) return r->lo;
  if (auto* b = std::get_if<SignedBound>(&o)) return b->value;
  throw Error(ErrorKind::InvalidInput, "step has no numeric output");
}

inline std::optional<std::int64_t> upper_of(const StepOutput& o) {
  if (auto* r = std::get_if<RankInterval>(&o)) return r->hi;
  if (std::holds_alternative<SignedBound>(o)) return std::nullopt;
  throw Error(ErrorKind::InvalidInput, "step has no numeric output");
}

inline const RankInterval& interval_of(const StepOutput& o) {
  if (auto* r = std::get_if<RankInterval>(&o)) return *r;
  throw Error(ErrorKind::InvalidInput, "step output is not a rank interval");
}

/// Rank of HFK-hat of the torus knot with monodromy phi_0 in grading j, read
/// off the staircase of its Alexander polynomial.
inline std::int64_t torus_knot_hfk_rank(const StandardCurveSystem& sys, std::int64_t j) {
  const LaurentPoly delta = alexander_polynomial(monodromy_phi(sys, 0), sys.genus());
  return lspace_profile(staircase_from_alexander(delta)).rank_at(j);
}

/// Evaluate one step from its inputs and the steps before it.
inline StepOutput evaluate_step(const DerivationStep& s, const std::vector<DerivationStep>& prior,
                                const StandardCurveSystem& sys) {
  auto ref = [&](std::size_t k) -> const StepOutput& {
    if (s.refs.size() <= k || s.refs[k] >= prior.size()) {
      throw Error(ErrorKind::InvalidInput, "step " + std::to_string(s.index) + " refers to a missing step");
    }
    return prior[s.refs[k]].output;
  };
  switch (s.kind) {
    case StepKind::RankFact:
      if (s.rule == "hf_rank") {
        if (s.curves.size() != 2) throw Error(ErrorKind::InvalidInput, "hf_rank needs two curves");
        return RankInterval::exactly(hf_rank(evaluate(s.curves[0], sys), evaluate(s.curves[1], sys)));
      }
      if (s.rule == "hfk_lspace_knot") {
        if (!s.grading) throw Error(ErrorKind::InvalidInput, "hfk_lspace_knot needs a grading");
        return RankInterval::exactly(torus_knot_hfk_rank(sys, *s.grading));
      }
      if (s.rule == "unconstrained") return RankInterval::unbounded();
      break;
    case StepKind::TrianglePropagation:
      if (s.rule == "triangle") return triangle_propagate(interval_of(ref(0)), interval_of(ref(1)));
      break;
    case StepKind::ArithmeticBound:
      if (s.rule == "tensor") return tensor_rank(interval_of(ref(0)), interval_of(ref(1)));
      if (s.rule == "difference") {
        auto hi = upper_of(ref(1));
        if (!hi) throw Error(ErrorKind::InvalidInput, "difference needs a bounded subtrahend");
        return SignedBound{lower_of(ref(0)) - *hi};
      }
      break;
    case StepKind::Conclusion:
      if (s.rule == "lspace_obstruction") {
        return lspace_obstruction(lower_of(ref(0)), s.grading.value_or(0), sys.genus());
      }
      break;
  }
  throw Error(ErrorKind::InvalidInput, "unknown rule '" + s.rule + "' for " + to_string(s.kind));
}

class DerivationBuilder {
 public:
  explicit DerivationBuilder(const StandardCurveSystem& sys) : sys_(sys) {}

  std::size_t add(DerivationStep s) {
    s.index = steps_.size();
    s.output = evaluate_step(s, steps_, sys_);
    steps_.push_back(std::move(s));
    return steps_.back().index;
  }

  std::size_t hf(const std::string& x, const std::string& y, const std::string& tag = {}) {
    DerivationStep s;
    s.kind = StepKind::RankFact;
    s.rule = "hf_rank";
    s.label = "rk HF(" + x + ", " + y + ")";
    s.tag = tag;
    s.curves = {x, y};
    s.citation = cite::hf_rank();
    return add(std::move(s));
  }

  std::size_t op(StepKind kind, const std::string& rule, const std::string& label, std::vector<std::size_t> refs,
                 Citation citation, const std::string& tag = {}) {
    DerivationStep s;
    s.kind = kind;
    s.rule = rule;
    s.label = label;
    s.tag = tag;
    s.refs = std::move(refs);
    s.citation = std::move(citation);
    return add(std::move(s));
  }

  const DerivationStep& step(std::size_t k) const { return steps_.at(k); }
  std::vector<DerivationStep>& steps() { return steps_; }
  const StandardCurveSystem& system() const { return sys_; }

 private:
  const StandardCurveSystem& sys_;
  std::vector<DerivationStep> steps_;
};

inline void anchor(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::AnchorViolation, what);
}

inline void anchor_exact(const DerivationStep& s, std::int64_t want) {
  const auto& r = interval_of(s.output);
  anchor(r.is_exact() && r.lo == want,
         s.label + " = " + r.to_string() + ", expected " + std::to_string(want));
}

// rk HFK(Y,K;-g+1) in [0,2] from the knot Floer triangle for -1 surgery on beta_g.
inline std::size_t append_base_bound(DerivationBuilder& b) {
  const int g = b.system().genus();
  const std::string bg = "b" + std::to_string(g);
  const std::int64_t j = -g + 1;

  const std::size_t hf_bg = b.hf(bg, "psi(" + bg + ")", "hf_beta_g_psi");
  anchor_exact(b.step(hf_bg), 1);

  DerivationStep torus;
  torus.kind = StepKind::RankFact;
  torus.rule = "hfk_lspace_knot";
  torus.label = "rk HFK(S^3,K_0;" + std::to_string(j) + ")";
  torus.tag = "hfk_torus_knot";
  torus.grading = j;
  torus.citation = cite::torus_knot();
  const std::size_t hfk0 = b.add(std::move(torus));
  anchor_exact(b.step(hfk0), 1);

  const std::size_t base = b.op(StepKind::TrianglePropagation, "triangle", "rk HFK(Y,K;" + std::to_string(j) + ")",
                                {hfk0, hf_bg}, cite::knot_floer_triangle(), "base_bound");
  const auto& r = interval_of(b.step(base).output);
  anchor(r.bounded() && *r.hi == 2, "rk HFK(Y,K;-g+1) upper bound is " + r.to_string() + ", expected 2");
  return base;
}

}  // namespace detail

/// The three steps bounding rk HFK(Y,K;-g+1) <= 2 for the open book (S, psi).
inline std::vector<DerivationStep> derive_base_bound(const StandardCurveSystem& sys) {
  detail::DerivationBuilder b(sys);
  detail::append_base_bound(b);
  return std::move(b.steps());
}

inline std::vector<DerivationStep> derive_base_bound(int g) { return derive_base_bound(standard_curve_system(g)); }

/// Full derivation for K_n. Throws AnchorViolation if any kernel-computed
/// fact disagrees with the value the argument depends on.
inline Certificate certify(const StandardCurveSystem& sys, long n) {
  if (n < 0) throw Error(ErrorKind::NegativePower, "n must be >= 0, got " + std::to_string(n));
  using detail::anchor;
  using detail::anchor_exact;
  const int g = sys.genus();
  const std::string gs = std::to_string(g);
  const std::string B = "B[" + gs + "," + std::to_string(n) + "]";
  const std::string ap = "a" + std::to_string(g - 1);
  const std::string ag = "a" + gs;
  const std::string bp = "b" + std::to_string(g - 1);
  const std::string t1 = "T(" + ap + ")(" + B + ")";   // t_{alpha_{g-1}}(beta_{g,n})
  const std::string t2 = "T(" + ag + ")(" + t1 + ")";  // t_{alpha_g} t_{alpha_{g-1}}(beta_{g,n})
  const std::string jstr = std::to_string(-g + 1);
  const std::int64_t sq = 16 * static_cast<std::int64_t>(n) * n;
  using K = StepKind;

  detail::DerivationBuilder b(sys);
  const std::size_t base = detail::append_base_bound(b);

  // psi(B) only feels the twists about alpha_{g-1}, alpha_g, beta_{g-1}.
  for (int i = 1; i <= g - 2; ++i) {
    for (const auto& x : {"a" + std::to_string(i), "b" + std::to_string(i)}) {
      DerivationStep s;
      s.kind = K::RankFact;
      s.rule = "hf_rank";
      s.label = "rk HF(" + B + ", " + x + ")";
      s.curves = {B, x};
      s.citation = cite::disjoint();
      anchor_exact(b.step(b.add(std::move(s))), 0);
    }
  }

  const std::size_t i_ap = b.hf(ap, B, "hf_alpha_beta");
  anchor_exact(b.step(i_ap), 4 * n);
  const std::size_t i_ag = b.hf(B, ag);
  anchor_exact(b.step(i_ag), 1);
  const std::size_t self = b.hf(B, B);
  anchor_exact(b.step(self), 2);
  const std::size_t i_aa = b.hf(ag, ap);
  anchor_exact(b.step(i_aa), 0);
  const std::size_t i_bb = b.hf(bp, B);
  anchor_exact(b.step(i_bb), 0);

  // rk HF(t_{alpha_{g-1}}(B), alpha_g) = rk HF(B, alpha_g) = 1: the third vertex vanishes.
  const std::size_t e4c = b.op(K::ArithmeticBound, "tensor", "rk HF(" + ap + ", " + B + ") (x) HF(" + ag + ", " + ap + ")",
                               {i_ap, i_aa}, cite::tensor());
  const std::size_t e4 = b.op(K::TrianglePropagation, "triangle", "rk HF(" + t1 + ", " + ag + ")", {i_ag, e4c},
                              cite::twist_triangle(), "rank_one_part");
  anchor_exact(b.step(e4), 1);

  // (a, b, c) = (B, B, alpha_{g-1})
  const std::size_t sq_t = b.op(K::ArithmeticBound, "tensor", "rk HF(" + ap + ", " + B + ") (x) HF(" + B + ", " + ap + ")",
                                {i_ap, i_ap}, cite::tensor());
  const std::size_t x3 = b.op(K::TrianglePropagation, "triangle", "rk HF(" + t1 + ", " + B + ")", {self, sq_t},
                              cite::twist_triangle());
  const std::size_t x3b = b.op(K::ArithmeticBound, "difference", "rk HF(" + t1 + ", " + B + ") >= (4n)^2 - 2",
                               {sq_t, self}, cite::rank_nullity());
  anchor(detail::lower_of(b.step(x3b).output) == sq - 2, "step 3 bound is not 16n^2-2");

  // (a, b, c) = (t_{alpha_{g-1}}(B), B, alpha_g)
  const std::size_t c2 = b.op(K::ArithmeticBound, "tensor", "rk HF(" + ag + ", " + t1 + ") (x) HF(" + B + ", " + ag + ")",
                              {e4, i_ag}, cite::tensor());
  const std::size_t x2 =
      b.op(K::TrianglePropagation, "triangle", "rk HF(" + t2 + ", " + B + ")", {x3, c2}, cite::twist_triangle());
  const std::size_t x2b = b.op(K::ArithmeticBound, "difference", "rk HF(" + t2 + ", " + B + ") >= 16n^2 - 3",
                               {x3b, c2}, cite::rank_nullity());
  anchor(detail::lower_of(b.step(x2b).output) == sq - 3, "step 2 bound is not 16n^2-3");

  // (a, b, c) = (t_{alpha_g} t_{alpha_{g-1}}(B), B, beta_{g-1}); the third vertex vanishes.
  DerivationStep free;
  free.kind = K::RankFact;
  free.rule = "unconstrained";
  free.label = "rk HF(" + bp + ", " + t2 + ")";
  free.citation = cite::nonnegative();
  const std::size_t any = b.add(std::move(free));
  const std::size_t c1 = b.op(K::ArithmeticBound, "tensor", "rk HF(" + bp + ", " + t2 + ") (x) HF(" + B + ", " + bp + ")",
                              {any, i_bb}, cite::tensor());
  const std::size_t x1 = b.op(K::TrianglePropagation, "triangle", "rk HF(psi(" + B + "), " + B + ")", {x2, c1},
                              cite::twist_triangle(), "hf_interval");
  const std::size_t x1b = b.op(K::ArithmeticBound, "difference", "rk HF(psi(" + B + "), " + B + ") >= 16n^2 - 3",
                               {x2b, c1}, cite::rank_nullity(), "hf_lower_bound");
  anchor(detail::lower_of(b.step(x1b).output) == sq - 3, "HF lower bound is not 16n^2-3");

  // Knot Floer triangle for -1 surgery on B: HFK(Y,K) -> HFK(S^3,K_n) -> HF(B, psi(B)).
  const std::size_t z = b.op(K::TrianglePropagation, "triangle", "rk HFK(S^3,K_" + std::to_string(n) + ";" + jstr + ")",
                             {base, x1}, cite::knot_floer_triangle(), "hfk_interval");
  const std::size_t fin =
      b.op(K::ArithmeticBound, "difference", "rk HFK(S^3,K_" + std::to_string(n) + ";" + jstr + ") >= 16n^2 - 5",
           {x1b, base}, cite::rank_nullity(), "final_bound");
  const std::int64_t final_bound = detail::lower_of(b.step(fin).output);
  anchor(final_bound == sq - 5, "final bound is " + std::to_string(final_bound) + ", expected 16n^2-5");
  if (final_bound >= 0) {
    anchor(detail::interval_of(b.step(z).output).lo == final_bound, "interval and arithmetic bounds disagree");
  }

  DerivationStep concl;
  concl.kind = K::Conclusion;
  concl.rule = "lspace_obstruction";
  concl.label = "L-space obstruction for K_" + std::to_string(n);
  concl.tag = "verdict";
  concl.refs = {fin};
  concl.grading = -g + 1;
  concl.citation = cite::lspace_staircase();
  const std::size_t v = b.add(std::move(concl));

  Certificate cert;
  cert.genus = g;
  cert.n = n;
  cert.final_bound = final_bound;
  cert.verdict = std::get<Verdict>(b.step(v).output);
  cert.steps = std::move(b.steps());
  return cert;
}

inline Certificate certify(int g, long n) { return certify(standard_curve_system(g), n); }

/// Certify against caller-supplied curve words instead of the built-in ones.
inline Certificate certify(const CurveWords& words, long n) { return certify(StandardCurveSystem::from_words(words), n); }

/// Re-evaluate every step from its recorded inputs, recomputing all curve
/// facts from scratch. Returns the rebuilt certificate; compare with ==.
inline Certificate replay(const Certificate& cert, const StandardCurveSystem& sys) {
  if (sys.genus() != cert.genus) throw Error(ErrorKind::SurfaceMismatch, "certificate genus differs from curve system");
  Certificate out = cert;
  out.steps.clear();
  for (const auto& s : cert.steps) {
    if (s.index != out.steps.size()) throw Error(ErrorKind::InvalidInput, "steps out of order");
    DerivationStep r = s;
    r.output = detail::evaluate_step(s, out.steps, sys);
    out.steps.push_back(std::move(r));
  }
  if (const auto* fin = out.find_tag("final_bound")) out.final_bound = detail::lower_of(fin->output);
  if (const auto* v = out.find_tag("verdict")) out.verdict = std::get<Verdict>(v->output);
  return out;
}

inline Certificate replay(const Certificate& cert) { return replay(cert, standard_curve_system(cert.genus)); }

struct CrossValidation {
  int genus = 0;
  long n = 0;
  std::int64_t direct = 0;        // i(beta_{g,n}, psi(beta_{g,n})) computed on the surface
  std::int64_t engine_bound = 0;  // 16n^2 - 3
  std::int64_t slack = 0;
  std::size_t beta_length = 0;
  std::size_t image_length = 0;
  bool non_isotopic = false;
};

/// Default cap on |beta_{g,n}| * |psi(beta_{g,n})|.
inline constexpr std::size_t kDefaultCrossBudget = 20'000'000;

/// Direct kernel computation of i(beta_{g,n}, psi(beta_{g,n})) against the
/// derivation's lower bound 16n^2 - 3.
inline CrossValidation cross_validate(const StandardCurveSystem& sys, long n,
                                      std::size_t budget = kDefaultCrossBudget) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "cross validation needs n >= 1");
  CrossValidation r;
  r.genus = sys.genus();
  r.n = n;
  const Curve beta = beta_gn(sys, n);
  // psi(beta) has length about (4n)^2 |alpha_{g-1}| + ...; refuse early when clearly too big.
  const std::size_t estimate = static_cast<std::size_t>(16 * n * n) * sys.alpha(sys.genus() - 1).length();
  if (estimate > budget / beta.length()) {
    throw Error(ErrorKind::BudgetExceeded, "n = " + std::to_string(n) + " needs about " +
                                               std::to_string(estimate * beta.length()) + " cross terms, budget " +
                                               std::to_string(budget));
  }
  const Curve image = apply_word(monodromy_psi(sys), beta);
  r.beta_length = beta.length();
  r.image_length = image.length();
  if (r.beta_length * r.image_length > budget) {
    throw Error(ErrorKind::BudgetExceeded, std::to_string(r.beta_length * r.image_length) + " cross terms exceed budget " +
                                               std::to_string(budget));
  }
  r.non_isotopic = !is_isotopic(beta, image);
  r.direct = static_cast<std::int64_t>(intersection_number(beta, image));
  r.engine_bound = 16 * static_cast<std::int64_t>(n) * n - 3;
  r.slack = r.direct - r.engine_bound;
  detail::anchor(r.non_isotopic, "beta_{g,n} and psi(beta_{g,n}) are isotopic");
  detail::anchor(r.slack >= 0, "direct intersection " + std::to_string(r.direct) + " is below the bound " +
                                   std::to_string(r.engine_bound));
  return r;
}

inline CrossValidation cross_validate(int g, long n, std::size_t budget = kDefaultCrossBudget) {
  return cross_validate(standard_curve_system(g), n, budget);
}

}  // namespace lsk
