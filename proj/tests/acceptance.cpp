// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "lsk/certificate.hpp"
#include "lsk/floer_rank.hpp"
#include "lsk/mapping_class.hpp"
#include "support/random_curves.hpp"
#include "support/seifert_oracle.hpp"

namespace {

using namespace lsk;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception ") + e.what());
  }
  const double dt = seconds_since(t0);
  std::printf("[%s] %d %s: %s(%.3f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.note.str().c_str(), dt);
  std::fflush(stdout);
  failures += !o.pass;
}

// Exact check timed individually against a per-check limit.
template <class F>
void timed(Outcome& o, double& worst, double limit, const std::string& what, F&& check) {
  const auto t0 = Clock::now();
  const bool ok = check();
  const double dt = seconds_since(t0);
  worst = std::max(worst, dt);
  o.require(ok, what);
  o.require(dt < limit, what + " took " + std::to_string(dt) + " s");
}

void intersection_anchors(Outcome& o) {
  double worst = 0;
  for (int g = 2; g <= 5; ++g) {
    const auto sys = standard_curve_system(g);
    const std::string tag = "g=" + std::to_string(g);
    timed(o, worst, 1.0, tag + " i(c,beta_g)=2", [&] { return intersection_number(sys.c(), sys.beta(g)) == 2; });
    timed(o, worst, 1.0, tag + " i(c,alpha_{g-1})=2", [&] { return intersection_number(sys.c(), sys.alpha(g - 1)) == 2; });
    timed(o, worst, 1.0, tag + " i(c,others)=0", [&] {
      for (int i = 1; i <= g; ++i) {
        if (i != g - 1 && intersection_number(sys.c(), sys.alpha(i)) != 0) return false;
        if (i != g && intersection_number(sys.c(), sys.beta(i)) != 0) return false;
      }
      return true;
    });
    timed(o, worst, 1.0, tag + " i(beta_g,psi(beta_g))=1",
          [&] { return intersection_number(sys.beta(g), apply_word(monodromy_psi(sys), sys.beta(g))) == 1; });
    for (long n = 0; n <= 10; ++n) {
      const std::string tn = tag + " n=" + std::to_string(n);
      timed(o, worst, 1.0, tn + " i(alpha_{g-1},beta_{g,n})=4n",
            [&] { return intersection_number(sys.alpha(g - 1), beta_gn(sys, n)) == static_cast<std::size_t>(4 * n); });
      timed(o, worst, 1.0, tn + " i(alpha_g,beta_{g,n})=1",
            [&] { return intersection_number(sys.alpha(g), beta_gn(sys, n)) == 1; });
    }
  }
  o.note << "g=2..5, n=0..10 exact; slowest check " << worst << " s (limit 1 s) ";
}

void square_identity(Outcome& o) {
  int pairs = 0, nontrivial = 0, natural = 0;
  for (int g : {2, 3}) {
    testing::CurveSampler gen(standard_curve_system(g), 7000 + g);
    for (int it = 0; it < 150; ++it) {
      const Curve a = gen.curve(5), b = gen.curve(5);
      const std::size_t ab = intersection_number(a, b);
      o.require(intersection_number(dehn_twist(b, a), b) == ab * ab, "square identity " + a.to_string() + " | " + b.to_string());
      ++pairs;
      nontrivial += ab > 1;
      const TwistWord f = gen.word(5);
      o.require(intersection_number(apply_word(f, a), apply_word(f, b)) == ab, "naturality");
      ++natural;
    }
  }
  o.require(pairs >= 200, "fewer than 200 pairs");
  o.note << pairs << " random pairs (" << nontrivial << " with i>1), " << natural << " naturality checks, exact ";
}

void alexander_invariance(Outcome& o) {
  for (int g = 2; g <= 4; ++g) {
    const auto coeffs = oracle::seifert_alexander(oracle::torus_knot_seifert_matrix(g));
    LaurentPoly expected;
    for (std::size_t k = 0; k < coeffs.size(); ++k) expected.add(static_cast<int>(k), coeffs[k]);
    expected = expected.normalized();
    const auto sys = standard_curve_system(g);
    for (long n = 0; n <= 5; ++n) {
      o.require(alexander_polynomial(monodromy_phi(sys, n), g) == expected,
                "g=" + std::to_string(g) + " n=" + std::to_string(n));
    }
  }
  const std::string g2 = alexander_polynomial(monodromy_phi(2, 0), 2).to_string();
  o.require(g2 == "t^4 - t^3 + t^2 - t + 1", "g=2 value " + g2);
  o.note << "g=2..4, n=0..5 match the Seifert-matrix oracle; g=2: " << g2 << " ";
}

void staircase_recursion(Outcome& o) {
  const auto tre = staircase_from_alexander(parse_polynomial("t^2 - t + 1"));
  const auto cin = staircase_from_alexander(parse_polynomial("t^4 - t^3 + t^2 - t + 1"));
  o.require(tre.deltas() == std::vector<std::int64_t>{-1, 0}, "trefoil deltas");
  o.require(cin.deltas() == std::vector<std::int64_t>{-2, -1, 0}, "cinquefoil deltas");
  for (const auto* s : {&tre, &cin}) {
    const auto prof = lspace_profile(*s);
    o.require(prof.max_rank() <= 1, "rank above 1");
    o.require(prof.total_rank() == static_cast<std::int64_t>(s->alexander().terms().size()), "total rank");
  }
  o.note << "trefoil (-1,0), cinquefoil (-2,-1,0), ranks <= 1, total = #nonzero coefficients ";
}

void certificate_bounds(Outcome& o) {
  const auto t0 = Clock::now();
  for (int g = 2; g <= 4; ++g) {
    for (long n = 0; n <= 10; ++n) {
      const Certificate c = certify(g, n);
      const std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n);
      o.require(c.final_bound == 16 * n * n - 5, tag + " final bound");
      o.require((c.verdict == Verdict::ObstructionFound) == (n >= 1), tag + " verdict");
      const auto& base = std::get<RankInterval>(c.find_tag("base_bound")->output);
      o.require(base.hi && *base.hi == 2, tag + " base bound");
      o.require(detail::lower_of(c.find_tag("hf_lower_bound")->output) == 16 * n * n - 3, tag + " HF lower bound");
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "sweep over 30 s");
  o.note << "g=2..4, n=0..10 exact; sweep " << dt << " s (limit 30 s) ";
}

void cross_validation(Outcome& o) {
  for (long n = 1; n <= 3; ++n) {
    const CrossValidation r = cross_validate(2, n);
    o.require(r.direct >= r.engine_bound && r.non_isotopic, "n=" + std::to_string(n));
    o.note << "n=" << n << ": i=" << r.direct << " >= " << r.engine_bound << "; ";
  }
}

void performance(Outcome& o) {
  const auto sys = standard_curve_system(2);
  auto t0 = Clock::now();
  const std::size_t i = intersection_number(sys.alpha(1), beta_gn(sys, 50));
  const double t_iota = seconds_since(t0);
  o.require(i == 200, "i(alpha_1,beta_{2,50}) = " + std::to_string(i));
  o.require(t_iota < 5.0, "intersection over 5 s");
  t0 = Clock::now();
  const Certificate c = certify(2, 100);
  const double t_cert = seconds_since(t0);
  o.require(c.final_bound == 159995, "certify(2,100) bound");
  o.require(t_cert < 10.0, "certify over 10 s");
  o.note << "i(alpha_1,beta_{2,50})=" << i << " in " << t_iota << " s (limit 5 s); certify(2,100) in " << t_cert
         << " s (limit 10 s) ";
}

void tripwire(Outcome& o) {
  const auto base = standard_curve_words(3);
  int aborted = 0, total = 0;
  auto attempt = [&](const CurveWords& w, const std::string& what) {
    ++total;
    try {
      certify(w, 2);
      o.require(false, what + " certified");
    } catch (const Error& e) {
      o.require(e.kind() == ErrorKind::AnchorViolation, what + " raised " + std::string(to_string(e.kind())));
      aborted += e.kind() == ErrorKind::AnchorViolation;
    }
  };
  for (std::size_t i = 0; i < base.alphas.size(); ++i) {
    auto w = base;
    w.alphas[i] = i == 0 ? "e3+" : "e1+";
    attempt(w, "alpha_" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < base.betas.size(); ++i) {
    auto w = base;
    w.betas[i] = i == 0 ? "e4+" : "e2+";
    attempt(w, "beta_" + std::to_string(i + 1));
  }
  auto w = base;
  w.c = "e1+ e2+ e1- e2-";
  attempt(w, "c");
  o.note << aborted << "/" << total << " mutated words abort with AnchorViolation ";
}

}  // namespace

int main() {
  criterion(1, "intersection anchors", intersection_anchors);
  criterion(2, "square identity and naturality", square_identity);
  criterion(3, "Alexander invariance", alexander_invariance);
  criterion(4, "staircase recursion", staircase_recursion);
  criterion(5, "certificate bounds", certificate_bounds);
  criterion(6, "cross-validation", cross_validation);
  criterion(7, "performance", performance);
  criterion(8, "anchor tripwire", tripwire);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
