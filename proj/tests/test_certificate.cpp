#include <gtest/gtest.h>

#include "lsk/certificate.hpp"
#include "lsk/emit.hpp"

namespace lsk {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

std::int64_t lower(const Certificate& c, const std::string& tag) {
  const auto* s = c.find_tag(tag);
  EXPECT_NE(s, nullptr) << tag;
  return s ? detail::lower_of(s->output) : 0;
}

TEST(BaseBound, ThreeStepsEndingInZeroTwo) {
  for (int g : {2, 3, 5}) {
    const auto steps = derive_base_bound(g);
    ASSERT_EQ(steps.size(), 3u);
    EXPECT_EQ(steps[0].kind, StepKind::RankFact);
    EXPECT_EQ(std::get<RankInterval>(steps[0].output), RankInterval::exactly(1));
    EXPECT_EQ(steps[1].rule, "hfk_lspace_knot");
    EXPECT_EQ(std::get<RankInterval>(steps[1].output), RankInterval::exactly(1));
    EXPECT_EQ(steps[2].kind, StepKind::TrianglePropagation);
    EXPECT_EQ(std::get<RankInterval>(steps[2].output), (RankInterval{0, 2}));
  }
}

TEST(Certify, Examples) {
  const Certificate c21 = certify(2, 1);
  EXPECT_EQ(c21.final_bound, 11);
  EXPECT_EQ(c21.verdict, Verdict::ObstructionFound);
  const Certificate c30 = certify(3, 0);
  EXPECT_EQ(c30.final_bound, -5);
  EXPECT_EQ(c30.verdict, Verdict::Inconclusive);
  const Certificate c24 = certify(2, 4);
  EXPECT_EQ(c24.final_bound, 251);
  EXPECT_EQ(std::get<RankInterval>(c24.find_tag("hf_alpha_beta")->output), RankInterval::exactly(16));
}

TEST(Certify, EmbeddedBounds) {
  for (int g : {2, 3, 4}) {
    for (long n = 0; n <= 6; ++n) {
      const Certificate c = certify(g, n);
      EXPECT_EQ(c.final_bound, 16 * n * n - 5);
      EXPECT_EQ(*std::get<RankInterval>(c.find_tag("base_bound")->output).hi, 2);
      EXPECT_EQ(lower(c, "hf_lower_bound"), 16 * n * n - 3);
      EXPECT_EQ(c.verdict == Verdict::ObstructionFound, n >= 1);
    }
  }
}

TEST(Certify, BoundIsMonotoneAndGenusFree) {
  for (long n = 0; n < 6; ++n) {
    EXPECT_LT(certify(2, n).final_bound, certify(2, n + 1).final_bound);
    EXPECT_EQ(certify(2, n).final_bound, certify(4, n).final_bound);
  }
}

TEST(Certify, RejectsBadParameters) {
  EXPECT_EQ(kind_of([] { certify(1, 1); }), ErrorKind::GenusTooSmall);
  EXPECT_EQ(kind_of([] { certify(2, -1); }), ErrorKind::NegativePower);
}

TEST(Certify, StepsAreWellFormed) {
  const Certificate c = certify(3, 2);
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const auto& s = c.steps[k];
    EXPECT_EQ(s.index, k);
    for (auto r : s.refs) EXPECT_LT(r, k);
    EXPECT_FALSE(s.citation.anchor.empty());
    EXPECT_FALSE(s.citation.statement.empty());
    if (s.kind == StepKind::RankFact && s.rule == "hf_rank") {
      EXPECT_EQ(s.curves.size(), 2u);
    }
  }
  EXPECT_EQ(c.steps.back().kind, StepKind::Conclusion);
}

TEST(Replay, ReproducesCertificate) {
  for (int g : {2, 3}) {
    for (long n : {0L, 1L, 3L}) {
      const Certificate c = certify(g, n);
      EXPECT_EQ(replay(c), c);
    }
  }
}

TEST(Replay, DetectsTamperedRankFact) {
  Certificate c = certify(2, 2);
  for (auto& s : c.steps) {
    if (s.tag == "hf_alpha_beta") s.output = RankInterval::exactly(9);
  }
  EXPECT_NE(replay(c), c);
  Certificate d = certify(2, 2);
  for (auto& s : d.steps) {
    if (s.tag == "hf_alpha_beta") s.curves[0] = "a2";
  }
  EXPECT_NE(replay(d).steps, certify(2, 2).steps);
}

TEST(Json, RoundTripAndReplay) {
  for (long n : {0L, 2L}) {
    const Certificate c = certify(3, n);
    const std::string text = emit_certificate(c, Format::Json);
    const Certificate back = parse_certificate(text);
    EXPECT_EQ(back, c);
    EXPECT_EQ(replay(back).verdict, c.verdict);
    EXPECT_EQ(emit_certificate(back, Format::Json), text);
  }
}

TEST(Json, ExpectedTopLevelFields) {
  const auto j = to_json(certify(3, 2));
  EXPECT_EQ(j["final_bound"], 59);
  EXPECT_EQ(j["verdict"], "obstruction_found");
  EXPECT_EQ(j["schema_version"], kCertificateSchemaVersion);
  EXPECT_EQ(j["steps"][0]["citation"]["anchor"], "hf-rank");
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "genus", "n", "steps", "final_bound", "verdict"}));
}

TEST(Json, MalformedInput) {
  EXPECT_EQ(kind_of([] { parse_certificate(std::string_view("{")); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { parse_certificate(std::string_view("{\"schema_version\": 1}")); }), ErrorKind::InvalidInput);
}

TEST(Text, FinalLines) {
  const std::string t21 = emit_certificate(certify(2, 1), Format::Text);
  const std::string last = t21.substr(t21.rfind('\n', t21.size() - 2) + 1);
  EXPECT_NE(last.find("16n^2-5 = 11 > 1"), std::string::npos) << last;
  EXPECT_NE(emit_certificate(certify(2, 0), Format::Text).find("inconclusive"), std::string::npos);
  EXPECT_EQ(emit_certificate(certify(2, 1), Format::Text), t21);
}

TEST(Text, OneLinePerStep) {
  const Certificate c = certify(2, 1);
  const std::string t = emit_certificate(c, Format::Text);
  EXPECT_EQ(static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n')), c.steps.size() + 2);
}

TEST(Tripwire, MutatedStandardWordsAbort) {
  // Swap each word for a simple curve that breaks some anchor.
  const auto base = standard_curve_words(3);
  std::vector<CurveWords> mutants;
  for (std::size_t i = 0; i < base.alphas.size(); ++i) {
    auto w = base;
    w.alphas[i] = i == 0 ? "e3+" : "e1+";
    mutants.push_back(w);
  }
  for (std::size_t i = 0; i < base.betas.size(); ++i) {
    auto w = base;
    w.betas[i] = i == 0 ? "e4+" : "e2+";
    mutants.push_back(w);
  }
  auto w = base;
  w.c = "e1+ e2+ e1- e2-";
  mutants.push_back(w);
  for (const auto& m : mutants) EXPECT_EQ(kind_of([&] { certify(m, 2); }), ErrorKind::AnchorViolation);
}

TEST(CrossValidation, DirectCountMeetsBound) {
  for (long n = 1; n <= 3; ++n) {
    const CrossValidation r = cross_validate(2, n);
    EXPECT_EQ(r.engine_bound, 16 * n * n - 3);
    EXPECT_GE(r.direct, r.engine_bound);
    EXPECT_EQ(r.slack, r.direct - r.engine_bound);
    EXPECT_TRUE(r.non_isotopic);
  }
}

TEST(CrossValidation, PreconditionsAndBudget) {
  EXPECT_EQ(kind_of([] { cross_validate(2, 0); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { cross_validate(2, 3, 100); }), ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([] { cross_validate(2, 1000); }), ErrorKind::BudgetExceeded);
}

}  // namespace
}  // namespace lsk
