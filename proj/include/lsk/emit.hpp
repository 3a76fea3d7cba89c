#pragma once

// Certificate serialization. JSON keys are emitted in a fixed order and
// nothing time- or host-dependent is written, so output is byte-stable.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "lsk/certificate.hpp"

namespace lsk {

inline constexpr int kCertificateSchemaVersion = 1;

enum class Format { Text, Json };

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson output_to_json(const StepOutput& o) {
  ojson j = ojson::object();
  if (auto* r = std::get_if<RankInterval>(&o)) {
    j["lo"] = r->lo;
    j["hi"] = r->hi ? ojson(*r->hi) : ojson(nullptr);
  } else if (auto* b = std::get_if<SignedBound>(&o)) {
    j["bound"] = b->value;
  } else {
    j["verdict"] = to_string(std::get<Verdict>(o));
  }
  return j;
}

inline StepKind step_kind_from(const std::string& s) {
  for (auto k : {StepKind::RankFact, StepKind::TrianglePropagation, StepKind::ArithmeticBound, StepKind::Conclusion}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::InvalidInput, "unknown step kind '" + s + "'");
}

inline Verdict verdict_from(const std::string& s) {
  if (s == to_string(Verdict::ObstructionFound)) return Verdict::ObstructionFound;
  if (s == to_string(Verdict::Inconclusive)) return Verdict::Inconclusive;
  throw Error(ErrorKind::InvalidInput, "unknown verdict '" + s + "'");
}

inline StepOutput output_from_json(const ojson& j) {
  if (j.contains("verdict")) return verdict_from(j.at("verdict").get<std::string>());
  if (j.contains("bound")) return SignedBound{j.at("bound").get<std::int64_t>()};
  RankInterval r;
  r.lo = j.at("lo").get<std::int64_t>();
  if (!j.at("hi").is_null()) r.hi = j.at("hi").get<std::int64_t>();
  return r;
}

inline std::string render_output(const StepOutput& o) {
  if (auto* r = std::get_if<RankInterval>(&o)) return r->is_exact() ? "= " + std::to_string(r->lo) : "in " + r->to_string();
  if (auto* b = std::get_if<SignedBound>(&o)) return "= " + std::to_string(b->value);
  return to_string(std::get<Verdict>(o));
}

inline std::string render_refs(const std::vector<std::size_t>& refs) {
  std::string s;
  for (std::size_t k = 0; k < refs.size(); ++k) s += (k ? ", #" : "#") + std::to_string(refs[k]);
  return s;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Certificate& cert) {
  using detail::ojson;
  ojson j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["genus"] = cert.genus;
  j["n"] = cert.n;
  ojson steps = ojson::array();
  for (const auto& s : cert.steps) {
    ojson st;
    st["index"] = s.index;
    st["kind"] = to_string(s.kind);
    st["rule"] = s.rule;
    st["label"] = s.label;
    st["tag"] = s.tag;
    ojson in;
    in["steps"] = s.refs;
    in["curves"] = s.curves;
    in["grading"] = s.grading ? ojson(*s.grading) : ojson(nullptr);
    st["inputs"] = std::move(in);
    st["output"] = detail::output_to_json(s.output);
    st["citation"] = {{"anchor", s.citation.anchor}, {"statement", s.citation.statement}};
    steps.push_back(std::move(st));
  }
  j["steps"] = std::move(steps);
  j["final_bound"] = cert.final_bound;
  j["verdict"] = to_string(cert.verdict);
  return j;
}

/// Inverse of to_json. Structural errors surface as InvalidInput.
inline Certificate certificate_from_json(const nlohmann::ordered_json& j) {
  try {
    if (j.at("schema_version").get<int>() != kCertificateSchemaVersion) {
      throw Error(ErrorKind::InvalidInput, "unsupported schema_version");
    }
    Certificate c;
    c.genus = j.at("genus").get<int>();
    c.n = j.at("n").get<long>();
    for (const auto& st : j.at("steps")) {
      DerivationStep s;
      s.index = st.at("index").get<std::size_t>();
      s.kind = detail::step_kind_from(st.at("kind").get<std::string>());
      s.rule = st.at("rule").get<std::string>();
      s.label = st.at("label").get<std::string>();
      s.tag = st.at("tag").get<std::string>();
      const auto& in = st.at("inputs");
      s.refs = in.at("steps").get<std::vector<std::size_t>>();
      s.curves = in.at("curves").get<std::vector<std::string>>();
      if (!in.at("grading").is_null()) s.grading = in.at("grading").get<std::int64_t>();
      s.output = detail::output_from_json(st.at("output"));
      s.citation.anchor = st.at("citation").at("anchor").get<std::string>();
      s.citation.statement = st.at("citation").at("statement").get<std::string>();
      c.steps.push_back(std::move(s));
    }
    c.final_bound = j.at("final_bound").get<std::int64_t>();
    c.verdict = detail::verdict_from(j.at("verdict").get<std::string>());
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed certificate: ") + e.what());
  }
}

inline Certificate parse_certificate(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed certificate: ") + e.what());
  }
  return certificate_from_json(j);
}

/// Text: one line per step, then a closing line with the bound and verdict.
inline std::string emit_certificate(const Certificate& cert, Format format) {
  if (format == Format::Json) return to_json(cert).dump(2) + "\n";
  std::string out = "certificate g=" + std::to_string(cert.genus) + " n=" + std::to_string(cert.n) + "\n";
  for (const auto& s : cert.steps) {
    std::string line = "#" + std::to_string(s.index) + " [" + to_string(s.kind) + "] " + s.label + " " +
                       detail::render_output(s.output) + "  (" + s.rule;
    if (!s.refs.empty()) line += " of " + detail::render_refs(s.refs);
    line += "; " + s.citation.anchor + ")";
    out += line + "\n";
  }
  const bool above = cert.final_bound > 1;
  out += "rk HFK(S^3,K_" + std::to_string(cert.n) + ";" + std::to_string(-cert.genus + 1) + ") >= 16n^2-5 = " +
         std::to_string(cert.final_bound) + (above ? " > 1" : " <= 1") + ": " + to_string(cert.verdict) +
         (above ? ", K_" + std::to_string(cert.n) + " is not an L-space knot" : "") + "\n";
  return out;
}

}  // namespace lsk
