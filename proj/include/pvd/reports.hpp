#pragma once

// Uniform result record for the property checkers, with deterministic text
// and JSON renderings. A verdict is never stronger than the evidence: holds
// is reserved for structural certificates, bounded searches and sampled
// corroboration report holds-within-bounds, and fails always carries a
// witness.

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "pvd/errors.hpp"

namespace pvd {

enum class Verdict { Holds, FailsWith, HoldsWithinBounds };

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::FailsWith:
      return "fails";
    case Verdict::HoldsWithinBounds:
      return "holds-within-bounds";
  }
  fail(Errc::Validation, "unknown verdict");
}

struct CheckReport {
  std::string property;
  std::string subject;
  Verdict verdict = Verdict::Holds;
  std::string witness;  // filled exactly when verdict == FailsWith
  long samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();
};

inline std::string report_text(const CheckReport& r) {
  std::string out;
  out += "check: " + r.property + "\n";
  if (!r.subject.empty()) out += "subject: " + r.subject + "\n";
  out += "verdict: " + verdict_str(r.verdict) + "\n";
  if (!r.witness.empty()) out += "witness: " + r.witness + "\n";
  if (r.samples > 0) {
    out += "samples: " + std::to_string(r.samples) + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
  }
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  if (!r.details.empty()) out += "details: " + r.details.dump() + "\n";
  return out;
}

inline nlohmann::json report_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.property;
  j["subject"] = r.subject;
  j["verdict"] = verdict_str(r.verdict);
  j["witness"] = r.witness;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["notes"] = r.notes;
  j["details"] = r.details;
  return j;
}

}  // namespace pvd
