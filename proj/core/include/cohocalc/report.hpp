#pragma once

#include <string>
#include <vector>

namespace cohocalc {

enum class Verdict { pass, fail, assumption };

std::string verdict_name(Verdict v);

/// One checked step of a scenario: a computed value against an expected one,
/// with the provenance of the expected value. Steps of kind `assumption`
/// record input facts that are consumed, not computed.
struct Step {
    std::string label;
    std::string computed;
    std::string expected;
    std::string citation;
    Verdict verdict = Verdict::pass;
};

struct Report {
    std::string scenario;
    std::vector<Step> steps;

    /// Overall pass iff no step failed (assumptions do not fail).
    bool passed() const;
    std::string verdict_string() const { return passed() ? "pass" : "fail"; }

    void add(Step s) { steps.push_back(std::move(s)); }
    /// Compares computed == expected and records pass/fail.
    void check(std::string label, std::string computed, std::string expected,
               std::string citation);
    void assume(std::string label, std::string fact, std::string citation);

    /// Appends another report's steps with "<name>: " prefixed labels.
    void absorb(const Report& other);
};

/// Machine-readable form:
/// {"scenario": str, "steps": [{label, computed, expected, citation, verdict}],
///  "verdict": str}
std::string report_to_json(const Report& r);

/// Human-readable table.
std::string report_to_text(const Report& r);

} // namespace cohocalc
