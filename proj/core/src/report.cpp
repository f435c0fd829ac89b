#include "cohocalc/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace cohocalc {

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::assumption: return "assumption";
    }
    return "?";
}

bool Report::passed() const {
    return std::none_of(steps.begin(), steps.end(),
                        [](const Step& s) { return s.verdict == Verdict::fail; });
}

void Report::check(std::string label, std::string computed, std::string expected,
                   std::string citation) {
    Verdict v = computed == expected ? Verdict::pass : Verdict::fail;
    steps.push_back({std::move(label), std::move(computed), std::move(expected),
                     std::move(citation), v});
}

void Report::assume(std::string label, std::string fact, std::string citation) {
    steps.push_back({std::move(label), fact, fact, std::move(citation), Verdict::assumption});
}

void Report::absorb(const Report& other) {
    for (const Step& s : other.steps) {
        Step copy = s;
        copy.label = other.scenario + ": " + copy.label;
        steps.push_back(std::move(copy));
    }
}

std::string report_to_json(const Report& r) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    j["steps"] = nlohmann::ordered_json::array();
    for (const Step& s : r.steps) {
        nlohmann::ordered_json js;
        js["label"] = s.label;
        js["computed"] = s.computed;
        js["expected"] = s.expected;
        js["citation"] = s.citation;
        js["verdict"] = verdict_name(s.verdict);
        j["steps"].push_back(std::move(js));
    }
    j["verdict"] = r.verdict_string();
    return j.dump(2);
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "scenario: " << r.scenario << "\n";
    for (const Step& s : r.steps) {
        std::string tag = verdict_name(s.verdict);
        tag.resize(10, ' ');
        os << "  [" << tag << "] " << s.label << "\n";
        if (s.verdict == Verdict::assumption) {
            os << "               assumed: " << s.computed << "\n";
        } else {
            os << "               computed: " << s.computed << "\n";
            if (s.expected != s.computed)
                os << "               expected: " << s.expected << "\n";
        }
        if (!s.citation.empty())
            os << "               [" << s.citation << "]\n";
    }
    os << "verdict: " << r.verdict_string() << "\n";
    return os.str();
}

} // namespace cohocalc
