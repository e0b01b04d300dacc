#include "polyidp/report.hpp"

namespace polyidp {

std::string to_string(ReportKind k) {
    switch (k) {
        case ReportKind::SNP: return "SNP";
        case ReportKind::IDP: return "IDP";
        case ReportKind::TwoPM: return "2PM";
        case ReportKind::MLP: return "MLP";
        case ReportKind::Lemma41: return "Lemma41";
        case ReportKind::Matrix: return "Matrix";
        case ReportKind::Thm43: return "Thm43";
        case ReportKind::Decompose: return "Decompose";
        case ReportKind::Explore: return "Explore";
    }
    return "?";
}

std::string to_string(Verdict v) { return v == Verdict::Pass ? "Pass" : "Fail"; }

void Report::finalize() { verdict = counterexamples.empty() ? Verdict::Pass : Verdict::Fail; }

Json Report::to_json(bool include_timing) const {
    Json j = Json::object();
    j["kind"] = to_string(kind);
    j["instance"] = instance;
    j["verdict"] = to_string(verdict);
    j["witnesses"] = witnesses;
    j["counterexamples"] = counterexamples;
    Json s = stats;
    if (include_timing) s["millis"] = millis;
    j["stats"] = s;
    return j;
}

} // namespace polyidp
