#pragma once

#include <string>

#include "polyidp/json_io.hpp"

namespace polyidp {

enum class ReportKind { SNP, IDP, TwoPM, MLP, Lemma41, Matrix, Thm43, Decompose, Explore };
enum class Verdict { Pass, Fail };

std::string to_string(ReportKind k);
std::string to_string(Verdict v);

/// Outcome of one verification run. A Fail always carries at least one
/// counterexample and a Pass carries none.
struct Report {
    ReportKind kind = ReportKind::SNP;
    Json instance = Json::object();
    Verdict verdict = Verdict::Pass;
    Json witnesses = Json::array();
    Json counterexamples = Json::array();
    Json stats = Json::object();
    long long millis = 0;

    bool passed() const { return verdict == Verdict::Pass; }

    /// Sets the verdict from the counterexample list.
    void finalize();

    /// Timing is left out unless requested so that output is reproducible.
    Json to_json(bool include_timing = false) const;
};

} // namespace polyidp
