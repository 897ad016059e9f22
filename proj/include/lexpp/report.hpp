#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lexpp/ideal_file.hpp"
#include "lexpp/stabilize.hpp"
#include "lexpp/theorem.hpp"

namespace lexpp {

/// Deterministic, diff-stable rendering of a step log.
inline std::string render_step_log(const std::vector<TransformStep>& log) {
    std::ostringstream os;
    os << "steps applied: " << log.size() << "\n";
    for (std::size_t i = 0; i < log.size(); ++i) {
        os << "  " << (i + 1) << ". " << log[i].str();
        if (!log[i].audits.empty()) {
            os << "  [betti non-decreasing over char";
            for (const BettiAudit& a : log[i].audits) os << ' ' << a.field.str();
            os << ']';
        }
        os << "\n";
    }
    return os.str();
}

/// Deterministic rendering of a theorem verification report.  Failures
/// append a counterexample block with the serialized instance so the
/// run can be reproduced exactly.
inline std::string render_report(const TheoremReport& report) {
    std::ostringstream os;
    os << "verification report (seed " << report.instance.seed << ", D " << report.D << ")\n";
    os << "I = " << report.instance.I.str() << "\n";
    os << "L = " << report.L.str() << "\n";
    os << "P + Ltilde + L = " << report.combined.str() << "\n";
    os << "hilbert function match: " << (report.hf_match ? "yes" : "NO") << "\n";
    for (const auto& [field, ok] : report.betti_ok)
        os << "betti bound over char " << field.str() << ": " << (ok ? "ok" : "VIOLATED")
           << "\n";
    if (report.all_ok()) {
        os << "result: pass\n";
    } else {
        os << "result: FAIL\n";
        os << "counterexample:\n";
        std::istringstream serialized(render_ideal_file(IdealFile::from_instance(report.instance)));
        std::string line;
        while (std::getline(serialized, line)) os << "  " << line << "\n";
        os << "  # seed " << report.instance.seed << "\n";
    }
    return os.str();
}

}  // namespace lexpp
