#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lexpp/betti.hpp"
#include "lexpp/compress.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/ideal.hpp"
#include "lexpp/shift.hpp"
#include "lexpp/special_ideals.hpp"

namespace lexpp {

enum class StepKind { shift, shift_plus_p, compress, t_step };

inline const char* step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::shift: return "shift";
        case StepKind::shift_plus_p: return "shift+P";
        case StepKind::compress: return "compress";
        case StepKind::t_step: return "t-step";
    }
    return "?";
}

/// Betti tables bracketing one applied step, for monotonicity auditing.
struct BettiAudit {
    FieldSpec field;
    BettiTable before;
    BettiTable after;
};

/// One applied rewriting step.  Hilbert functions before and after are
/// recorded and always equal; Betti audits are present when auditing
/// was requested.
struct TransformStep {
    StepKind kind;
    int a;
    int b;
    int t;
    HilbertFunction hf_before;
    HilbertFunction hf_after;
    std::vector<BettiAudit> audits;

    std::string str() const {
        std::string s = std::string(step_kind_name(kind)) + " (x" + std::to_string(a + 1) +
                        ",x" + std::to_string(b + 1) + ")";
        if (kind == StepKind::shift_plus_p || kind == StepKind::shift)
            s += " t=" + std::to_string(t);
        return s;
    }
};

/// The operational check that B is a strongly-stable-plus-P ideal:
/// P is contained in B and every minimal generator other than a pure
/// power has all of its lexward exchanges inside B.
inline bool is_strongly_stable_plus_p(const MonomialIdeal& B, const PurePowers& P) {
    const MonomialIdeal P_ideal = pure_powers_ideal(P, B.ring());
    if (!B.contains(P_ideal)) return false;
    for (const Monomial& g : B.min_gens()) {
        bool pure_power = false;
        for (int i = 0; i < P.count() && !pure_power; ++i)
            if (g == Monomial::variable(B.ring().var_count(), i, P.exponent(i)))
                pure_power = true;
        if (pure_power) continue;
        for (int i = 1; i < g.var_count(); ++i) {
            if (g.exponent(i) == 0) continue;
            for (int j = 0; j < i; ++j)
                if (!B.contains(g.exchange(i, j))) return false;
        }
    }
    return true;
}

struct StabilizeResult {
    MonomialIdeal B;
    std::vector<TransformStep> log;
    /// Steps whose hypotheses failed for the current ideal (Hilbert
    /// function or closure would break) and which were therefore not
    /// applied.
    int skipped = 0;
};

namespace detail {

struct AuditState {
    bool enabled = false;
    std::vector<FieldSpec> fields;
    std::vector<BettiTable> current;  // tables of the current ideal, one per field
};

inline void refresh_audit(AuditState& audit, const MonomialIdeal& I) {
    if (!audit.enabled) return;
    audit.current.clear();
    for (const FieldSpec& f : audit.fields) audit.current.push_back(betti_table(I, f));
}

}  // namespace detail

/// Rewrite I into a strongly-stable-plus-P ideal with the same Hilbert
/// function by sweeping variable pairs with compress / t-step followed
/// by plain shifts, escalating to t > 0 shifts only at a stuck fixed
/// point.  Steps whose hypotheses fail for the current ideal are
/// skipped; every applied step preserves the Hilbert function and, when
/// audit is set, is checked for Betti monotonicity over the audit
/// characteristics (0 and 2).
inline StabilizeResult stabilize(const MonomialIdeal& I, const PurePowers& P, int D,
                                 bool audit = false, int step_cap = 1000) {
    const int n = I.ring().var_count();
    const MonomialIdeal P_ideal = pure_powers_ideal(P, I.ring());
    if (!I.contains(P_ideal))
        throw PreconditionError("stabilize: P is not contained in I");

    StabilizeResult result{I, {}, 0};
    if (is_strongly_stable_plus_p(result.B, P)) return result;

    detail::AuditState audit_state;
    if (audit) {
        audit_state.enabled = true;
        audit_state.fields = {FieldSpec(0), FieldSpec(2)};
        detail::refresh_audit(audit_state, result.B);
    }

    int applied = 0;
    auto try_apply = [&](StepKind kind, int a, int b, int t) -> bool {
        std::optional<MonomialIdeal> candidate;
        try {
            switch (kind) {
                case StepKind::t_step:
                    candidate = t_step(result.B, a, b, P, D);
                    break;
                case StepKind::compress:
                    candidate = compress(result.B, a, b, D);
                    break;
                case StepKind::shift_plus_p:
                    candidate = shift_plus_p(result.B, a, b, t, P, D);
                    break;
                case StepKind::shift:
                    break;
            }
        } catch (const HypothesisError&) {
            ++result.skipped;
            return false;
        } catch (const ClosureError&) {
            ++result.skipped;
            return false;
        }
        if (!candidate || *candidate == result.B) return false;

        TransformStep step{kind, a, b, t, hf_ideal(result.B, D), hf_ideal(*candidate, D), {}};
        if (step.hf_before != step.hf_after)
            throw HypothesisError("stabilize: applied step " + step.str() +
                                  " changed the Hilbert function");
        if (audit_state.enabled) {
            for (std::size_t fi = 0; fi < audit_state.fields.size(); ++fi) {
                BettiTable after = betti_table(*candidate, audit_state.fields[fi]);
                if (!betti_leq(audit_state.current[fi], after))
                    throw MonotonicityError(
                        "stabilize: step " + step.str() + " over characteristic " +
                        audit_state.fields[fi].str() + " decreased a Betti number; ideal before: " +
                        result.B.str() + ", after: " + candidate->str());
                step.audits.push_back(
                    {audit_state.fields[fi], audit_state.current[fi], after});
            }
            for (std::size_t fi = 0; fi < audit_state.fields.size(); ++fi)
                audit_state.current[fi] = step.audits[fi].after;
        }
        result.B = std::move(*candidate);
        result.log.push_back(std::move(step));
        if (++applied > step_cap)
            throw StepCapError("stabilize: step cap " + std::to_string(step_cap) +
                               " exceeded; last ideal " + result.B.str() + " after " +
                               std::to_string(result.log.size()) + " steps");
        return true;
    };

    while (true) {
        bool changed = false;
        for (int a = 0; a < n - 1; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (P.has_power(b))
                    changed |= try_apply(StepKind::t_step, a, b, 0);
                else
                    changed |= try_apply(StepKind::compress, a, b, 0);
                changed |= try_apply(StepKind::shift_plus_p, a, b, 0);
            }
        }
        if (changed) continue;
        if (is_strongly_stable_plus_p(result.B, P)) return result;
        // Stuck fixed point: escalate to t > 0 shifts on pairs whose
        // second variable carries a pure power.
        bool escalated = false;
        for (int a = 0; a < n - 1 && !escalated; ++a)
            for (int b = a + 1; b < n && !escalated; ++b)
                if (P.has_power(b))
                    for (int t = 1; t < P.exponent(b) && !escalated; ++t)
                        escalated = try_apply(StepKind::shift_plus_p, a, b, t);
        if (!escalated)
            throw StepCapError("stabilize: fixed point reached without the "
                               "strongly-stable-plus-P property; last ideal " +
                               result.B.str());
    }
}

/// stabilize with the default truncation policy and retry-on-truncation.
inline StabilizeResult stabilize_auto(const MonomialIdeal& I, const PurePowers& P,
                                      bool audit = false, int step_cap = 1000) {
    const int D0 = default_truncation(I, P);
    return with_truncation_retry(D0, I.ring().var_count(), [&](int D) {
        return stabilize(I, P, D, audit, step_cap);
    });
}

}  // namespace lexpp
