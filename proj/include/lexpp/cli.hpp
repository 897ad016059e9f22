#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lexpp/betti.hpp"
#include "lexpp/compress.hpp"
#include "lexpp/hilbert.hpp"
#include "lexpp/ideal_file.hpp"
#include "lexpp/report.hpp"
#include "lexpp/shift.hpp"
#include "lexpp/stabilize.hpp"
#include "lexpp/theorem.hpp"

namespace lexpp {

/// Exit codes of the command-line interface.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  // a checked property failed; counterexample printed
    kExitUsage = 2,      // bad invocation or unparseable input
    kExitTruncation = 3  // truncation or step-cap exhausted
};

namespace cli_detail {

struct Usage : Error {
    explicit Usage(const std::string& what) : Error(what) {}
};

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
    std::set<std::string> flags;

    bool has_flag(const std::string& name) const { return flags.count(name) > 0; }

    std::optional<std::string> option(const std::string& name) const {
        auto it = options.find(name);
        if (it == options.end()) return std::nullopt;
        return it->second;
    }

    long long int_option(const std::string& name, long long fallback) const {
        auto v = option(name);
        if (!v) return fallback;
        try {
            std::size_t used = 0;
            long long out = std::stoll(*v, &used);
            if (used != v->size()) throw std::invalid_argument("junk");
            return out;
        } catch (const std::exception&) {
            throw Usage("option --" + name + " expects an integer, got '" + *v + "'");
        }
    }

    long long require_int(const std::string& name) const {
        if (!option(name)) throw Usage("missing required option --" + name);
        return int_option(name, 0);
    }
};

inline Args parse_args(const std::vector<std::string>& argv, std::size_t from,
                       const std::set<std::string>& value_options,
                       const std::set<std::string>& flag_options) {
    Args args;
    for (std::size_t i = from; i < argv.size(); ++i) {
        const std::string& tok = argv[i];
        if (tok.rfind("--", 0) == 0) {
            const std::string name = tok.substr(2);
            if (flag_options.count(name)) {
                args.flags.insert(name);
            } else if (value_options.count(name)) {
                if (i + 1 >= argv.size()) throw Usage("option " + tok + " needs a value");
                if (name == "char")  // repeatable
                    args.options[name] += (args.options.count(name) ? "," : "") + argv[++i];
                else
                    args.options[name] = argv[++i];
            } else {
                throw Usage("unknown option " + tok);
            }
        } else {
            args.positional.push_back(tok);
        }
    }
    return args;
}

inline IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Usage("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal_file(buffer.str());
}

inline std::vector<FieldSpec> parse_chars(const std::string& csv) {
    std::vector<FieldSpec> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            out.emplace_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw Usage("bad characteristic '" + tok + "' (need 0 or a prime)");
        }
    }
    if (out.empty()) throw Usage("empty characteristic list");
    return out;
}

/// 1-based pair options --a/--b validated against the ring.
inline std::pair<int, int> pair_option(const Args& args, const RingContext& ring) {
    const long long a = args.require_int("a");
    const long long b = args.require_int("b");
    if (a < 1 || b < 1 || a > ring.var_count() || b > ring.var_count())
        throw Usage("--a/--b must name variables between 1 and " +
                    std::to_string(ring.var_count()));
    if (a >= b) throw Usage("--a must be lex-larger than --b (a < b as indices)");
    return {static_cast<int>(a - 1), static_cast<int>(b - 1)};
}

inline int truncation_for(const Args& args, const MonomialIdeal& I, const PurePowers& P) {
    const long long d = args.int_option("D", default_truncation(I, P));
    if (d < 0) throw Usage("--D must be non-negative");
    return static_cast<int>(d);
}

inline void print_hf(const HilbertFunction& hf, bool machine, std::ostream& out) {
    if (machine) {
        for (int d = 0; d <= hf.truncation(); ++d) out << d << '\t' << hf.at(d) << "\n";
        return;
    }
    out << "  d   dim\n";
    for (int d = 0; d <= hf.truncation(); ++d) out << "  " << d << "   " << hf.at(d) << "\n";
}

inline void print_betti(const BettiTable& table, bool machine, std::ostream& out) {
    if (machine) {
        for (const auto& [key, value] : table.entries())
            out << table.field().str() << '\t' << key.first << '\t' << key.second << '\t'
                << value << "\n";
        return;
    }
    out << "betti table over char " << table.field().str() << "\n";
    if (table.entries().empty()) {
        out << "  (empty)\n";
        return;
    }
    out << "  i  j  b_{i,j}\n";
    for (const auto& [key, value] : table.entries())
        out << "  " << key.first << "  " << key.second << "  " << value << "\n";
}

inline void print_ideal_block(const MonomialIdeal& I, const std::optional<PurePowers>& P,
                              std::ostream& out) {
    IdealFile file{I.ring(), P, PiecewiseLexSpec::none(I.ring()), I.min_gens()};
    out << render_ideal_file(file);
}

inline int cmd_hf(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    const int D = truncation_for(args, I, file.powers_or_none());
    const HilbertFunction hf = hf_ideal(I, D);
    if (!args.has_flag("machine")) out << "hilbert function of I = " << I.str() << "\n";
    print_hf(hf, args.has_flag("machine"), out);
    return kExitOk;
}

inline int cmd_betti(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    std::vector<FieldSpec> chars;
    if (auto csv = args.option("char")) {
        try {
            chars = parse_chars(*csv);
        } catch (const PreconditionError& e) {
            throw Usage(e.what());
        }
    } else {
        chars.emplace_back(0);
    }
    for (const FieldSpec& f : chars)
        print_betti(betti_table(I, f), args.has_flag("machine"), out);
    return kExitOk;
}

inline int cmd_shift(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    const auto [a, b] = pair_option(args, I.ring());
    const long long t = args.require_int("t");
    if (t < 0) throw Usage("--t must be non-negative");
    const int D = truncation_for(args, I, file.powers_or_none());
    const GradedMonomialSpace S = shift(I, a, b, static_cast<int>(t), D);
    if (args.has_flag("machine")) {
        for (int d = 0; d <= D; ++d)
            for (const Monomial& m : S.slice(d)) {
                out << d;
                for (int v = 0; v < I.ring().var_count(); ++v) out << (v ? " " : "\t") << m.exponent(v);
                out << "\n";
            }
        return kExitOk;
    }
    out << "shift (x" << (a + 1) << ",x" << (b + 1) << ") t=" << t << " of " << I.str()
        << ", slices up to D=" << D << "\n";
    for (int d = 0; d <= D; ++d) {
        out << "  deg " << d << ":";
        for (const Monomial& m : S.slice(d)) out << ' ' << m.str();
        out << "\n";
    }
    return kExitOk;
}

inline int cmd_compress(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    const auto [a, b] = pair_option(args, I.ring());
    const int D = truncation_for(args, I, file.powers_or_none());
    const MonomialIdeal C = with_truncation_retry(
        D, I.ring().var_count(), [&](int d) { return compress(I, a, b, d); });
    print_ideal_block(C, file.powers, out);
    return kExitOk;
}

inline int cmd_tstep(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    const auto [a, b] = pair_option(args, I.ring());
    const PurePowers P = file.powers_or_none();
    const int D = truncation_for(args, I, P);
    const MonomialIdeal T = with_truncation_retry(
        D, I.ring().var_count(), [&](int d) { return t_step(I, a, b, P, d); });
    print_ideal_block(T, file.powers, out);
    return kExitOk;
}

inline int cmd_stabilize(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const MonomialIdeal I = file.to_ideal();
    const PurePowers P = file.powers_or_none();
    const bool audit = args.has_flag("audit");
    StabilizeResult result =
        args.option("D") ? stabilize(I, P, static_cast<int>(args.int_option("D", 0)), audit)
                         : stabilize_auto(I, P, audit);
    out << "# strongly-stable-plus-P ideal with the Hilbert function of the input\n";
    print_ideal_block(result.B, file.powers, out);
    out << render_step_log(result.log);
    if (result.skipped > 0)
        out << "steps skipped (hypotheses failed for the intermediate ideal): "
            << result.skipped << "\n";
    return kExitOk;
}

inline int cmd_lexify(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const Instance inst = file.to_instance();
    const int D0 = truncation_for(args, inst.I, inst.P);
    const MonomialIdeal L = with_truncation_retry(
        D0, inst.ring.var_count(), [&](int d) { return lexify_theorem(inst, d); });
    out << "# lex ideal L\n";
    print_ideal_block(L, std::nullopt, out);
    out << "# P + Ltilde + L\n";
    print_ideal_block(inst.base_ideal().plus(L), file.powers, out);
    return kExitOk;
}

inline int cmd_check(const Args& args, std::ostream& out) {
    const IdealFile file = load_ideal_file(args.positional.at(0));
    const auto prop = args.option("prop");
    if (!prop) throw Usage("check needs --prop {shifting|compression|stable|lex|plex}");
    const MonomialIdeal I = file.to_ideal();
    const PurePowers P = file.powers_or_none();
    const int D = truncation_for(args, I, P);
    const int n = I.ring().var_count();
    bool ok = true;

    if (*prop == "shifting" || *prop == "compression") {
        const MonomialIdeal J = plex_ideal(file.plex);
        if (!I.contains(J) || !I.contains(pure_powers_ideal(P, I.ring())))
            throw PreconditionError("check: the file's I does not contain P + Ltilde");
        for (int a = 0; a < n - 1; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (*prop == "shifting") {
                    for (int t = 0; t <= 2; ++t) {
                        const bool pass = check_shifting_prop(I, J, a, b, t, D);
                        out << "shifting containment, pair (x" << (a + 1) << ",x" << (b + 1)
                            << "), t=" << t << ": " << (pass ? "ok" : "VIOLATED") << "\n";
                        ok = ok && pass;
                    }
                } else if (P.has_power(b)) {
                    const bool pass = check_compression_prop(I, J, a, b, P, D);
                    out << "compression containment, pair (x" << (a + 1) << ",x" << (b + 1)
                        << "): " << (pass ? "ok" : "VIOLATED") << "\n";
                    ok = ok && pass;
                }
            }
        }
    } else if (*prop == "stable") {
        ok = is_strongly_stable(I);
        out << "strongly stable: " << (ok ? "yes" : "no") << "\n";
        out << "stable: " << (is_stable(I) ? "yes" : "no") << "\n";
    } else if (*prop == "lex") {
        ok = is_lex(I, D);
        out << "lex: " << (ok ? "yes" : "no") << "\n";
    } else if (*prop == "plex") {
        // Component lexness was already enforced by the parser; what is
        // left to check is that I contains the declared subideals.
        ok = I.contains(plex_ideal(file.plex)) && I.contains(pure_powers_ideal(P, I.ring()));
        out << "P + Ltilde contained in I: " << (ok ? "yes" : "no") << "\n";
    } else {
        throw Usage("unknown property '" + *prop + "'");
    }
    return ok ? kExitOk : kExitViolation;
}

inline int cmd_verify(const Args& args, std::ostream& out) {
    const long long trials = args.require_int("trials");
    if (trials < 0) throw Usage("--trials must be non-negative");
    if (trials == 0) {
        out << "0 trials, nothing to verify\n";
        return kExitOk;
    }
    if (!args.option("seed"))
        throw Usage("randomized runs require an explicit --seed");
    const long long seed = args.require_int("seed");
    const long long n = args.require_int("n");
    if (n < 1) throw Usage("--n must be at least 1");
    const long long r_fixed = args.int_option("r", 0);
    if (r_fixed < 0 || r_fixed > n) throw Usage("--r must lie between 1 and n (0 = cycle)");
    const long long max_e = args.int_option("max-e", 4);
    const long long max_deg = args.int_option("max-deg", 4);
    std::vector<FieldSpec> chars = {FieldSpec(0), FieldSpec(2), FieldSpec(3)};
    if (auto csv = args.option("chars")) {
        try {
            chars = parse_chars(*csv);
        } catch (const PreconditionError& e) {
            throw Usage(e.what());
        }
    }

    bool all_ok = true;
    for (long long k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed = static_cast<std::uint64_t>(seed + k);
        const int r = r_fixed > 0 ? static_cast<int>(r_fixed)
                                  : 1 + static_cast<int>(k % n);
        const int budget = static_cast<int>(k % 4);
        const Instance inst = random_instance(trial_seed, static_cast<int>(n), r,
                                              static_cast<int>(max_e),
                                              static_cast<int>(max_deg), budget);
        const int D0 = default_truncation(inst.I, inst.P);
        const TheoremReport report =
            with_truncation_retry(D0, inst.ring.var_count(),
                                  [&](int d) { return verify_theorem(inst, d, chars); });
        if (report.all_ok()) {
            out << "trial " << k << " seed " << trial_seed << ": pass\n";
        } else {
            all_ok = false;
            out << "trial " << k << " seed " << trial_seed << ": FAIL\n";
            out << render_report(report);
        }
    }
    out << (all_ok ? "verify: all trials passed\n" : "verify: FAILURES found\n");
    return all_ok ? kExitOk : kExitViolation;
}

inline const char* kUsageText =
    "usage: lexpp <command> [arguments]\n"
    "commands:\n"
    "  hf <file> [--D d] [--machine]                 hilbert function of I\n"
    "  betti <file> [--char c]... [--machine]        graded betti numbers\n"
    "  shift <file> --a i --b j --t t [--D d]        (a,b,t)-shift slices\n"
    "  compress <file> --a i --b j [--D d]           {a,b}-compression\n"
    "  tstep <file> --a i --b j [--D d]              compress-minus-power step\n"
    "  stabilize <file> [--audit] [--D d]            strongly-stable-plus-P form\n"
    "  lexify <file> [--D d]                         lex ideal completing P + Ltilde\n"
    "  check <file> --prop <name> [--D d]            shifting|compression|stable|lex|plex\n"
    "  verify --trials N --seed S --n n [--r r] [--chars 0,2,3]\n"
    "                                                randomized end-to-end verification\n";

}  // namespace cli_detail

/// Entry point shared by the binary and the tests.  Returns the process
/// exit code; all output goes to the supplied streams.
inline int run_command(const std::vector<std::string>& argv, std::ostream& out,
                       std::ostream& err) {
    using namespace cli_detail;
    if (argv.empty()) {
        err << kUsageText;
        return kExitUsage;
    }
    const std::string& command = argv[0];
    try {
        const std::set<std::string> value_opts = {"D", "char", "a", "b", "t", "prop",
                                                  "trials", "seed", "n", "r", "max-e",
                                                  "max-deg", "chars"};
        const std::set<std::string> flag_opts = {"machine", "audit"};
        const Args args = parse_args(argv, 1, value_opts, flag_opts);

        const bool needs_file = command != "verify";
        if (needs_file && args.positional.size() != 1)
            throw Usage("command '" + command + "' expects exactly one input file");

        if (command == "hf") return cmd_hf(args, out);
        if (command == "betti") return cmd_betti(args, out);
        if (command == "shift") return cmd_shift(args, out);
        if (command == "compress") return cmd_compress(args, out);
        if (command == "tstep") return cmd_tstep(args, out);
        if (command == "stabilize") return cmd_stabilize(args, out);
        if (command == "lexify") return cmd_lexify(args, out);
        if (command == "check") return cmd_check(args, out);
        if (command == "verify") return cmd_verify(args, out);
        throw Usage("unknown command '" + command + "'");
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n" << kUsageText;
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "precondition error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RingMismatchError& e) {
        err << "ring mismatch: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TruncationError& e) {
        err << "truncation error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const StepCapError& e) {
        err << "step cap error: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const Error& e) {
        err << "property violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
}

}  // namespace lexpp
