#include "hypbr/cli.hpp"

#include <json.hpp>

#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hypbr/obstruction.hpp"
#include "hypbr/selftest.hpp"

namespace hypbr::cli {

using nlohmann::json;

namespace {

const char* kUsageText = R"(usage: hypbr <command> [flags]

commands:
  gamma         --c <rat> --f "<poly in x>" --ell "<poly in t>"
  points        --c <rat> --f "<poly>" --place <p|inf> [--effort k]
  obstruct      --c <rat> --f "<poly>" --ell "<poly in t>" [--effort k] [--seed n]
  twist-family  --cmin <int> --cmax <int> [--effort k]
  residues      --c <rat> --f "<poly>" --ell "<poly in t>" [--place <q|inf>]
  selftest

flags: --pretty writes a human summary to stderr; JSON always goes to stdout.
exit codes: 0 ok, 1 mathematical failure, 2 usage, 3 bad polynomial,
            4 zero c, 5 f not monic squarefree, 6 ell not a unit.
)";

Rational parse_rational(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw UsageError{kUsage, "not a rational number: '" + s + "'"};
    }
}

struct Inputs {
    HyperCurve curve;
    EtaleElement ell;
};

Poly checked_poly(const std::string& text, char var) {
    try {
        return parse_poly(text, var);
    } catch (const std::exception& ex) {
        throw UsageError{kBadPoly, ex.what()};
    }
}

HyperCurve checked_curve(const Command& cmd) {
    Rational c = parse_rational(cmd.c);
    if (c == 0) throw UsageError{kZeroC, "--c must be nonzero"};
    Poly f = checked_poly(cmd.f, 'x');
    try {
        return HyperCurve(c, f);
    } catch (const std::exception& ex) {
        throw UsageError{kNotSquarefree, std::string("--f: ") + ex.what()};
    }
}

EtaleElement checked_ell(const HyperCurve& curve, const std::string& text) {
    Poly g = checked_poly(text, 't');
    EtaleElement e = reduce(curve_algebra(curve), g);
    if (!e.is_unit()) throw UsageError{kNotUnit, "--ell is not a unit modulo f"};
    return e;
}

json place_key(const Place& v) { return v.str(); }

json symbols_json(const BrauerElement& e) {
    json arr = json::array();
    for (const auto& s : e.symbols()) arr.push_back({{"a", s.a().str()}, {"b", s.b().str()}});
    return arr;
}

json residues_json(const BrauerElement& e, const std::vector<P1Place>& extra) {
    std::set<P1Place> places(extra.begin(), extra.end());
    for (const auto& s : e.symbols())
        for (const Poly* entry : {&s.a(), &s.b()}) {
            if (entry->is_constant()) continue;
            for (const auto& [h, mult] : factor_poly(*entry).factors)
                places.insert(P1Place::finite_unchecked(h));
        }
    places.insert(P1Place::infinity());
    json arr = json::array();
    for (const P1Place& v : places) {
        ResidueResult r = residue_at(e, v);
        const char* status = r.status == SquareStatus::Square          ? "trivial"
                             : r.status == SquareStatus::ProbablySquare ? "probably-trivial"
                                                                        : "nontrivial";
        arr.push_back({{"place", v.str()}, {"rep", r.rep.str('t')}, {"status", status}});
    }
    return arr;
}

json point_json(const LocalPoint& pt) {
    json j{{"x0", pt.x0.get_str()},
           {"kind", pt.kind == PointKind::Affine ? "affine" : "weierstrass"}};
    if (pt.kind == PointKind::Weierstrass) {
        j["branch"] = pt.branch.str();
        if (pt.precision > 0) j["precision"] = pt.precision;
    }
    return j;
}

json report_json(const ObstructionReport& rep) {
    json per = json::array();
    for (const auto& pe : rep.per_place) {
        json entries = json::array();
        for (const auto& [a, b] : pe.entries)
            entries.push_back({{"a", a.get_str()}, {"b", b.get_str()}});
        per.push_back({{"place", place_key(pe.place)},
                       {"invariant", pe.invariant.str()},
                       {"point", point_json(pe.point)},
                       {"entries", entries},
                       {"samples", pe.samples},
                       {"stable", pe.stable}});
    }
    return json{{"per_place", per}, {"total", rep.total.str()}, {"stable", rep.stable}};
}

int run_gamma(const Command& cmd, std::ostream& out, std::ostream& err) {
    HyperCurve curve = checked_curve(cmd);
    EtaleElement ell = checked_ell(curve, cmd.ell);
    BrauerElement e = gamma_prime(curve, ell);
    bool unram = is_unramified(curve, ell);
    json doc{{"command", "gamma"},
             {"inputs", {{"c", cmd.c}, {"f", curve.f().str()}, {"ell", ell.rep().str('t')}}},
             {"result",
              {{"symbols", symbols_json(e)},
               {"unramified", unram},
               {"norm", ell.norm().get_str()}}},
             {"certificate", {{"residues", residues_json(e, {})}}}};
    out << doc.dump(2) << "\n";
    if (cmd.pretty)
        err << "gamma'(ell): " << e.symbols().size() << " symbols, "
            << (unram ? "unramified" : "ramified") << "\n";
    return kOk;
}

Place checked_place(const std::string& text) {
    if (text == "inf") return Place::real();
    try {
        return Place::finite(Integer(text));
    } catch (const std::exception&) {
        throw UsageError{kUsage, "--place must be a prime or 'inf', got '" + text + "'"};
    }
}

int run_points(const Command& cmd, std::ostream& out, std::ostream& err) {
    HyperCurve curve = checked_curve(cmd);
    Place v = checked_place(cmd.place);
    auto pts = find_points(curve, v, cmd.effort, 5);
    auto weier = weierstrass_points_over(curve, v, cmd.effort);
    json found = json::array();
    for (const auto& pt : pts) found.push_back(point_json(pt));
    json wj = json::array();
    for (const auto& pt : weier) wj.push_back(point_json(pt));
    json doc{{"command", "points"},
             {"inputs", {{"c", cmd.c}, {"f", curve.f().str()}, {"place", cmd.place}}},
             {"result", {{"points", found}, {"weierstrass", wj}}},
             {"certificate", {{"effort", cmd.effort}}}};
    out << doc.dump(2) << "\n";
    if (cmd.pretty) err << pts.size() << " points found at " << v.str() << "\n";
    return pts.empty() && wj.empty() ? kMathFailure : kOk;
}

int run_obstruct(const Command& cmd, std::ostream& out, std::ostream& err) {
    HyperCurve curve = checked_curve(cmd);
    EtaleElement ell = checked_ell(curve, cmd.ell);
    ObstructionReport rep;
    try {
        rep = ct_pairing(curve, ell, cmd.effort);
    } catch (const LocalPointFailure& ex) {
        json doc{{"command", "obstruct"},
                 {"inputs", {{"c", cmd.c}, {"f", curve.f().str()}, {"ell", ell.rep().str('t')}}},
                 {"result", {{"error", ex.what()}}},
                 {"certificate", json::object()}};
        out << doc.dump(2) << "\n";
        return kMathFailure;
    }
    json doc{{"command", "obstruct"},
             {"inputs",
              {{"c", cmd.c},
               {"f", curve.f().str()},
               {"ell", ell.rep().str('t')},
               {"seed", cmd.seed}}},
             {"result", {{"total", rep.total.str()}, {"stable", rep.stable}}},
             {"certificate", report_json(rep)}};
    out << doc.dump(2) << "\n";
    if (cmd.pretty) err << "obstruction total: " << rep.total.str() << "\n";
    return kOk;
}

int run_twist_family(const Command& cmd, std::ostream& out, std::ostream& err) {
    auto rows = twist_family(Integer(cmd.cmin), Integer(cmd.cmax), cmd.effort);
    json arr = json::array();
    int disagreements = 0;
    for (const auto& row : rows) {
        if (!row.agree) ++disagreements;
        arr.push_back({{"c", row.c.get_str()},
                       {"direct", row.direct.str()},
                       {"formula", row.formula.str()},
                       {"law_sum", row.law_sum.str()},
                       {"stable", row.stable},
                       {"agree", row.agree}});
    }
    json doc{{"command", "twist-family"},
             {"inputs", {{"cmin", cmd.cmin}, {"cmax", cmd.cmax}}},
             {"result", {{"rows", arr}, {"disagreements", disagreements}}},
             {"certificate", {{"effort", cmd.effort}}}};
    out << doc.dump(2) << "\n";
    if (cmd.pretty)
        err << rows.size() << " curves, " << disagreements << " disagreement(s) flagged\n";
    return kOk;
}

int run_residues(const Command& cmd, std::ostream& out, std::ostream& err) {
    HyperCurve curve = checked_curve(cmd);
    EtaleElement ell = checked_ell(curve, cmd.ell);
    BrauerElement e = gamma_prime(curve, ell);
    std::vector<P1Place> extra;
    if (!cmd.place.empty()) {
        if (cmd.place == "inf")
            extra.push_back(P1Place::infinity());
        else
            extra.push_back(P1Place::finite(checked_poly(cmd.place, 0)));
    }
    json doc{{"command", "residues"},
             {"inputs", {{"c", cmd.c}, {"f", curve.f().str()}, {"ell", ell.rep().str('t')}}},
             {"result", {{"residues", residues_json(e, extra)}}},
             {"certificate", {{"symbols", symbols_json(e)}}}};
    out << doc.dump(2) << "\n";
    if (cmd.pretty) err << "residues computed\n";
    return kOk;
}

int run_selftest(const Command&, std::ostream& out, std::ostream& err) {
    std::ostringstream lines;
    int failures = run_acceptance(lines);
    json doc{{"command", "selftest"},
             {"inputs", json::object()},
             {"result", {{"failures", failures}, {"log", lines.str()}}},
             {"certificate", json::object()}};
    out << doc.dump(2) << "\n";
    err << lines.str();
    return failures == 0 ? kOk : kMathFailure;
}

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError{kUsage, std::string("missing command\n") + kUsageText};
    static const std::map<std::string, CommandKind> kinds = {
        {"gamma", CommandKind::Gamma},         {"points", CommandKind::Points},
        {"obstruct", CommandKind::Obstruct},   {"twist-family", CommandKind::TwistFamily},
        {"residues", CommandKind::Residues},   {"selftest", CommandKind::SelfTest},
    };
    auto it = kinds.find(args[0]);
    if (it == kinds.end())
        throw UsageError{kUsage, "unknown command '" + args[0] + "'\n" + kUsageText};
    Command cmd;
    cmd.kind = it->second;

    std::map<std::string, std::string> flags;
    for (size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--pretty") {
            cmd.pretty = true;
            continue;
        }
        if (a.rfind("--", 0) != 0) throw UsageError{kUsage, "unexpected argument '" + a + "'"};
        if (i + 1 >= args.size()) throw UsageError{kUsage, "flag " + a + " needs a value"};
        flags[a.substr(2)] = args[++i];
    }
    auto take = [&](const char* name, bool required) {
        auto f = flags.find(name);
        if (f == flags.end()) {
            if (required)
                throw UsageError{kUsage, std::string("missing required flag --") + name};
            return std::string();
        }
        std::string v = f->second;
        flags.erase(f);
        return v;
    };
    auto take_long = [&](const char* name, long fallback, bool required) {
        std::string v = take(name, required);
        if (v.empty()) return fallback;
        try {
            return std::stol(v);
        } catch (const std::exception&) {
            throw UsageError{kUsage, std::string("flag --") + name + ": not an integer"};
        }
    };

    switch (cmd.kind) {
        case CommandKind::Gamma:
            cmd.c = take("c", true);
            cmd.f = take("f", true);
            cmd.ell = take("ell", true);
            break;
        case CommandKind::Points:
            cmd.c = take("c", true);
            cmd.f = take("f", true);
            cmd.place = take("place", true);
            cmd.effort = static_cast<int>(take_long("effort", 3, false));
            break;
        case CommandKind::Obstruct:
            cmd.c = take("c", true);
            cmd.f = take("f", true);
            cmd.ell = take("ell", true);
            cmd.effort = static_cast<int>(take_long("effort", 4, false));
            cmd.seed = take_long("seed", 0, false);
            break;
        case CommandKind::TwistFamily:
            cmd.cmin = take_long("cmin", 0, true);
            cmd.cmax = take_long("cmax", 0, true);
            cmd.effort = static_cast<int>(take_long("effort", 4, false));
            break;
        case CommandKind::Residues:
            cmd.c = take("c", true);
            cmd.f = take("f", true);
            cmd.ell = take("ell", true);
            cmd.place = take("place", false);
            break;
        case CommandKind::SelfTest:
            break;
    }
    if (!flags.empty())
        throw UsageError{kUsage, "unknown flag --" + flags.begin()->first};
    return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    switch (cmd.kind) {
        case CommandKind::Gamma: return run_gamma(cmd, out, err);
        case CommandKind::Points: return run_points(cmd, out, err);
        case CommandKind::Obstruct: return run_obstruct(cmd, out, err);
        case CommandKind::TwistFamily: return run_twist_family(cmd, out, err);
        case CommandKind::Residues: return run_residues(cmd, out, err);
        case CommandKind::SelfTest: return run_selftest(cmd, out, err);
    }
    return kUsage;
}

int main_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Command cmd = parse_args(args);
        return run(cmd, out, err);
    } catch (const UsageError& ue) {
        err << "error: " << ue.message << "\n";
        return ue.code;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kMathFailure;
    }
}

}  // namespace hypbr::cli
