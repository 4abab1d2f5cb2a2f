#include "fallcalc/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fallcalc/casorati.hpp"
#include "fallcalc/config.hpp"
#include "fallcalc/expr.hpp"
#include "fallcalc/fermat.hpp"
#include "fallcalc/io.hpp"
#include "fallcalc/theorems.hpp"

namespace fallcalc {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
    json detail;
    InputError(const std::string& what, json d = {}) : std::runtime_error(what), detail(std::move(d)) {}
};

Config buildConfig(const std::string& configPath, const std::vector<std::string>& overrides) {
    Config cfg;
    if (!configPath.empty()) cfg = Config::fromFile(configPath);
    for (const auto& kv : overrides) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw InputError("override must look like key=value", {{"got", kv}});
        cfg.apply(kv.substr(0, eq), kv.substr(eq + 1));
    }
    cfg.validate();
    return cfg;
}

RationalFunction parseFunction(const std::string& text) {
    try {
        return evalExpr(parseExpr(text));
    } catch (const SyntaxError& e) {
        throw InputError(e.what(), {{"input", text},
                                    {"offset", e.offset},
                                    {"expected", e.expected}});
    }
}

GaussianRational parseValue(const std::string& text) {
    try {
        return parseConstant(text);
    } catch (const SyntaxError& e) {
        throw InputError(e.what(), {{"input", text}, {"offset", e.offset}});
    }
}

std::vector<GaussianRational> parseValueList(const std::string& text) {
    std::vector<GaussianRational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(parseValue(item));
    }
    if (out.empty()) throw InputError("empty value list", {{"got", text}});
    return out;
}

PointKind kindFrom(const std::string& s) {
    if (s == "zeros") return PointKind::zero;
    if (s == "poles") return PointKind::pole;
    throw InputError("kind must be zeros or poles", {{"got", s}});
}

std::shared_ptr<DivisorSource> loadDivisor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open divisor file", {{"path", path}});
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InputError("divisor file is not valid JSON", {{"path", path}, {"parse", e.what()}});
    }
    return divisorSourceFromJson(j);
}

// Functions contribute their zero/pole divisor; files may also carry lattices.
std::shared_ptr<DivisorSource> sourceFor(const std::string& expr, const std::string& divisorPath,
                                         const std::optional<GaussianRational>& value,
                                         const Config& cfg) {
    if (!expr.empty() && !divisorPath.empty())
        throw InputError("give an expression or --divisor, not both");
    if (!divisorPath.empty()) return loadDivisor(divisorPath);
    if (expr.empty()) throw InputError("an expression or --divisor is required");
    RationalFunction f = parseFunction(expr);
    if (value) f = f - RationalFunction::constant(*value);
    return std::make_shared<FiniteSource>(Divisor::fromRationalFunction(f, cfg.tol));
}

Rat radiusFor(const std::shared_ptr<DivisorSource>& src, const std::string& radiusText) {
    if (!radiusText.empty()) {
        GaussianRational r = parseValue(radiusText);
        if (!r.isReal() || r.re < 0) throw InputError("radius must be a nonnegative rational");
        return r.re;
    }
    if (src->finite()) return src->coveringRadius();
    throw InputError("--radius is required for an unbounded divisor");
}

int verdictExit(Verdict v) {
    switch (v) {
        case Verdict::holds: return 0;
        case Verdict::violated: return 1;
        case Verdict::inconclusive: return 1;
        case Verdict::preconditionFailed: return 2;
    }
    return 3;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

json factoredToJson(const Poly& p, const TolerancePolicy& tol) {
    json j;
    try {
        FactoredPoly fp = exactRoots(p);
        j["exact"] = true;
        j["factored"] = fp.str();
        json roots = json::array();
        for (const auto& [at, mult] : fp.roots)
            roots.push_back({{"at", pointToJson(at)}, {"mult", mult}});
        j["roots"] = roots;
        j["lead"] = fp.lead.str();
    } catch (const ExactFactorizationIncomplete&) {
        j["exact"] = false;
        json roots = json::array();
        for (const auto& r : numericRoots(p, tol))
            roots.push_back({{"re", r.at.real()}, {"im", r.at.imag()}, {"mult", r.mult}});
        j["roots"] = roots;
    }
    return j;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact difference-calculus toolkit for zeros, chains, and value distribution"};
    app.require_subcommand(1);

    std::string configPath;
    std::vector<std::string> overrides;
    app.add_option("--config", configPath, "config file of key = value lines");
    app.add_option("--set", overrides, "override a config key, key=value");

    // shared per-command inputs
    std::string expr, divisorPath, radiusText, kindText = "zeros", valueText, outPath;

    auto* factor = app.add_subcommand("factor", "factor numerator and denominator over exact points");
    factor->add_option("expr", expr, "rational function in z")->required();
    bool factorDelta = false;
    factor->add_flag("--delta", factorDelta, "factor delta f instead of f");

    auto* radical = app.add_subcommand("radical", "radical of a polynomial");
    radical->add_option("expr", expr)->required();
    bool classicRad = false, diffRad = false;
    radical->add_flag("--classic", classicRad, "classic radical, one per distinct zero");
    radical->add_flag("--delta", diffRad, "difference radical, one per chain (default)");

    auto* length = app.add_subcommand("length", "zero or pole length at a point");
    length->add_option("expr", expr);
    length->add_option("--divisor", divisorPath, "divisor JSON file");
    std::string atText;
    length->add_option("--at", atText, "point, e.g. 1/2+3i")->required();
    bool lengthPole = false;
    length->add_flag("--pole", lengthPole, "measure the pole length instead");
    length->add_option("--radius", radiusText);

    auto* count = app.add_subcommand("count", "counting functions at a radius");
    count->add_option("expr", expr);
    count->add_option("--divisor", divisorPath);
    count->add_option("--kind", kindText);
    count->add_option("--radius", radiusText);
    count->add_option("--value", valueText, "count zeros of f - value");

    auto* chains = app.add_subcommand("chains", "greedy chain decomposition");
    chains->add_option("expr", expr);
    chains->add_option("--divisor", divisorPath);
    chains->add_option("--kind", kindText);
    chains->add_option("--radius", radiusText);

    auto* curve = app.add_subcommand("curve", "CSV of counting functions over a radius grid");
    curve->add_option("expr", expr);
    curve->add_option("--divisor", divisorPath);
    curve->add_option("--kind", kindText);
    curve->add_option("--out", outPath, "output file, stdout when omitted");

    auto* abc = app.add_subcommand("abc", "difference Stothers-Mason comparison");
    auto* abcVerify = abc->add_subcommand("verify", "check a + b = c against the chain bound");
    std::vector<std::string> funcTexts;
    abcVerify->add_option("polys", funcTexts, "three polynomials a b c with a+b=c");
    std::string form = "both";
    abcVerify->add_option("--form", form, "degree, characteristic, or both");
    bool latticeSine = false;
    abcVerify->add_flag("--lattice-sine", latticeSine, "run the shifted sine-lattice counterexample");
    abc->require_subcommand(1);

    auto* mterm = app.add_subcommand("mterm", "m-term characteristic inequality");
    auto* mtermVerify = mterm->add_subcommand("verify", "check f1+...+fm = f(m+1)");
    mtermVerify->add_option("polys", funcTexts, "f1 .. fm and their sum f(m+1)")->required();
    mterm->require_subcommand(1);

    auto* smt = app.add_subcommand("smt", "difference second-main-theorem slopes");
    auto* smtReportCmd = smt->add_subcommand("report", "exact and finite-difference slopes");
    smtReportCmd->add_option("expr", expr)->required();
    std::string valuesText;
    smtReportCmd->add_option("--values", valuesText, "comma-separated finite values")->required();
    smt->require_subcommand(1);

    auto* fermat = app.add_subcommand("fermat", "falling-power Fermat identities");
    auto* fermatCheckCmd = fermat->add_subcommand("check", "verify one triple exactly");
    fermatCheckCmd->add_option("polys", funcTexts, "a b c")->required();
    int fermatN = 3;
    fermatCheckCmd->add_option("-n,--exponent", fermatN);
    auto* fermatSearchCmd = fermat->add_subcommand("search", "exhaustive box search");
    fermatSearchCmd->add_option("-n,--exponent", fermatN);
    int searchDeg = 2, searchBox = 2;
    unsigned long long searchSeed = 0;
    size_t searchMax = 1000;
    fermatSearchCmd->add_option("--deg", searchDeg, "max degree");
    fermatSearchCmd->add_option("--box", searchBox, "coefficient box half-width");
    fermatSearchCmd->add_option("--shuffle-seed", searchSeed, "permute enumeration order");
    fermatSearchCmd->add_option("--max", searchMax, "instance cap before truncating");
    fermat->require_subcommand(1);

    auto* caso = app.add_subcommand("casorati", "Casorati determinant and independence");
    caso->add_option("funcs", funcTexts, "rational functions")->required();

    auto* longv = app.add_subcommand("longvalues", "completely long values of a function");
    longv->add_option("expr", expr)->required();
    longv->add_option("--values", valuesText, "candidate finite values, default from delta f");

    auto* share = app.add_subcommand("share", "shifting sharing of one value by two functions");
    share->add_option("funcs", funcTexts, "f g")->required();
    share->add_option("--value", valueText, "finite value; omit with --infinity for poles");
    bool atInfinity = false;
    share->add_flag("--infinity", atInfinity, "share poles");
    share->add_option("--radius", radiusText);

    auto* five = app.add_subcommand("five", "five-value shifting-sharing comparison");
    five->add_option("funcs", funcTexts, "f g")->required();
    five->add_option("--values", valuesText, "five values, inf allowed")->required();

    // --config and --set may appear after the subcommand name
    std::function<void(CLI::App*)> allowGlobals = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands(nullptr)) {
            sub->fallthrough();
            allowGlobals(sub);
        }
    };
    allowGlobals(&app);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream silent;
        int code = app.exit(e, silent, silent);
        if (code == 0) {
            out << silent.str();  // --help
            return 0;
        }
        emit(err, json{{"error", "usage"}, {"detail", e.what()}});
        return 3;
    }

    try {
        Config cfg = buildConfig(configPath, overrides);
        const TolerancePolicy& tol = cfg.tol;

        if (*factor) {
            RationalFunction f = parseFunction(expr);
            if (factorDelta) f = f.delta();
            json j;
            j["function"] = f.str();
            j["numerator"] = factoredToJson(f.num(), tol);
            if (!f.isPolynomial()) j["denominator"] = factoredToJson(f.den(), tol);
            emit(out, j);
            return 0;
        }

        if (*radical) {
            if (classicRad && diffRad) throw InputError("choose one of --classic and --delta");
            RationalFunction f = parseFunction(expr);
            if (!f.isPolynomial()) throw InputError("radical expects a polynomial");
            FactoredPoly fp = exactRoots(f.num());
            FactoredPoly rad = classicRad ? classicRadical(fp) : differenceRadical(fp);
            json j;
            j["input"] = f.num().str();
            j["radical"] = rad.str();
            j["degree"] = rad.totalMultiplicity();
            emit(out, j);
            return 0;
        }

        if (*length) {
            std::optional<GaussianRational> none;
            auto src = sourceFor(expr, divisorPath, none, cfg);
            Rat radius = radiusFor(src, radiusText);
            GaussianRational at = parseValue(atText);
            PointKind kind = lengthPole ? PointKind::pole : PointKind::zero;
            int len = lengthAt(src->enumerate(radius + 2), radius, at, kind, tol.unit_gap_eps);
            emit(out, json{{"at", at.str()},
                           {"kind", lengthPole ? "poles" : "zeros"},
                           {"radius", ratToString(radius)},
                           {"length", len}});
            return 0;
        }

        if (*count) {
            std::optional<GaussianRational> value;
            if (!valueText.empty()) value = parseValue(valueText);
            auto src = sourceFor(expr, divisorPath, value, cfg);
            Rat radius = radiusFor(src, radiusText);
            PointKind kind = kindFrom(kindText);
            Divisor d = src->enumerate(radius + 2);
            json j;
            j["radius"] = ratToString(radius);
            j["kind"] = kindText;
            j["n"] = nClassical(d, radius, kind);
            j["nbar_delta"] = nBarDelta(d, radius, kind, tol.unit_gap_eps);
            j["nbar_delta_greedy"] = nBarDelta(d, radius, kind, tol.unit_gap_eps, false);
            j["n_tilde"] = nTildeIKLT(d, radius, tol.unit_gap_eps);
            emit(out, j);
            return 0;
        }

        if (*chains) {
            std::optional<GaussianRational> none;
            auto src = sourceFor(expr, divisorPath, none, cfg);
            Rat radius = radiusFor(src, radiusText);
            PointKind kind = kindFrom(kindText);
            auto cs = chainDecompose(src->enumerate(radius + 2), radius, kind, tol.unit_gap_eps);
            json j;
            j["radius"] = ratToString(radius);
            j["kind"] = kindText;
            j["chains"] = chainsToJson(cs);
            j["count"] = cs.size();
            emit(out, j);
            return 0;
        }

        if (*curve) {
            std::optional<GaussianRational> none;
            auto src = sourceFor(expr, divisorPath, none, cfg);
            PointKind kind = kindFrom(kindText);
            std::vector<double> radii = cfg.grid.radii();
            if (outPath.empty()) {
                writeCountingCsv(out, *src, kind, radii, tol.unit_gap_eps);
            } else {
                std::ofstream file(outPath);
                if (!file) throw InputError("cannot open output file", {{"path", outPath}});
                writeCountingCsv(file, *src, kind, radii, tol.unit_gap_eps);
            }
            return 0;
        }

        if (*abcVerify) {
            if (latticeSine) {
                MarginReport rep = latticeSineCounterexample(cfg.grid.radii(), cfg.quad);
                emit(out, rep.toJson());
                return verdictExit(rep.verdict);
            }
            if (funcTexts.size() != 3) throw InputError("abc needs exactly three polynomials");
            Poly ps[3];
            for (int k = 0; k < 3; ++k) {
                RationalFunction f = parseFunction(funcTexts[k]);
                if (!f.isPolynomial()) throw InputError("abc expects polynomials");
                ps[k] = f.num();
            }
            json j;
            int code = 0;
            if (form == "degree" || form == "both") {
                MarginReport rep = verifyPolyAbc(ps[0], ps[1], ps[2]);
                j["degree_form"] = rep.toJson();
                code = std::max(code, verdictExit(rep.verdict));
            }
            if (form == "characteristic" || form == "both") {
                MarginReport rep = verifyEntireAbc(ps[0], ps[1], ps[2], cfg.grid.radii(), cfg.quad,
                                                   cfg.epsilonSlack, tol);
                j["characteristic_form"] = rep.toJson();
                code = std::max(code, verdictExit(rep.verdict));
            }
            if (j.empty()) throw InputError("form must be degree, characteristic, or both");
            emit(out, j);
            return code;
        }

        if (*mtermVerify) {
            std::vector<Poly> fs;
            for (const auto& t : funcTexts) {
                RationalFunction f = parseFunction(t);
                if (!f.isPolynomial()) throw InputError("mterm expects polynomials");
                fs.push_back(f.num());
            }
            MarginReport rep = verifyMTerm(fs, cfg.grid.radii(), cfg.quad, cfg.epsilonSlack, tol);
            emit(out, rep.toJson());
            return verdictExit(rep.verdict);
        }

        if (*smtReportCmd) {
            RationalFunction f = parseFunction(expr);
            SlopeData slopes;
            MarginReport rep = smtReport(f, parseValueList(valuesText), cfg.quad, tol, &slopes);
            json j = rep.toJson();
            j["slopes"] = {{"exact_lhs", slopes.exactLhsSlope},
                           {"exact_rhs", slopes.exactRhsSlope},
                           {"fd_lhs", slopes.fdLhsSlope},
                           {"fd_rhs", slopes.fdRhsSlope}};
            emit(out, j);
            return verdictExit(rep.verdict);
        }

        if (*fermatCheckCmd) {
            Poly ps[3];
            if (funcTexts.size() != 3) throw InputError("fermat check needs a b c");
            for (int k = 0; k < 3; ++k) {
                RationalFunction f = parseFunction(funcTexts[k]);
                if (!f.isPolynomial()) throw InputError("fermat expects polynomials");
                ps[k] = f.num();
            }
            MarginReport rep = fermatCheck(ps[0], ps[1], ps[2], fermatN);
            emit(out, rep.toJson());
            return verdictExit(rep.verdict);
        }

        if (*fermatSearchCmd) {
            FermatSearchResult res = fermatSearch(fermatN, searchDeg, searchBox, searchSeed, searchMax);
            json j;
            j["n"] = res.n;
            j["deg_max"] = res.degMax;
            j["box"] = res.box;
            j["pairs_considered"] = res.pairsConsidered;
            j["identity_hits"] = res.identityHits;
            j["truncated"] = res.truncated;
            json inst = json::array();
            for (const auto& t : res.instances)
                inst.push_back({{"a", t[0].str()}, {"b", t[1].str()}, {"c", t[2].str()}});
            j["instances"] = inst;
            emit(out, j);
            // finding an admissible instance at n >= 3 contradicts nonexistence
            return (res.n >= 3 && !res.instances.empty()) ? 1 : 0;
        }

        if (*caso) {
            std::vector<RationalFunction> fs;
            for (const auto& t : funcTexts) fs.push_back(parseFunction(t));
            RationalFunction det = casorati(fs);
            emit(out, json{{"determinant", det.str()}, {"independent", !det.isZero()}});
            return 0;
        }

        if (*longv) {
            RationalFunction f = parseFunction(expr);
            std::vector<GaussianRational> candidates;
            if (!valuesText.empty()) {
                candidates = parseValueList(valuesText);
            } else {
                candidates = longValueCandidates(f, tol);
            }
            CompleteLongValueReport rep = completeLongValues(f, candidates, tol);
            json per = json::array();
            for (const auto& v : rep.perValue)
                per.push_back({{"value", v.value ? v.value->str() : "inf"},
                               {"complete", v.complete},
                               {"chain_lengths", v.chainLengths}});
            json reported = json::array();
            for (const auto& v : rep.reported()) reported.push_back(v.value ? v.value->str() : "inf");
            emit(out, json{{"per_value", per}, {"completely_long", reported}});
            return 0;
        }

        if (*share) {
            if (funcTexts.size() != 2) throw InputError("share needs two functions");
            RationalFunction f = parseFunction(funcTexts[0]);
            RationalFunction g = parseFunction(funcTexts[1]);
            std::optional<GaussianRational> value;
            if (!atInfinity) {
                if (valueText.empty()) throw InputError("give --value or --infinity");
                value = parseValue(valueText);
            }
            Rat radius;
            if (!radiusText.empty()) {
                radius = parseValue(radiusText).re;
            } else {
                auto covering = [&](const RationalFunction& h) {
                    RationalFunction t = value ? h - RationalFunction::constant(*value) : h;
                    Divisor d = Divisor::fromRationalFunction(t, tol);
                    return d.empty() ? Rat(4) : d.coveringRadius(3);
                };
                radius = std::max(covering(f), covering(g));
            }
            ShareReport rep = shiftingShare(f, g, value, radius, tol);
            json sf = json::array(), sg = json::array();
            for (const auto& s : rep.startsF) sf.push_back(s.str());
            for (const auto& s : rep.startsG) sg.push_back(s.str());
            emit(out, json{{"value", atInfinity ? "inf" : value->str()},
                           {"radius", ratToString(radius)},
                           {"shared", rep.shared},
                           {"starts_f", sf},
                           {"starts_g", sg}});
            return 0;
        }

        if (*five) {
            if (funcTexts.size() != 2) throw InputError("five needs two functions");
            RationalFunction f = parseFunction(funcTexts[0]);
            RationalFunction g = parseFunction(funcTexts[1]);
            std::vector<std::optional<GaussianRational>> values;
            std::stringstream ss(valuesText);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (item.empty()) continue;
                if (item == "inf" || item == "infinity") {
                    values.push_back(std::nullopt);
                } else {
                    values.push_back(parseValue(item));
                }
            }
            if (values.size() != 5) throw InputError("five needs exactly five values");
            FiveValueReport rep = fiveValueCheck(f, g, values, tol);
            emit(out, rep.toJson());
            return verdictExit(rep.verdict);
        }
    } catch (const InputError& e) {
        json j{{"error", "input"}, {"detail", e.what()}};
        if (!e.detail.empty()) j["context"] = e.detail;
        emit(err, j);
        return 3;
    } catch (const std::exception& e) {
        emit(err, json{{"error", "internal"}, {"detail", e.what()}});
        return 3;
    }
    return 3;
}

}  // namespace fallcalc
