#include "fallcalc/io.hpp"

#include <cstdio>
#include <ostream>

namespace fallcalc {

using nlohmann::json;

nlohmann::json pointToJson(const GaussianRational& g) {
    return json{{"re", ratToString(g.re)}, {"im", ratToString(g.im)}};
}

GaussianRational pointFromJson(const json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("point must be an object with re and im");
    return {ratFromString(j.at("re").get<std::string>()),
            ratFromString(j.at("im").get<std::string>())};
}

json divisorToJson(const Divisor& d) {
    json arr = json::array();
    for (const auto& p : d.points()) {
        json e = pointToJson(p.at);
        e["zmult"] = p.zmult;
        e["pmult"] = p.pmult;
        arr.push_back(std::move(e));
    }
    return arr;
}

namespace {

Divisor pointsFromJsonArray(const json& arr) {
    Divisor d;
    for (const auto& e : arr) {
        int zm = e.value("zmult", 0);
        int pm = e.value("pmult", 0);
        if (zm < 0 || pm < 0) throw std::invalid_argument("multiplicities must be nonnegative");
        if (zm != 0 && pm != 0)
            throw std::invalid_argument("a point cannot be both zero and pole");
        d.add(pointFromJson(e), zm, pm);
    }
    return d;
}

}  // namespace

std::shared_ptr<DivisorSource> divisorSourceFromJson(const json& j) {
    if (j.is_array()) return std::make_shared<FiniteSource>(pointsFromJsonArray(j));
    if (!j.is_object()) throw std::invalid_argument("divisor file must hold an array or object");
    bool hasLattices = j.contains("lattices") && !j.at("lattices").empty();
    if (!hasLattices) {
        return std::make_shared<FiniteSource>(
            pointsFromJsonArray(j.value("points", json::array())));
    }
    auto src = std::make_shared<LatticeSource>();
    for (const auto& e : j.at("lattices")) {
        LatticeSource::Run run;
        run.anchor = pointFromJson(e.at("anchor"));
        std::string extent = e.value("extent", "both");
        if (extent == "up") run.extent = LatticeSource::Extent::up;
        else if (extent == "down") run.extent = LatticeSource::Extent::down;
        else if (extent == "both") run.extent = LatticeSource::Extent::both;
        else throw std::invalid_argument("extent must be up, down, or both");
        run.zmult = e.value("zmult", 0);
        run.pmult = e.value("pmult", 0);
        if (run.zmult < 0 || run.pmult < 0 || (run.zmult != 0 && run.pmult != 0))
            throw std::invalid_argument("bad lattice multiplicities");
        src->addRun(std::move(run));
    }
    if (j.contains("points") && !j.at("points").empty())
        throw std::invalid_argument("mixing explicit points with lattices is not supported");
    return src;
}

json chainsToJson(const std::vector<Chain>& chains) {
    json arr = json::array();
    for (const auto& c : chains) {
        json e;
        e["start"] = pointToJson(c.start);
        e["length"] = c.length;
        e["kind"] = c.kind == PointKind::zero ? "zero" : "pole";
        if (c.clipped) e["clipped"] = true;
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string formatDouble(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void writeCountingCsv(std::ostream& os, const DivisorSource& src, PointKind kind,
                      const std::vector<double>& radii, double eps) {
    os << "r,n,N,nBarDelta,NBarDelta\n";
    double top = 0.0;
    for (double r : radii) top = std::max(top, r);
    Divisor d = src.enumerate(ratFromDouble(top) + 2);
    LogIntegral N{classicalCurve(d, kind)};
    LogIntegral Nbar{chainStartCurve(d, kind, eps)};
    for (double r : radii) {
        Rat rr = ratFromDouble(r);
        os << formatDouble(r) << "," << nClassical(d, rr, kind) << "," << formatDouble(N.eval(r))
           << "," << chainCountClosedForm(d, rr, kind, eps) << "," << formatDouble(Nbar.eval(r))
           << "\n";
    }
}

}  // namespace fallcalc
