#include "fallcalc/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fallcalc {

std::vector<double> GridSpec::radii() const {
    std::vector<double> out;
    if (points <= 1) {
        out.push_back(rMin);
        return out;
    }
    double ratio = std::log(rMax / rMin) / (points - 1);
    for (int k = 0; k < points; ++k) out.push_back(rMin * std::exp(ratio * k));
    out.back() = rMax;  // guard against rounding at the top end
    return out;
}

void Config::apply(const std::string& key, const std::string& value) {
    auto asDouble = [&]() {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("bad numeric value for " + key);
        return v;
    };
    auto asInt = [&]() {
        size_t used = 0;
        long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument("bad integer value for " + key);
        return v;
    };
    if (key == "unit_gap_eps") tol.unit_gap_eps = asDouble();
    else if (key == "root_eps") tol.root_eps = asDouble();
    else if (key == "quadrature_nodes") quad.nodes = static_cast<int>(asInt());
    else if (key == "node_nudge") quad.nudgeFraction = asDouble();
    else if (key == "grid_r_min") grid.rMin = asDouble();
    else if (key == "grid_r_max") grid.rMax = asDouble();
    else if (key == "grid_points") grid.points = static_cast<int>(asInt());
    else if (key == "seed") seed = static_cast<unsigned long long>(asInt());
    else if (key == "epsilon") epsilonSlack = asDouble();
    else throw std::invalid_argument("unknown configuration key: " + key);
}

Config Config::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open configuration file: " + path);
    Config cfg;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notSpace = [](unsigned char c) { return !std::isspace(c); };
        auto b = std::find_if(line.begin(), line.end(), notSpace);
        auto e = std::find_if(line.rbegin(), line.rend(), notSpace).base();
        if (b >= e) continue;
        std::string body(b, e);
        auto eq = body.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineNo) + ": expected key = value");
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t");
            size_t z = s.find_last_not_of(" \t");
            if (a == std::string::npos) return std::string();
            return s.substr(a, z - a + 1);
        };
        cfg.apply(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

void Config::validate() const {
    if (!(tol.unit_gap_eps >= 0 && tol.unit_gap_eps < 0.5))
        throw std::invalid_argument("unit_gap_eps must lie in [0, 0.5)");
    if (!(tol.root_eps >= 0 && tol.root_eps < 0.5))
        throw std::invalid_argument("root_eps must lie in [0, 0.5)");
    if (quad.nodes < 8) throw std::invalid_argument("quadrature_nodes must be at least 8");
    if (!(quad.nudgeFraction > 0 && quad.nudgeFraction <= 1))
        throw std::invalid_argument("node_nudge must lie in (0, 1]");
    if (!(grid.rMin > 0) || !(grid.rMax >= grid.rMin))
        throw std::invalid_argument("grid radii must satisfy 0 < r_min <= r_max");
    if (grid.points < 1) throw std::invalid_argument("grid_points must be positive");
    if (!(epsilonSlack > 0 && epsilonSlack < 1))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace fallcalc
