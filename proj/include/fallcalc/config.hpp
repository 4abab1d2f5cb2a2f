#pragma once

#include <string>
#include <vector>

#include "fallcalc/nevanlinna.hpp"
#include "fallcalc/tolerance.hpp"

namespace fallcalc {

struct GridSpec {
    double rMin = 10.0;
    double rMax = 10000.0;
    int points = 4;  // geometric spacing

    std::vector<double> radii() const;
};

struct Config {
    TolerancePolicy tol;
    Quadrature quad;
    GridSpec grid;
    unsigned long long seed = 1;
    double epsilonSlack = 0.1;  // epsilon in the (1 - delta - epsilon) log r term

    void apply(const std::string& key, const std::string& value);
    static Config fromFile(const std::string& path);
    void validate() const;
};

}  // namespace fallcalc
