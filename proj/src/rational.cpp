#include "fallcalc/rational.hpp"

#include <cctype>
#include <ostream>

namespace fallcalc {

Rat ratFromString(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // Decimal form: sign, digits, '.', digits.
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s;
        digits.erase(dot, 1);
        size_t start = (digits[0] == '+' || digits[0] == '-') ? 1 : 0;
        if (digits.size() == start) throw std::invalid_argument("bad rational literal: " + s);
        for (size_t k = start; k < digits.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(digits[k])))
                throw std::invalid_argument("bad rational literal: " + s);
        Int num(digits);
        Int den = 1;
        for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
        return Rat(num, den);
    }
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

std::string GaussianRational::str() const {
    if (im == 0) return ratToString(re);
    std::string imPart;
    if (im == 1) imPart = "i";
    else if (im == -1) imPart = "-i";
    else imPart = ratToString(im) + "i";
    if (re == 0) return imPart;
    if (im > 0) return ratToString(re) + "+" + imPart;
    return ratToString(re) + imPart;  // imPart already carries the minus
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
    return os << g.str();
}

}  // namespace fallcalc
