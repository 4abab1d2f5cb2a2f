#include "fallcalc/casorati.hpp"

#include <stdexcept>

namespace fallcalc {

RationalFunction casorati(const std::vector<RationalFunction>& fs) {
    size_t m = fs.size();
    if (m == 0) throw std::invalid_argument("empty function tuple");
    // column j holds f_j(z), f_j(z+1), ..., f_j(z+m-1)
    std::vector<std::vector<Poly>> num(m, std::vector<Poly>(m)), den(m, std::vector<Poly>(m));
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) {
            RationalFunction s = fs[j].shifted(GaussianRational(static_cast<long>(i)));
            num[i][j] = s.num();
            den[i][j] = s.den();
        }

    // clear denominators per column: multiply column j by prod_i den[i][j]
    Poly scale(GaussianRational(1));
    std::vector<std::vector<Poly>> M(m, std::vector<Poly>(m));
    for (size_t j = 0; j < m; ++j) {
        Poly colDen(GaussianRational(1));
        for (size_t i = 0; i < m; ++i) colDen = colDen * den[i][j];
        scale = scale * colDen;
        for (size_t i = 0; i < m; ++i) {
            Poly lift = num[i][j];
            for (size_t k = 0; k < m; ++k)
                if (k != i) lift = lift * den[k][j];
            M[i][j] = lift;
        }
    }

    // Bareiss fraction-free elimination
    int sign = 1;
    Poly prevPivot(GaussianRational(1));
    for (size_t k = 0; k + 1 < m; ++k) {
        if (M[k][k].isZero()) {
            size_t swapRow = k;
            for (size_t i = k + 1; i < m; ++i)
                if (!M[i][k].isZero()) {
                    swapRow = i;
                    break;
                }
            if (swapRow == k) return RationalFunction();  // entire column zero, determinant 0
            std::swap(M[k], M[swapRow]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j < m; ++j) {
                Poly t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                auto [quo, rest] = divmod(t, prevPivot);
                if (!rest.isZero()) throw std::logic_error("fraction-free elimination left a remainder");
                M[i][j] = quo;
            }
            M[i][k] = Poly();
        }
        prevPivot = M[k][k];
    }
    Poly det = M[m - 1][m - 1];
    if (sign < 0) det = -det;
    return RationalFunction(det, scale);
}

bool linearlyIndependent(const std::vector<RationalFunction>& fs) {
    return !casorati(fs).isZero();
}

}  // namespace fallcalc
