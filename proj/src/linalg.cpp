#include "qtmoments/linalg.hpp"

#include <utility>

namespace qtmoments {

std::vector<Rational> leading_principal_minors(const RationalMatrix& m)
{
    const std::size_t n = m.size();
    RationalMatrix a = m;
    std::vector<Rational> minors;
    minors.reserve(n);
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // After k elimination steps a[k][k] = minor(k+1) / minor(k).
        if (a[k][k] == 0) {
            for (std::size_t size = k + 1; size <= n; ++size) {
                RationalMatrix sub(size);
                for (std::size_t i = 0; i < size; ++i) sub[i].assign(m[i].begin(), m[i].begin() + size);
                minors.push_back(determinant(std::move(sub)));
            }
            return minors;
        }
        det *= a[k][k];
        minors.push_back(det);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return minors;
}

Rational determinant(RationalMatrix a)
{
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

}  // namespace qtmoments
