#include "qtmoments/qtnum.hpp"

namespace qtmoments {

Polynomial qt_number(unsigned n)
{
    Polynomial p;
    for (unsigned k = 1; k <= n; ++k) {
        Monomial m;
        m.set(Var::T, n - k);
        m.set(Var::Q, k - 1);
        p.add_term(1, m);
    }
    return p;
}

Polynomial qt_factorial(unsigned n)
{
    Polynomial p(1);
    for (unsigned k = 2; k <= n; ++k) p *= qt_number(k);
    return p;
}

}  // namespace qtmoments
