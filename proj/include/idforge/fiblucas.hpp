#ifndef IDFORGE_FIBLUCAS_HPP
#define IDFORGE_FIBLUCAS_HPP

#include <stdexcept>

#include "idforge/quadext.hpp"
#include "idforge/rational.hpp"

namespace idforge {

// F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}
inline BigInt fibonacci(long long n) {
    if (n < 0) throw std::domain_error("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (long long i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

// L_0 = 2, L_1 = 1, L_{n+1} = L_n + L_{n-1}
inline BigInt lucas(long long n) {
    if (n < 0) throw std::domain_error("lucas: negative index");
    BigInt a = 2, b = 1;
    for (long long i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = b;
        b = next;
    }
    return a;
}

/// The golden ratio phi = (sqrt(5) - 1)/2, an element of Q(sqrt(5));
/// satisfies phi = 1/(1+phi).
inline QuadExtNum golden_ratio() {
    return QuadExtNum(Rational(-1, 2), Rational(1, 2), 5);
}

}  // namespace idforge

#endif
