#pragma once

#include "qfano/rational.hpp"

#include <vector>

namespace qfano::upoly {

// coefficients low to high, no trailing zeros; empty = 0
using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    trim(d);
    return d;
}

inline UPoly rem(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational q = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
        trim(a);
    }
    return a;
}

inline UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// number of distinct roots over the algebraic closure
inline int distinct_roots(const UPoly& p) {
    UPoly g = gcd(p, derivative(p));
    return degree(p) - (g.empty() ? 0 : degree(g));
}

}  // namespace qfano::upoly
