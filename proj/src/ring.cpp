#include "foliatlas/ring.hpp"

#include <sstream>

#include "foliatlas/errors.hpp"

namespace foliatlas {

bool CohClass::is_zero() const {
    return a0 == 0 && a1 == 0 && a2 == 0 && a3 == 0;
}

bool CohClass::is_pure_degree(int d) const {
    const Rational* c[4] = {&a0, &a1, &a2, &a3};
    for (int i = 0; i < 4; ++i) {
        if (i != d && *c[i] != 0) return false;
    }
    return true;
}

CohClass CohClass::degree_part(int d) const {
    switch (d) {
        case 0: return {a0, 0, 0, 0};
        case 1: return {0, a1, 0, 0};
        case 2: return {0, 0, a2, 0};
        case 3: return {0, 0, 0, a3};
        default: return {};
    }
}

CohClass add(const CohClass& a, const CohClass& b) {
    return {a.a0 + b.a0, a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3};
}

CohClass sub(const CohClass& a, const CohClass& b) {
    return {a.a0 - b.a0, a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3};
}

CohClass neg(const CohClass& a) {
    return {-a.a0, -a.a1, -a.a2, -a.a3};
}

CohClass scale(const Rational& c, const CohClass& a) {
    return {c * a.a0, c * a.a1, c * a.a2, c * a.a3};
}

CohClass mul(const CohClass& a, const CohClass& b, int nu) {
    if (nu < 1) throw DataError("nu must be a positive integer");
    CohClass r;
    r.a0 = a.a0 * b.a0;
    r.a1 = a.a0 * b.a1 + a.a1 * b.a0;
    r.a2 = a.a0 * b.a2 + a.a2 * b.a0 + Rational(nu) * a.a1 * b.a1; // H.H = nu l
    r.a3 = a.a0 * b.a3 + a.a3 * b.a0 + a.a1 * b.a2 + a.a2 * b.a1;  // H.l = p
    return r;
}

CohClass power(const CohClass& a, int n, int nu) {
    if (n < 0) throw DataError("negative power of a cohomology class");
    CohClass r = CohClass::unit();
    for (int i = 0; i < n; ++i) r = mul(r, a, nu);
    return r;
}

CohClass inverse(const CohClass& a, int nu) {
    if (a.a0 == 0) throw DataError("class with zero constant term has no inverse");
    // Solve a.q = 1 degree by degree.
    CohClass q;
    q.a0 = 1 / a.a0;
    q.a1 = -(a.a1 * q.a0) / a.a0;
    q.a2 = -(a.a2 * q.a0 + Rational(nu) * a.a1 * q.a1) / a.a0;
    q.a3 = -(a.a3 * q.a0 + a.a1 * q.a2 + a.a2 * q.a1) / a.a0;
    return q;
}

Rational integrate(const CohClass& a) {
    return a.a3;
}

std::string to_string(const CohClass& a) {
    std::ostringstream os;
    const char* basis[4] = {"1", "H", "l", "p"};
    const Rational* c[4] = {&a.a0, &a.a1, &a.a2, &a.a3};
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (*c[i] == 0) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << *c[i];
        } else if (*c[i] == 1) {
            os << basis[i];
        } else {
            os << "(" << *c[i] << ")" << basis[i];
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace foliatlas
