#pragma once

#include <string>

#include "foliatlas/rational.hpp"

namespace foliatlas {

// A cohomology class on a Picard-rank-1 threefold, written in the uniform
// basis {1, H, l, p}: H the ample generator, l the class of a line
// (integral of l.H is 1), p the class of a point.  The multiplication
// rules are H.H = nu*l, H.l = p, and everything above degree 3 truncates,
// where nu is the degree of the threefold (integral of H^3).  A class is
// variety-independent; only products need nu.
struct CohClass {
    Rational a0; // coefficient of 1
    Rational a1; // coefficient of H
    Rational a2; // coefficient of l
    Rational a3; // coefficient of p

    CohClass() : a0(0), a1(0), a2(0), a3(0) {}
    CohClass(Rational c0, Rational c1, Rational c2, Rational c3)
        : a0(std::move(c0)), a1(std::move(c1)), a2(std::move(c2)), a3(std::move(c3)) {}

    static CohClass unit() { return {1, 0, 0, 0}; }
    static CohClass hyperplane() { return {0, 1, 0, 0}; }
    static CohClass line() { return {0, 0, 1, 0}; }
    static CohClass point() { return {0, 0, 0, 1}; }

    bool operator==(const CohClass& o) const = default;

    bool is_zero() const;
    // true when every coefficient outside degree d vanishes
    bool is_pure_degree(int d) const;
    CohClass degree_part(int d) const;
};

CohClass add(const CohClass& a, const CohClass& b);
CohClass sub(const CohClass& a, const CohClass& b);
CohClass neg(const CohClass& a);
CohClass scale(const Rational& c, const CohClass& a);

// Graded product truncated above degree 3.
CohClass mul(const CohClass& a, const CohClass& b, int nu);

// n-fold product; n = 0 gives the unit.
CohClass power(const CohClass& a, int n, int nu);

// Multiplicative inverse of a class with nonzero degree-0 part
// (truncated geometric series).
CohClass inverse(const CohClass& a, int nu);

// Coefficient of the point class; the integral of H^3 computed this way is nu.
Rational integrate(const CohClass& a);

std::string to_string(const CohClass& a);

inline CohClass operator+(const CohClass& a, const CohClass& b) { return add(a, b); }
inline CohClass operator-(const CohClass& a, const CohClass& b) { return sub(a, b); }
inline CohClass operator-(const CohClass& a) { return neg(a); }

} // namespace foliatlas
