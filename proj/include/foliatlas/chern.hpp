#pragma once

#include <string>

#include "foliatlas/ring.hpp"

namespace foliatlas {

struct ThreefoldModel;

// Rank plus total Chern class of a coherent sheaf: the unit of the Chern
// calculus.  The degree-0 coefficient of `total` is always 1.  Reflexive
// non-locally-free sheaves are handled by the same formulas; the calculus is
// rank-based, not local-freeness-based.  Ranks above 3 are allowed as
// intermediates of Whitney manipulations (restricted bundles from an ambient
// P^4), but the operations that expand Chern roots insist on rank <= 3.
struct SheafClass {
    int rank = 0;
    CohClass total = CohClass::unit();

    static SheafClass make(int rank, const Rational& c1_h, const Rational& c2_l,
                           const Rational& c3_p);
    static SheafClass line_bundle(int t); // O(t)
    static SheafClass trivial(int rank);  // O^rank

    CohClass c1() const { return {0, total.a1, 0, 0}; }
    CohClass c2() const { return {0, 0, total.a2, 0}; }
    CohClass c3() const { return {0, 0, 0, total.a3}; }

    bool operator==(const SheafClass& o) const = default;
};

// c(a (+) b); the combined rank must stay within the threefold calculus.
SheafClass whitney_product(const SheafClass& a, const SheafClass& b, int nu);

// The unique q with whitney_product(sub, q) = total, by triangular series
// inversion.  Requires rank(total) >= rank(sub).
SheafClass whitney_quotient(const SheafClass& total, const SheafClass& sub, int nu);

// Chern classes of F(t), via c_k(F(t)) = sum_i C(rank-i, k-i) c_i(F) (tH)^(k-i).
// For rank 2 the formula makes c3 twist-invariant.
SheafClass twist(const SheafClass& f, int t, int nu);

// c_i -> (-1)^i c_i.
SheafClass dual(const SheafClass& f);

// ch = rank + c1 + (c1^2 - 2c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6.
CohClass chern_character(const SheafClass& f, int nu);

// td = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2 / 24, for a rank-3 tangent class.
CohClass todd_class(const SheafClass& tangent, int nu);

// Hirzebruch-Riemann-Roch: integral of ch(F).td(TX).  The result must be an
// integer; a fractional value signals inconsistent Chern data and throws.
long long euler_characteristic(const SheafClass& f, const ThreefoldModel& x);

// Same, starting from an already-assembled Chern character (e.g. a product
// ch(E).ch(F) for a tensor product whose rank exceeds 3).
long long euler_characteristic_ch(const CohClass& ch, const ThreefoldModel& x);

std::string to_string(const SheafClass& f);

} // namespace foliatlas
