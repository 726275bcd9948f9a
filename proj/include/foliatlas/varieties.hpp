#pragma once

#include <array>
#include <string>

#include "foliatlas/chern.hpp"

namespace foliatlas {

enum class Builtin { P3, Q3 };

// Numerical model of a smooth projective threefold X with Pic(X) = Z.
//   nu   = integral of H^3 (degree of X)
//   tau  = min t with h^0(TX(t)) != 0
//   rho  = min t with h^0(Omega^1_X(t)) != 0
//   iota = Fano index, c1(TX) = iota*H
//   c_x  = -integral of c1(TX).H^2  (= -iota*nu)
// Exact cohomology tables are available for the two builtins only; custom
// models expose the Chern-level operations.
struct ThreefoldModel {
    enum class Kind { P3, Q3, Custom };

    std::string name;
    Kind kind = Kind::Custom;
    int nu = 1;
    int tau = 0;
    int rho = 0;
    int iota = 1;
    long long c_x = 0;
    SheafClass tangent;

    // Facts about X consumed by the stability criteria.  True for the
    // builtins, user-asserted for custom models.
    bool h1_line_vanishing = false; // h^1(O_X(t)) = 0 for all t
    bool tangent_stable = false;    // TX is mu-stable

    bool has_tables() const { return kind != Kind::Custom; }
};

ThreefoldModel builtin(Builtin which);

// Builds a custom model; c_x is derived from the tangent class and the
// consistency iota*H = c1(TX) is enforced.
ThreefoldModel custom(const std::string& name, int nu, int tau, int rho, int iota,
                      const SheafClass& tangent, bool h1_line_vanishing = false,
                      bool tangent_stable = false);

// Custom-threefold input document:
//   {"name": ..., "nu": ..., "tau": ..., "rho": ..., "iota": ...,
//    "tangent_chern": [c1_H, c2_l, c3_p]}
// Coefficients may be integers or "a/b" strings.
ThreefoldModel model_from_json_text(const std::string& text);
ThreefoldModel model_from_json_file(const std::string& path);

// Sheaves whose twisted cohomology the catalog tabulates.  The two
// restricted ambient sheaves and the spinor bundle live on Q3 only.
enum class SheafId { O, Omega1X, TX, OmegaP4RestQ, TP4RestQ, Spinor };

struct CohTableEntry {
    SheafId sheaf_id;
    int twist;
    std::array<long long, 4> h; // h^0..h^3
};

// h^i(O_X(t)); closed binomial forms, h^3 by Serre duality.
long long h_line(const ThreefoldModel& x, int i, int t);

// h^i(Omega^1_X(t)); Euler-sequence binomials on P3, conormal plus restricted
// Euler sequences on Q3.
long long h_cotangent(const ThreefoldModel& x, int i, int t);

// h^i(TX(t)); on Q3 through the twist identity with the cotangent sheaf.
long long h_tangent(const ThreefoldModel& x, int i, int t);

// h^i(Omega^1_{P4}|Q3 (t)) and h^i(T P4|Q3 (t)); Q3 only.
long long h_restricted_cotangent_p4(int i, int t);
long long h_restricted_tangent_p4(int i, int t);

// h^i(S(t)) for the spinor bundle S on Q3 (c1 = -H, c2 = l, no intermediate
// cohomology, S dual = S(1)).
long long h_spinor(int i, int t);

long long h_sheaf(const ThreefoldModel& x, SheafId id, int i, int t);
CohTableEntry table_entry(const ThreefoldModel& x, SheafId id, int t);

// The SheafClass carrying the Chern data of a tabulated sheaf (throws
// RangeNotCovered for the rank-4 restricted sheaves, whose Chern data does
// not fit the rank <= 3 calculus).
SheafClass sheaf_class_of(const ThreefoldModel& x, SheafId id);

// Rank-2 spinor bundle class on Q3: 1 - H + l.
SheafClass spinor_class();

} // namespace foliatlas
