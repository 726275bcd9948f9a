#include "foliatlas/chern.hpp"

#include <sstream>

#include "foliatlas/errors.hpp"
#include "foliatlas/varieties.hpp"

namespace foliatlas {

SheafClass SheafClass::make(int rank, const Rational& c1_h, const Rational& c2_l,
                            const Rational& c3_p) {
    if (rank < 0) throw RankError("negative rank");
    return {rank, CohClass{1, c1_h, c2_l, c3_p}};
}

SheafClass SheafClass::line_bundle(int t) {
    return {1, CohClass{1, t, 0, 0}};
}

SheafClass SheafClass::trivial(int rank) {
    if (rank < 0) throw RankError("negative rank");
    return {rank, CohClass::unit()};
}

SheafClass whitney_product(const SheafClass& a, const SheafClass& b, int nu) {
    if (a.rank + b.rank > 3) {
        throw RankError("Whitney product exceeds rank 3: " + std::to_string(a.rank) + "+" +
                        std::to_string(b.rank));
    }
    return {a.rank + b.rank, mul(a.total, b.total, nu)};
}

SheafClass whitney_quotient(const SheafClass& total, const SheafClass& sub, int nu) {
    if (total.rank < sub.rank) {
        throw RankError("Whitney quotient with rank(total) < rank(sub)");
    }
    const CohClass& t = total.total;
    const CohClass& s = sub.total;
    // Triangular inversion of s.q = t, degree by degree; always solvable
    // because both series start at 1.
    CohClass q = CohClass::unit();
    q.a1 = t.a1 - s.a1;
    q.a2 = t.a2 - s.a2 - Rational(nu) * s.a1 * q.a1;
    q.a3 = t.a3 - s.a3 - s.a1 * q.a2 - s.a2 * q.a1;
    return {total.rank - sub.rank, q};
}

SheafClass twist(const SheafClass& f, int t, int nu) {
    if (f.rank > 3) throw RankError("twist needs rank <= 3");
    const CohClass parts[4] = {CohClass::unit(), f.c1(), f.c2(), f.c3()};
    CohClass th[4];
    th[0] = CohClass::unit();
    th[1] = scale(t, CohClass::hyperplane());
    th[2] = mul(th[1], th[1], nu);
    th[3] = mul(th[2], th[1], nu);
    CohClass out = CohClass::unit();
    for (int k = 1; k <= 3; ++k) {
        CohClass acc;
        for (int i = 0; i <= k; ++i) {
            acc = add(acc, scale(gbinom(f.rank - i, k - i), mul(parts[i], th[k - i], nu)));
        }
        const CohClass part = acc.degree_part(k);
        if (k == 1) out.a1 = part.a1;
        if (k == 2) out.a2 = part.a2;
        if (k == 3) out.a3 = part.a3;
    }
    return {f.rank, out};
}

SheafClass dual(const SheafClass& f) {
    return {f.rank, CohClass{1, -f.total.a1, f.total.a2, -f.total.a3}};
}

CohClass chern_character(const SheafClass& f, int nu) {
    if (f.rank > 3) throw RankError("Chern character needs rank <= 3");
    const CohClass c1 = f.c1();
    const CohClass c2 = f.c2();
    const CohClass c3 = f.c3();
    const CohClass c1sq = mul(c1, c1, nu);
    const CohClass c1cu = mul(c1sq, c1, nu);
    const CohClass ch2 = scale(Rational(1, 2), sub(c1sq, scale(2, c2)));
    const CohClass ch3 =
        scale(Rational(1, 6), add(sub(c1cu, scale(3, mul(c1, c2, nu))), scale(3, c3)));
    return add(add(CohClass{f.rank, 0, 0, 0}, c1), add(ch2, ch3));
}

CohClass todd_class(const SheafClass& tangent, int nu) {
    if (tangent.rank != 3) throw RankError("Todd class expects a rank-3 tangent class");
    const CohClass c1 = tangent.c1();
    const CohClass c2 = tangent.c2();
    const CohClass td1 = scale(Rational(1, 2), c1);
    const CohClass td2 = scale(Rational(1, 12), add(mul(c1, c1, nu), c2));
    const CohClass td3 = scale(Rational(1, 24), mul(c1, c2, nu));
    return add(add(CohClass::unit(), td1), add(td2, td3));
}

long long euler_characteristic_ch(const CohClass& ch, const ThreefoldModel& x) {
    const CohClass td = todd_class(x.tangent, x.nu);
    const Rational chi = integrate(mul(ch, td, x.nu));
    if (!is_integer(chi)) {
        throw DataError("non-integer Euler characteristic " + to_string(chi) +
                        "; Chern data inconsistent");
    }
    return to_int64(chi);
}

long long euler_characteristic(const SheafClass& f, const ThreefoldModel& x) {
    return euler_characteristic_ch(chern_character(f, x.nu), x);
}

std::string to_string(const SheafClass& f) {
    std::ostringstream os;
    os << "rank " << f.rank << ", c = " << to_string(f.total);
    return os.str();
}

} // namespace foliatlas
