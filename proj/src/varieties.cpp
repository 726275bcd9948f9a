#include "foliatlas/varieties.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "foliatlas/errors.hpp"

namespace foliatlas {

namespace {

long long h0_line_p3(long long t) { return binom(t + 3, 3); }

long long h0_line_q3(long long t) {
    if (t < 0) return 0;
    return binom(t + 4, 4) - binom(t + 2, 4);
}

// h^0(T P3 (t)) from the Euler sequence 0 -> O(t) -> O(t+1)^4 -> TP3(t) -> 0.
long long h0_tangent_p3(long long t) { return 4 * h0_line_p3(t + 1) - h0_line_p3(t); }

// h^0(Omega^1_{P3}(t)); vanishes for t <= 1, Euler-sequence count above.
long long h0_cotangent_p3(long long t) {
    if (t <= 1) return 0;
    return 4 * h0_line_p3(t - 1) - h0_line_p3(t);
}

// h^0(Omega^1_{P4}|Q3 (t)) from 0 -> Omega|Q(t) -> O_Q(t-1)^5 -> O_Q(t) -> 0;
// the evaluation map on sections is onto once t >= 1.
long long h0_rcot_q3(long long t) {
    if (t <= 0) return 0;
    return 5 * h0_line_q3(t - 1) - h0_line_q3(t);
}

// h^0(T P4|Q3 (t)): the dual sequence gives an exact section count for every t.
long long h0_rtan_q3(long long t) { return 5 * h0_line_q3(t + 1) - h0_line_q3(t); }

// h^0(Omega^1_{Q3}(t)) through 0 -> O_Q(t-2) -> Omega|Q(t) -> Omega^1_Q(t) -> 0.
long long h0_cotangent_q3(long long t) { return h0_rcot_q3(t) - h0_line_q3(t - 2); }

// chi(S(t)) = (2/3) t (t+1) (t+2) for the spinor bundle; equals h^0 once t >= 1
// since S is ACM and h^3 vanishes there.
long long chi_spinor(long long t) {
    const long long prod = 2 * t * (t + 1) * (t + 2);
    return prod / 3;
}

void require_index(int i) {
    if (i < 0 || i > 3) throw DataError("cohomological index must lie in 0..3");
}

void require_tables(const ThreefoldModel& x) {
    if (!x.has_tables()) {
        throw RangeNotCovered("cohomology tables are unavailable for custom model '" + x.name +
                              "'");
    }
}

Rational rational_from_json(const nlohmann::json& v, const char* what) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) {
        try {
            return Rational(v.get<std::string>());
        } catch (const std::exception&) {
            throw DataError(std::string("cannot parse rational for ") + what + ": " +
                            v.get<std::string>());
        }
    }
    throw DataError(std::string("field ") + what + " must be an integer or an \"a/b\" string");
}

} // namespace

ThreefoldModel builtin(Builtin which) {
    ThreefoldModel m;
    if (which == Builtin::P3) {
        m.name = "p3";
        m.kind = ThreefoldModel::Kind::P3;
        m.nu = 1;
        m.tau = -1;
        m.rho = 2;
        m.iota = 4;
        m.tangent = SheafClass::make(3, 4, 6, 4);
    } else {
        m.name = "q3";
        m.kind = ThreefoldModel::Kind::Q3;
        m.nu = 2;
        m.tau = 0;
        m.rho = 2;
        m.iota = 3;
        m.tangent = SheafClass::make(3, 3, 8, 4);
    }
    m.c_x = -static_cast<long long>(m.iota) * m.nu;
    m.h1_line_vanishing = true;
    m.tangent_stable = true;
    return m;
}

ThreefoldModel custom(const std::string& name, int nu, int tau, int rho, int iota,
                      const SheafClass& tangent, bool h1_line_vanishing, bool tangent_stable) {
    if (nu < 1) throw DataError("nu must be a positive integer");
    if (tangent.rank != 3) throw RankError("tangent class must have rank 3");
    if (!(tangent.total.a1 == iota)) {
        throw DataError("index inconsistency: c1(TX) = " + to_string(tangent.c1()) +
                        " but iota = " + std::to_string(iota));
    }
    ThreefoldModel m;
    m.name = name;
    m.kind = ThreefoldModel::Kind::Custom;
    m.nu = nu;
    m.tau = tau;
    m.rho = rho;
    m.iota = iota;
    m.tangent = tangent;
    const CohClass h2 = power(CohClass::hyperplane(), 2, nu);
    m.c_x = -to_int64(integrate(mul(tangent.c1(), h2, nu)));
    m.h1_line_vanishing = h1_line_vanishing;
    m.tangent_stable = tangent_stable;
    return m;
}

ThreefoldModel model_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw DataError(std::string("invalid threefold document: ") + e.what());
    }
    for (const char* key : {"name", "nu", "tau", "rho", "iota", "tangent_chern"}) {
        if (!doc.contains(key)) {
            throw DataError(std::string("threefold document is missing field '") + key + "'");
        }
    }
    const auto& tc = doc["tangent_chern"];
    if (!tc.is_array() || tc.size() != 3) {
        throw DataError("tangent_chern must be an array [c1_H, c2_l, c3_p]");
    }
    const SheafClass tangent =
        SheafClass::make(3, rational_from_json(tc[0], "tangent_chern[0]"),
                         rational_from_json(tc[1], "tangent_chern[1]"),
                         rational_from_json(tc[2], "tangent_chern[2]"));
    const Rational iota_q = rational_from_json(doc["iota"], "iota");
    return custom(doc["name"].get<std::string>(), to_int64(rational_from_json(doc["nu"], "nu")),
                  static_cast<int>(to_int64(rational_from_json(doc["tau"], "tau"))),
                  static_cast<int>(to_int64(rational_from_json(doc["rho"], "rho"))),
                  static_cast<int>(to_int64(iota_q)), tangent,
                  doc.value("h1_line_vanishing", false), doc.value("tangent_stable", false));
}

ThreefoldModel model_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open threefold document: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json_text(buf.str());
}

long long h_line(const ThreefoldModel& x, int i, int t) {
    require_index(i);
    require_tables(x);
    const bool p3 = x.kind == ThreefoldModel::Kind::P3;
    switch (i) {
        case 0: return p3 ? h0_line_p3(t) : h0_line_q3(t);
        case 1:
        case 2: return 0;
        default: return p3 ? h0_line_p3(-t - 4) : h0_line_q3(-t - 3);
    }
}

long long h_restricted_cotangent_p4(int i, int t) {
    require_index(i);
    switch (i) {
        case 0: return h0_rcot_q3(t);
        case 1: return t == 0 ? 1 : 0;
        case 2: return 0;
        default: return h0_rtan_q3(-t - 3); // Serre dual of T P4|Q
    }
}

long long h_restricted_tangent_p4(int i, int t) {
    require_index(i);
    switch (i) {
        case 0: return h0_rtan_q3(t);
        case 1: return 0;
        case 2: return t == -3 ? 1 : 0;
        default: return h0_rcot_q3(-t - 3);
    }
}

long long h_cotangent(const ThreefoldModel& x, int i, int t) {
    require_index(i);
    require_tables(x);
    if (x.kind == ThreefoldModel::Kind::P3) {
        switch (i) {
            case 0: return h0_cotangent_p3(t);
            case 1: return t == 0 ? 1 : 0;
            case 2: return 0;
            default: return h0_tangent_p3(-t - 4);
        }
    }
    switch (i) {
        case 0: return h0_cotangent_q3(t);
        case 1: return t == 0 ? 1 : 0;
        case 2: return t == -1 ? 1 : 0; // Serre dual of h^1(TQ3(-t-3))
        default: return h0_cotangent_q3(-t - 1);
    }
}

long long h_tangent(const ThreefoldModel& x, int i, int t) {
    require_index(i);
    require_tables(x);
    if (x.kind == ThreefoldModel::Kind::P3) {
        switch (i) {
            case 0: return h0_tangent_p3(t);
            case 1: return 0;
            case 2: return t == -4 ? 1 : 0;
            default: return h0_cotangent_p3(-t - 4);
        }
    }
    // TQ3 = Omega^1_{Q3}(2)
    return h_cotangent(x, i, t + 2);
}

long long h_spinor(int i, int t) {
    require_index(i);
    switch (i) {
        case 0: return t <= 0 ? 0 : chi_spinor(t);
        case 1:
        case 2: return 0; // no intermediate cohomology in any twist
        default: return h_spinor(0, -t - 2); // S dual = S(1)
    }
}

long long h_sheaf(const ThreefoldModel& x, SheafId id, int i, int t) {
    require_tables(x);
    const bool q3 = x.kind == ThreefoldModel::Kind::Q3;
    switch (id) {
        case SheafId::O: return h_line(x, i, t);
        case SheafId::Omega1X: return h_cotangent(x, i, t);
        case SheafId::TX: return h_tangent(x, i, t);
        case SheafId::OmegaP4RestQ:
            if (!q3) throw RangeNotCovered("Omega^1_{P4}|Q lives on the quadric only");
            return h_restricted_cotangent_p4(i, t);
        case SheafId::TP4RestQ:
            if (!q3) throw RangeNotCovered("T P4|Q lives on the quadric only");
            return h_restricted_tangent_p4(i, t);
        case SheafId::Spinor:
            if (!q3) throw RangeNotCovered("the spinor bundle lives on the quadric only");
            return h_spinor(i, t);
    }
    throw DataError("unknown sheaf id");
}

CohTableEntry table_entry(const ThreefoldModel& x, SheafId id, int t) {
    CohTableEntry e{id, t, {0, 0, 0, 0}};
    for (int i = 0; i < 4; ++i) e.h[static_cast<size_t>(i)] = h_sheaf(x, id, i, t);
    return e;
}

SheafClass spinor_class() { return SheafClass::make(2, -1, 1, 0); }

SheafClass sheaf_class_of(const ThreefoldModel& x, SheafId id) {
    switch (id) {
        case SheafId::O: return SheafClass::line_bundle(0);
        case SheafId::Omega1X: return dual(x.tangent);
        case SheafId::TX: return x.tangent;
        case SheafId::Spinor:
            if (x.kind != ThreefoldModel::Kind::Q3) {
                throw RangeNotCovered("the spinor bundle lives on the quadric only");
            }
            return spinor_class();
        default:
            throw RangeNotCovered("restricted ambient sheaves have rank 4, outside the rank<=3 "
                                  "Chern calculus");
    }
}

} // namespace foliatlas
