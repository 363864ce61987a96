#ifndef RESOLV_ELLIPTIC_HPP
#define RESOLV_ELLIPTIC_HPP

#include <mutex>
#include <string>
#include <vector>

#include "resolv/resolvent.hpp"
#include "resolv/resultant.hpp"

namespace resolv {

struct singular_curve : error {
    using error::error;
};
struct point_not_on_curve : error {
    using error::error;
};

/// y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
struct Curve {
    BigRat a, b;

    Curve(BigRat a_, BigRat b_) : a(std::move(a_)), b(std::move(b_)) {
        if (d().is_zero()) throw singular_curve("Curve: 4a^3 + 27b^2 = 0");
    }

    BigRat d() const { return BigRat(4) * a.pow(3) + BigRat(27) * b.pow(2); }
    BigRat discriminant() const { return BigRat(-16) * d(); }
};

struct CurvePoint {
    Curve curve;
    BigRat z, w;

    CurvePoint(Curve c, BigRat z_, BigRat w_)
        : curve(std::move(c)), z(std::move(z_)), w(std::move(w_)) {
        if (w * w != z.pow(3) + curve.a * z + curve.b)
            throw point_not_on_curve("CurvePoint: w^2 != z^3 + a*z + b");
    }

    std::map<std::string, BigRat> bindings() const {
        return {{"a", curve.a}, {"b", curve.b}, {"z", z}, {"w", w}};
    }
};

/// The generic octic x^8 - 8w x^6 + 6(2az+3b) x^4 - (4a^3+27b^2).
inline MultiPoly octic_f() {
    return parse_poly("x^8 - 8*w*x^6 + 6*(2*a*z + 3*b)*x^4 - (4*a^3 + 27*b^2)");
}
inline MultiPoly octic_f(const CurvePoint& p) {
    std::map<std::string, MultiPoly> sub;
    for (auto& [k, v] : p.bindings()) sub[k] = MultiPoly(v);
    return octic_f().substitute(sub);
}

/// The generic sextic Y^6 + 5a Y^4 + 20b Y^3 - 5a^2 Y^2 - 4ab Y - a^3 - 8b^2.
inline MultiPoly sextic_A() {
    return parse_poly(
        "Y^6 + 5*a*Y^4 + 20*b*Y^3 - 5*a^2*Y^2 - 4*a*b*Y - a^3 - 8*b^2");
}
inline MultiPoly sextic_A(const Curve& e) {
    return sextic_A().substitute({{"a", MultiPoly(e.a)}, {"b", MultiPoly(e.b)}});
}

/// Reduce y-exponents modulo y^2 = x^3 + a x + b (result has y-degree <= 1).
inline MultiPoly reduce_y(const MultiPoly& p) {
    auto cs = p.coeffs_in("y");
    if (cs.size() <= 2) return p.compacted();
    static const MultiPoly curve = parse_poly("x^3 + a*x + b");
    MultiPoly out;
    for (size_t k = 0; k < cs.size(); ++k) {
        MultiPoly t = cs[k] * curve.pow(static_cast<unsigned>(k / 2));
        if (k % 2) t *= MultiPoly::var("y");
        out += t;
    }
    return out.compacted();
}

/// Reduce w-exponents modulo the point relation w^2 = z^3 + a z + b.  This is
/// the canonical arena for comparing octic-resolvent coefficients, which are
/// only determined modulo the on-curve relation.
inline MultiPoly reduce_on_curve(const MultiPoly& p) {
    auto cs = p.coeffs_in("w");
    if (cs.size() <= 2) return p.compacted();
    static const MultiPoly curve = parse_poly("z^3 + a*z + b");
    MultiPoly out;
    for (size_t k = 0; k < cs.size(); ++k) {
        MultiPoly t = cs[k] * curve.pow(static_cast<unsigned>(k / 2));
        if (k % 2) t *= MultiPoly::var("w");
        out += t;
    }
    return out.compacted();
}

/// Division polynomials A_n in x, y, a, b; seeded through A_4, recursion
/// beyond, always reduced to y-degree <= 1.
class DivisionPolySequence {
public:
    const MultiPoly& at(int n) {
        if (n < 0) throw error("DivisionPolySequence: n >= 0 required");
        auto it = cache_.find(n);
        if (it != cache_.end()) return it->second;
        MultiPoly result = compute(n);
        return cache_.emplace(n, std::move(result)).first->second;
    }

private:
    MultiPoly compute(int n) {
        switch (n) {
            case 0: return MultiPoly();
            case 1: return MultiPoly(1);
            case 2: return parse_poly("2*y");
            case 3: return parse_poly("3*x^4 + 6*a*x^2 + 12*b*x - a^2");
            case 4:
                return parse_poly(
                    "4*y*(x^6 + 5*a*x^4 + 20*b*x^3 - 5*a^2*x^2 - 4*a*b*x "
                    "- 8*b^2 - a^3)");
            default: break;
        }
        if (n % 2 == 1) {
            int m = (n - 1) / 2;
            return reduce_y(at(m + 2) * at(m).pow(3) -
                            at(m - 1) * at(m + 1).pow(3));
        }
        int m = n / 2;
        MultiPoly num = reduce_y(at(m) * (at(m + 2) * at(m - 1).pow(2) -
                                          at(m - 2) * at(m + 1).pow(2)));
        // After reduction the numerator is y-free, so dividing by 2y means
        // dividing by 2(x^3 + ax + b) and restoring a factor y.
        if (num.degree_in("y") > 0)
            throw not_divisible("division_poly: unexpected residual y");
        return MultiPoly::var("y") *
               exact_div(num, parse_poly("2*(x^3 + a*x + b)"));
    }

    std::map<int, MultiPoly> cache_;
};

inline MultiPoly division_poly(int n) {
    if (n < 1) throw error("division_poly: n >= 1 required");
    static DivisionPolySequence seq;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return seq.at(n);
}

/// Moebius function for the small n used here.
inline int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

/// Gamma_n = prod over d | n of A_d^{mu(n/d)}, computed with exact division.
inline MultiPoly gamma_n(int n) {
    if (n < 2) throw error("gamma_n: n >= 2 required");
    MultiPoly num(1), den(1);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(n / d);
        if (mu == 1) num *= division_poly(d);
        if (mu == -1) den *= division_poly(d);
    }
    return reduce_y(exact_div(reduce_y(num), reduce_y(den)));
}

/// Adopted resultant quadratic for T_n.  The source formula's X^2-(Y^3-aY-b)
/// contradicts the curve equation y^2 = x^3+ax+b; both sign conventions are
/// computed and the one reproducing the reference T_4 (the curve-equation
/// sign) is adopted.  See torsion_field_convention().
inline MultiPoly torsion_quadratic(bool curve_sign) {
    return curve_sign ? parse_poly("X^2 - (Y^3 + a*Y + b)")
                      : parse_poly("X^2 - (Y^3 - a*Y - b)");
}

inline const char* torsion_field_convention() {
    return "X^2 - (Y^3 + a*Y + b) (matches the curve equation); "
           "raw resultant normalized monic in X";
}

/// T_n(X) = Res_Y(Gamma_n(Y), quadratic), monic-normalized.  Only y-free
/// Gamma_n are supported (n not congruent to 2 mod 4).
inline MultiPoly torsion_field_poly(int n, bool curve_sign = true) {
    MultiPoly g = gamma_n(n);
    if (g.degree_in("y") > 0)
        throw error("torsion_field_poly: Gamma_n has residual y");
    g = g.substitute({{"x", MultiPoly::var("Y")}});
    MultiPoly r = resultant(g, torsion_quadratic(curve_sign), "Y");
    // normalize to monic in X
    auto cs = r.coeffs_in("X");
    MultiPoly lead = cs.back();
    BigRat lc = lead.coeff_of_monomial({});
    if (lead != MultiPoly(lc) || lc.is_zero())
        throw error("torsion_field_poly: non-constant leading coefficient");
    return (BigRat(1) / lc) * r;
}

inline MultiPoly torsion_field_poly(int n, const Curve& e, bool curve_sign = true) {
    return torsion_field_poly(n, curve_sign)
        .substitute({{"a", MultiPoly(e.a)}, {"b", MultiPoly(e.b)}});
}

/// Resolvent of conjugates scaled by lambda: sum_k c_k lambda^(n-k) var^k for
/// raw = sum_k c_k var^k of degree n.  This is lambda^n * raw(var / lambda).
inline MultiPoly rescale_resolvent(const MultiPoly& raw, const std::string& var,
                                   const BigRat& lambda) {
    auto cs = raw.coeffs_in(var);
    int n = static_cast<int>(cs.size()) - 1;
    MultiPoly out;
    for (int k = 0; k <= n; ++k)
        out += lambda.pow(static_cast<unsigned>(n - k)) * cs[static_cast<size_t>(k)] *
               MultiPoly::var(var, k);
    return out.compacted();
}

struct AdelmannResult {
    ResolventReport report;  // report.resolvent = R_{G,P}(Y)
    MultiPoly r_poly;        // R_{G,P}(Y) in Y, a, b
    MultiPoly shifted;       // R after Y -> Y + 2a
    MultiPoly b_poly;        // Y^4 - 4*Delta*Y - 12*a*Delta in Y, Delta, a
};

/// The full symbolic degree-6 pipeline: conjugates of P under the transversal,
/// Vieta expansion, invariant-solve per coefficient, and the 2a shift.
inline AdelmannResult adelmann_pipeline() {
    auto s = scenarios::four_division();
    auto gens = scenarios::four_division_invariants(s.G);

    // mandatory consistency gate: e_k images must match the sextic
    {
        static const char* want[6] = {"0", "5*a", "-20*b", "-5*a^2", "4*a*b",
                                      "-(a^3 + 8*b^2)"};
        std::vector<MultiPoly> esum(7);
        std::vector<MultiPoly> isum(7);
        for (auto& g : gens) {
            int d = g.polynomial.total_degree();
            esum[static_cast<size_t>(d)] += g.polynomial;
            isum[static_cast<size_t>(d)] += g.image;
        }
        for (int k = 1; k <= 6; ++k) {
            if (esum[static_cast<size_t>(k)] != elem_sym(6, k) ||
                isum[static_cast<size_t>(k)] != parse_poly(want[k - 1]))
                throw error(
                    "adelmann_pipeline: invariant table inconsistent with the "
                    "sextic's coefficients");
        }
    }

    auto trans = left_transversal(s.G, s.F);
    auto conj = conjugates_of_poly(trans, s.P);
    MultiPoly in_roots = vieta_expand(conj, "Y");

    AdelmannResult out;
    auto cs = in_roots.coeffs_in("Y");
    for (size_t k = 0; k < cs.size(); ++k) {
        MultiPoly img = (k + 1 == cs.size()) ? MultiPoly(1)
                                             : engine_invariant_solve(cs[k], gens);
        out.r_poly += img * MultiPoly::var("Y", static_cast<int>(k));
    }
    out.shifted =
        out.r_poly.substitute({{"Y", parse_poly("Y + 2*a")}}).compacted();
    out.b_poly = parse_poly("Y^4 - 4*Delta*Y - 12*a*Delta");
    MultiPoly check = out.b_poly.substitute(
        {{"Delta", parse_poly("-16*(4*a^3 + 27*b^2)")}});
    if (check != out.shifted)
        throw error("adelmann_pipeline: Delta rewrite does not match the shift");

    out.report.scenario = "four-division";
    out.report.variable = "Y";
    out.report.invariant = format_poly(s.P);
    for (auto& c : conj) out.report.conjugates.push_back(format_poly(c));
    out.report.resolvent = out.r_poly;
    out.report.engines = {"invariant-solve"};
    out.report.verification = "exact-table";
    return out;
}

/// Arbitrated value of omega_f(v35).  Symbolically only omega(v35)^2 is
/// determined; the sign is fixed numerically by the oracle suite (see the
/// octic tests), which confirms this choice at every sample curve.
inline MultiPoly omega_v35_value() {
    return parse_poly("2^6*(4*a^3 + 27*b^2)*(27*b*z^3 - 9*a^2*z^2 - a^3)");
}

struct HolQ8Result {
    ResolventReport reports[3];  // printed-normalized h1, h2, h3 in x
    MultiPoly raw[3];            // resolvents of the plain conjugates, in x
    MultiPoly omega_v35;
    std::vector<std::string> notes;
};

/// The full symbolic octic pipeline for the three S4-quotients.
inline HolQ8Result holq8_pipeline() {
    auto s = scenarios::octic_quotients();
    auto rel = PairingRelations::octic();
    HolQ8Result out;
    out.omega_v35 = omega_v35_value();

    // the degree-3 primary invariants produce identically-zero conjugates
    for (int i = 0; i < 2; ++i) {
        auto dc = conjugates_of_poly(left_transversal(s.G, s.F[i]),
                                     s.primary_deg3[i]);
        if (!vanishing_check(dc, rel))
            throw error("holq8_pipeline: degree-3 conjugates fail to vanish");
    }

    const BigRat lambda[3] = {BigRat(-2), BigRat(-2), BigRat(-1)};
    for (int i = 0; i < 3; ++i) {
        auto trans = left_transversal(s.G, s.F[i]);
        auto conj = conjugates_of_poly(trans, s.P[i]);
        MultiPoly in_roots = vieta_expand(conj, "x");
        auto cs = in_roots.coeffs_in("x");
        std::vector<std::string> engines;
        for (size_t k = 0; k < cs.size(); ++k) {
            if (k + 1 == cs.size()) {
                out.raw[i] += MultiPoly::var("x", static_cast<int>(k));
                continue;
            }
            MultiPoly img;
            try {
                auto r = engine_sign_specialize(cs[k], rel);
                img = r.image;
                engines.push_back("sign-specialize");
            } catch (const not_in_square_subring&) {
                auto r = engine_sign_specialize(cs[k], rel, out.omega_v35);
                img = r.image;
                engines.push_back("sign-specialize+v35");
            } catch (const not_symmetric&) {
                auto r = engine_sign_specialize(cs[k], rel, out.omega_v35);
                img = r.image;
                engines.push_back("sign-specialize+v35");
            }
            out.raw[i] +=
                reduce_on_curve(img) * MultiPoly::var("x", static_cast<int>(k));
        }
        out.raw[i] = out.raw[i].compacted();

        auto& rep = out.reports[i];
        rep.scenario = "octic-h" + std::to_string(i + 1);
        rep.variable = "x";
        rep.invariant = format_poly(s.P[i]);
        for (auto& c : conj) rep.conjugates.push_back(format_poly(c));
        rep.resolvent = rescale_resolvent(out.raw[i], "x", lambda[i]);
        rep.engines = engines;
        rep.verification = "oracle-derived";
        rep.notes.push_back(
            "reference coefficients correspond to conjugates scaled by " +
            lambda[i].str() +
            "; the raw product of (x - conjugate) is stored separately");
    }
    out.notes.push_back(
        "h3's raw x^3-coefficient is +8w (gamma_i = -x_i^2 under the pairing); "
        "the reference -8w form equals the raw resolvent at -x");
    out.notes.push_back(
        "omega(v35) sign is numerically arbitrated; the squared value is "
        "verified symbolically");
    return out;
}

}  // namespace resolv

#endif
