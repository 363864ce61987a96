#ifndef RESOLV_SCENARIOS_HPP
#define RESOLV_SCENARIOS_HPP

#include <string>
#include <vector>

#include "resolv/permgroup.hpp"
#include "resolv/poly_text.hpp"

namespace resolv::scenarios {

/// Warm-up: quartic with Galois group S4, resolvent cubic through the
/// S3-quotient S4/V4.
struct Warmup {
    PermGroup G;   // S4
    PermGroup H;   // V4, normal
    PermGroup F;   // order 8, stabilizer of P
    MultiPoly P;   // x1*x2 + x3*x4
};

inline Warmup warmup() {
    Warmup s;
    s.G = PermGroup::symmetric(4);
    s.H = PermGroup::from_cycles(4, {"(1,4)(2,3)", "(1,3)(2,4)"});
    s.F = PermGroup::from_cycles(4, {"(3,4)", "(1,4)(2,3)", "(1,3)(2,4)"});
    s.P = parse_poly("x1*x2 + x3*x4");
    return s;
}

/// The degree-6 group PGL2(Z/4) acting on the roots of the sextic A(Y),
/// entered through its explicit permutation dictionary.  The matrix side is
/// documentation only; the permutation images are the operative data.
struct FourDivision {
    PermGroup G;   // order 48
    PermGroup H;   // order 2, normal; G/H = S4
    PermGroup F;   // order 12, stabilizer of P
    MultiPoly P;   // plain orbit sum R_F(x1*x2), six terms
    std::vector<Perm> printed_transversal;  // (), (1,6), (2,4), (3,5)
};

inline FourDivision four_division() {
    FourDivision s;
    std::vector<std::string> f_gens = {"(1,2,5,6,4,3)", "(1,4)(2,6)"};
    // G is generated by F together with the coset representatives.
    s.G = PermGroup::from_cycles(
        6, {"(1,2,5,6,4,3)", "(1,4)(2,6)", "(1,6)", "(2,4)", "(3,5)"});
    s.H = PermGroup::from_cycles(6, {"(1,6)(2,4)(3,5)"});
    s.F = PermGroup::from_cycles(6, f_gens);
    s.P = parse_poly("x1*x2 + x2*x5 + x5*x6 + x4*x6 + x3*x4 + x1*x3");
    for (const char* c : {"()", "(1,6)", "(2,4)", "(3,5)"})
        s.printed_transversal.push_back(Perm::from_cycles(c, 6));
    return s;
}

/// Fundamental-invariant table for the four-division pipeline: plain orbit
/// sums R_G of the listed monomials together with their images in Q[a,b]
/// under the evaluation homomorphism at the roots of A(Y).
struct InvariantGenerator {
    std::string name;
    MultiPoly polynomial;  // plain orbit sum R_G(monomial)
    MultiPoly image;       // value in a, b
};

inline std::vector<InvariantGenerator> four_division_invariants(const PermGroup& g) {
    struct Row {
        const char* name;
        const char* monomial;
        const char* image;
    };
    static const Row rows[] = {
        {"I1", "x1", "0"},
        {"I2a", "x2*x4", "a"},
        {"I2b", "x1*x2", "4*a"},
        {"I3a", "x1*x2*x3", "-8*b"},
        {"I3b", "x1*x2*x4", "-12*b"},
        {"I4a", "x2*x3*x4*x5", "-a^2"},
        {"I4b", "x1*x2*x3*x4", "-4*a^2"},
        {"I5", "x1*x2*x3*x4*x5", "4*a*b"},
        {"I6", "x1*x2*x3*x4*x5*x6", "-(a^3+8*b^2)"},
    };
    std::vector<InvariantGenerator> out;
    for (auto& r : rows) {
        InvariantGenerator ig;
        ig.name = r.name;
        ig.polynomial = orbit_sum(g, parse_poly(r.monomial)).plain;
        ig.image = parse_poly(r.image);
        out.push_back(std::move(ig));
    }
    return out;
}

/// The octic scenario: Hol(Q8) of order 192 on the eight roots, with its
/// three normal subgroups of order 8 and the three index-4 subgroups F_i.
struct OcticQuotients {
    PermGroup G;
    PermGroup H[3];
    PermGroup F[3];
    MultiPoly P[3];                           // secondary invariants; P[2] = x1*x8
    MultiPoly primary_deg3[2];                // R_{F1}(x1x2x3), R_{F2}(x1x2x3): vanish
    std::vector<Perm> printed_transversal[3];
};

inline OcticQuotients octic_quotients() {
    OcticQuotients s;
    s.G = PermGroup::from_cycles(8, {"(1,3,4,8,7,5)(2,6)", "(2,6)(3,7)",
                                     "(2,4,7)(3,6,5)", "(3,7)(4,5)",
                                     "(1,7,4,2,8,3,5,6)"});
    s.H[0] = PermGroup::from_cycles(
        8, {"(1,2,8,6)(3,5,7,4)", "(1,7,8,3)(2,5,6,4)", "(1,8)(2,6)(3,7)(4,5)"});
    s.H[1] = PermGroup::from_cycles(
        8, {"(1,4,8,5)(2,3,6,7)", "(1,2,8,6)(3,4,7,5)", "(1,8)(2,6)(3,7)(4,5)"});
    s.H[2] = PermGroup::from_cycles(
        8, {"(2,6)(4,5)", "(2,6)(3,7)", "(1,8)(2,6)(3,7)(4,5)"});
    s.F[0] = PermGroup::from_cycles(
        8, {"(2,4)(3,7)(5,6)", "(2,3,5)(4,6,7)", "(1,2,8,6)(3,5,7,4)",
            "(1,7,8,3)(2,5,6,4)", "(1,8)(2,6)(3,7)(4,5)"});
    s.F[1] = PermGroup::from_cycles(
        8, {"(2,5)(3,7)(4,6)", "(2,7,4)(3,5,6)", "(1,4,8,5)(2,3,6,7)",
            "(1,2,8,6)(3,4,7,5)", "(1,8)(2,6)(3,7)(4,5)"});
    s.F[2] = PermGroup::from_cycles(
        8, {"(2,4,6,5)", "(2,7,4)(3,5,6)", "(2,6)(4,5)", "(2,6)(3,7)",
            "(1,8)(2,6)(3,7)(4,5)"});

    s.P[0] = parse_poly(
        "x1^2*x2*x7 + x1^2*x3*x4 + x1^2*x5*x6 + x1*x2^2*x7 + x1*x2*x7^2 + "
        "x1*x3^2*x4 + x1*x3*x4^2 + x1*x5^2*x6 + x1*x5*x6^2 + x2^2*x3*x5 + "
        "x2^2*x4*x8 + x2*x3^2*x5 + x2*x3*x5^2 + x2*x4^2*x8 + x2*x4*x8^2 + "
        "x3^2*x6*x8 + x3*x6^2*x8 + x3*x6*x8^2 + x4^2*x6*x7 + x4*x6^2*x7 + "
        "x4*x6*x7^2 + x5^2*x7*x8 + x5*x7^2*x8 + x5*x7*x8^2");
    s.P[1] = parse_poly(
        "x1^2*x2*x3 + x1^2*x4*x6 + x1^2*x5*x7 + x1*x2^2*x7 + x1*x2*x4^2 + "
        "x1*x3^2*x6 + x1*x3*x5^2 + x1*x4*x7^2 + x1*x5*x6^2 + x2^2*x3*x5 + "
        "x2^2*x4*x8 + x2*x3^2*x4 + x2*x5^2*x7 + x2*x5*x8^2 + x2*x7^2*x8 + "
        "x3^2*x5*x8 + x3*x4^2*x6 + x3*x4*x8^2 + x3*x6^2*x8 + x4^2*x7*x8 + "
        "x4*x6^2*x7 + x5^2*x6*x8 + x5*x6*x7^2 + x6*x7*x8^2");
    s.P[2] = parse_poly("x1*x8");

    s.primary_deg3[0] = orbit_sum(s.F[0], parse_poly("x1*x2*x3")).plain;
    s.primary_deg3[1] = orbit_sum(s.F[1], parse_poly("x1*x2*x3")).plain;

    const char* t1[] = {"()", "(3,7)(4,5)", "(1,2,5,3,8,6,4,7)",
                        "(1,3,5,8,7,4)(2,6)"};
    const char* t2[] = {"()", "(1,3,4,8,7,5)(2,6)", "(2,6)(3,7)",
                        "(1,5,7,8,4,3)(2,6)"};
    const char* t3[] = {"()", "(1,3,4,8,7,5)(2,6)", "(1,5,7,8,4,3)(2,6)",
                        "(1,6,5,3,8,2,4,7)"};
    for (auto* c : t1) s.printed_transversal[0].push_back(Perm::from_cycles(c, 8));
    for (auto* c : t2) s.printed_transversal[1].push_back(Perm::from_cycles(c, 8));
    for (auto* c : t3) s.printed_transversal[2].push_back(Perm::from_cycles(c, 8));
    return s;
}

}  // namespace resolv::scenarios

#endif
