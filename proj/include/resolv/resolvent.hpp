#ifndef RESOLV_RESOLVENT_HPP
#define RESOLV_RESOLVENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resolv/linalg.hpp"
#include "resolv/poly_text.hpp"
#include "resolv/scenarios.hpp"
#include "resolv/symmetric.hpp"

namespace resolv {

struct not_in_span : error {
    using error::error;
};
struct not_in_square_subring : error {
    using error::error;
};
struct underdetermined : error {
    using error::error;
};
struct non_integral_fit : error {
    using error::error;
};

/// One resolvent pipeline run, with enough provenance to serialize.
struct ResolventReport {
    std::string scenario;
    std::string variable;
    std::string invariant;
    std::vector<std::string> conjugates;
    MultiPoly resolvent;
    std::vector<std::string> engines;  // per coefficient or single entry
    std::string verification;          // exact-table | oracle-derived | unverified
    std::vector<std::string> notes;
};

/// Monic product prod (var - c_i), expanded.
inline MultiPoly vieta_expand(const std::vector<MultiPoly>& conjugates,
                              const std::string& var) {
    if (conjugates.empty()) throw error("vieta_expand: empty conjugate list");
    MultiPoly acc(1);
    for (auto& c : conjugates) acc *= MultiPoly::var(var) - c;
    return acc;
}

/// Express `target` as a rational-linear combination of `basis`; returns the
/// coefficient vector or nullopt when target is outside the span.
inline std::optional<std::vector<BigRat>> express_in_basis(
    const MultiPoly& target, const std::vector<MultiPoly>& basis) {
    std::map<std::string, size_t> row_of;
    auto key_terms = [&](const MultiPoly& p) {
        std::vector<std::pair<std::string, BigRat>> out;
        for (auto& [mono, c] : p.compacted().named_terms()) {
            std::string key;
            for (auto& [v, e] : mono) key += v + "^" + std::to_string(e) + " ";
            out.emplace_back(std::move(key), c);
        }
        return out;
    };
    std::vector<std::vector<std::pair<std::string, BigRat>>> cols;
    for (auto& b : basis) cols.push_back(key_terms(b));
    auto tgt = key_terms(target);
    for (auto& col : cols)
        for (auto& [k, c] : col) row_of.emplace(k, row_of.size());
    for (auto& [k, c] : tgt) row_of.emplace(k, row_of.size());

    std::vector<std::vector<BigRat>> a(row_of.size(),
                                       std::vector<BigRat>(basis.size(), BigRat(0)));
    std::vector<BigRat> rhs(row_of.size(), BigRat(0));
    for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [k, c] : cols[j]) a[row_of[k]][j] = c;
    for (auto& [k, c] : tgt) rhs[row_of[k]] = c;
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    // free columns were zeroed by the solver; re-verify exactly
    MultiPoly recon;
    for (size_t j = 0; j < basis.size(); ++j) recon += (*sol)[j] * basis[j];
    if (recon != target) return std::nullopt;
    return sol;
}

/// Engine for fully symmetric resolvent coefficients: reduce to e_1..e_n and
/// map e_k to (-1)^k times the x^(n-k)-coefficient symbol of the monic input
/// polynomial.  coeff_syms[k] names the x^k-coefficient (k = 0..n-1).
inline MultiPoly engine_symmetric(const MultiPoly& resolvent_in_roots,
                                  const std::string& var, int n,
                                  const std::vector<std::string>& coeff_syms) {
    if (static_cast<int>(coeff_syms.size()) != n)
        throw error("engine_symmetric: need one symbol per non-leading coefficient");
    MultiPoly out;
    auto coeffs = resolvent_in_roots.coeffs_in(var);
    std::map<std::string, MultiPoly> e_to_sym;
    for (int k = 1; k <= n; ++k) {
        BigRat sign = (k % 2 == 0) ? BigRat(1) : BigRat(-1);
        e_to_sym["e" + std::to_string(k)] =
            sign * MultiPoly::var(coeff_syms[static_cast<size_t>(n - k)]);
    }
    for (size_t k = 0; k < coeffs.size(); ++k) {
        MultiPoly reduced = coeffs[k].is_zero()
                                ? MultiPoly()
                                : symmetric_reduce(coeffs[k], n).substitute(e_to_sym);
        out += reduced * MultiPoly::var(var, static_cast<int>(k));
    }
    return out;
}

/// Engine for the four-division pipeline: write a G-invariant coefficient as
/// an exact rational-linear combination of degree-matching products of the
/// fundamental-invariant polynomials, then push through the table images.
inline MultiPoly engine_invariant_solve(
    const MultiPoly& coeff, const std::vector<scenarios::InvariantGenerator>& gens) {
    if (coeff.is_zero()) return MultiPoly();
    int deg = coeff.total_degree();

    // multisets of generator indices with matching total degree
    std::vector<std::vector<size_t>> combos;
    std::vector<size_t> cur;
    auto rec = [&](auto&& self, size_t start, int remaining) -> void {
        if (remaining == 0) {
            combos.push_back(cur);
            return;
        }
        for (size_t i = start; i < gens.size(); ++i) {
            int d = gens[i].polynomial.total_degree();
            if (d <= remaining) {
                cur.push_back(i);
                self(self, i, remaining - d);
                cur.pop_back();
            }
        }
    };
    rec(rec, 0, deg);

    std::vector<MultiPoly> basis;
    std::vector<MultiPoly> images;
    for (auto& combo : combos) {
        MultiPoly prod(1), img(1);
        for (size_t i : combo) {
            prod *= gens[i].polynomial;
            img *= gens[i].image;
        }
        basis.push_back(std::move(prod));
        images.push_back(std::move(img));
    }
    auto sol = express_in_basis(coeff, basis);
    if (!sol)
        throw not_in_span(
            "engine_invariant_solve: coefficient outside the generator-product span");
    MultiPoly image;
    for (size_t j = 0; j < images.size(); ++j) image += (*sol)[j] * images[j];
    return image;
}

/// Root-pairing relations of the octic: opposite roots cancel, and the
/// elementary symmetric functions of the squared half-roots are pinned by the
/// octic's coefficients.
struct PairingRelations {
    std::map<std::string, MultiPoly> substitution;
    MultiPoly e_sq_value[4];  // values of e_k(x1^2..x4^2) in a,b,z,w

    static PairingRelations octic() {
        PairingRelations r;
        r.substitution = {{"x8", -MultiPoly::var("x1")},
                          {"x6", -MultiPoly::var("x2")},
                          {"x7", -MultiPoly::var("x3")},
                          {"x5", -MultiPoly::var("x4")}};
        r.e_sq_value[0] = parse_poly("8*w");
        r.e_sq_value[1] = parse_poly("12*a*z + 18*b");
        r.e_sq_value[2] = MultiPoly();
        r.e_sq_value[3] = parse_poly("-(4*a^3 + 27*b^2)");
        return r;
    }
};

namespace detail {

/// e_k evaluated at squared variables x1^2..x4^2, as a polynomial in x.
inline MultiPoly elem_sym_of_squares(int k) {
    std::map<std::string, MultiPoly> sq;
    for (int i = 1; i <= 4; ++i) {
        std::string v = "x" + std::to_string(i);
        sq[v] = MultiPoly::var(v, 2);
    }
    return elem_sym(4, k).substitute(sq);
}

/// The alternating degree-16 generator prod x_i * prod_{i<j} (x_i^2 - x_j^2).
inline MultiPoly alternating_generator() {
    MultiPoly p(1);
    for (int i = 1; i <= 4; ++i) p *= MultiPoly::var("x" + std::to_string(i));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            p *= MultiPoly::var("x" + std::to_string(i), 2) -
                 MultiPoly::var("x" + std::to_string(j), 2);
    return p;
}

/// Exponent vectors (m1..m4) with 2*(m1 + 2*m2 + 3*m3 + 4*m4) = xdeg.
inline std::vector<std::array<int, 4>> square_monomial_exponents(int xdeg) {
    std::vector<std::array<int, 4>> out;
    if (xdeg < 0 || xdeg % 2 != 0) return out;
    int half = xdeg / 2;
    for (int m4 = 0; 4 * m4 <= half; ++m4)
        for (int m3 = 0; 4 * m4 + 3 * m3 <= half; ++m3)
            for (int m2 = 0; 4 * m4 + 3 * m3 + 2 * m2 <= half; ++m2) {
                int m1 = half - 4 * m4 - 3 * m3 - 2 * m2;
                out.push_back({m1, m2, m3, m4});
            }
    return out;
}

}  // namespace detail

/// Result of the sign-specialization engine: the image in a,b,z,w plus which
/// route produced it.
struct SignSpecializeResult {
    MultiPoly image;
    bool used_alternating = false;
};

/// Specialize a Hol(Q8)-invariant coefficient through the pairing relations,
/// then express it over the squared-root subring (optionally extended by the
/// alternating generator whose image must be supplied).  Throws
/// not_in_square_subring when the coefficient lies outside the basis span.
inline SignSpecializeResult engine_sign_specialize(
    const MultiPoly& coeff, const PairingRelations& rel,
    const std::optional<MultiPoly>& alternating_image = std::nullopt) {
    MultiPoly q = coeff.substitute(rel.substitution).compacted();
    if (q.is_zero()) return {MultiPoly(), false};
    int deg = q.total_degree();

    if (!alternating_image) {
        // without the alternating extension the specialized coefficient must
        // be S4-symmetric in x1..x4
        for (int i = 1; i < 4; ++i) {
            std::map<std::string, MultiPoly> sw = {
                {"x" + std::to_string(i), MultiPoly::var("x" + std::to_string(i + 1))},
                {"x" + std::to_string(i + 1), MultiPoly::var("x" + std::to_string(i))}};
            if (q.substitute(sw) != q)
                throw not_symmetric(
                    "engine_sign_specialize: specialized coefficient not symmetric");
        }
    }

    MultiPoly esq[4];
    for (int k = 1; k <= 4; ++k) esq[k - 1] = detail::elem_sym_of_squares(k);

    std::vector<MultiPoly> basis;
    std::vector<MultiPoly> images;
    auto push_monomials = [&](int xdeg, const MultiPoly& extra_poly,
                              const MultiPoly& extra_img) {
        for (auto& m : detail::square_monomial_exponents(xdeg)) {
            MultiPoly prod = extra_poly, img = extra_img;
            for (int k = 0; k < 4; ++k) {
                if (m[k] == 0) continue;
                prod *= esq[k].pow(static_cast<unsigned>(m[k]));
                img *= rel.e_sq_value[k].pow(static_cast<unsigned>(m[k]));
            }
            basis.push_back(std::move(prod));
            images.push_back(std::move(img));
        }
    };
    push_monomials(deg, MultiPoly(1), MultiPoly(1));
    size_t pure_size = basis.size();
    if (alternating_image)
        push_monomials(deg - 16, detail::alternating_generator(), *alternating_image);

    auto sol = express_in_basis(q, basis);
    if (!sol)
        throw not_in_square_subring(
            "engine_sign_specialize: coefficient outside the squared-root subring");
    SignSpecializeResult out;
    for (size_t j = 0; j < basis.size(); ++j) {
        if ((*sol)[j].is_zero()) continue;
        out.image += (*sol)[j] * images[j];
        if (j >= pure_size) out.used_alternating = true;
    }
    return out;
}

/// One exact-evaluation sample for the interpolation engine.
struct AnsatzSample {
    std::map<std::string, BigRat> point;  // bindings for a, b, z, w
    BigRat value;
};

/// Weight-graded monomials in a,b,z,w with w-exponent at most 1 (the
/// canonical basis modulo the point relation w^2 = z^3 + a z + b, which every
/// on-curve sample satisfies).
inline std::vector<MultiPoly> ansatz_basis(int target_weight) {
    std::vector<MultiPoly> out;
    for (int l = 0; l <= 1; ++l)
        for (int j = 0; 12 * j + 6 * l <= target_weight; ++j)
            for (int i = 0; 8 * i + 12 * j + 6 * l <= target_weight; ++i) {
                int rest = target_weight - 8 * i - 12 * j - 6 * l;
                if (rest % 4 != 0) continue;
                int k = rest / 4;
                MultiPoly m(1);
                if (i) m *= MultiPoly::var("a", i);
                if (j) m *= MultiPoly::var("b", j);
                if (k) m *= MultiPoly::var("z", k);
                if (l) m *= MultiPoly::var("w", l);
                out.push_back(m);
            }
    return out;
}

/// Fit an integer-coefficient weighted-homogeneous polynomial in a,b,z,w to
/// exact samples; the last three samples are held out for verification.
inline MultiPoly engine_ansatz(int target_weight,
                               const std::vector<AnsatzSample>& samples) {
    auto basis = ansatz_basis(target_weight);
    if (samples.size() < basis.size() + 5)
        throw underdetermined("engine_ansatz: need at least basis+5 samples");
    size_t fit_n = samples.size() - 3;
    std::vector<std::vector<BigRat>> a;
    std::vector<BigRat> rhs;
    for (size_t s = 0; s < fit_n; ++s) {
        std::vector<BigRat> row;
        for (auto& m : basis) row.push_back(m.evaluate(samples[s].point));
        a.push_back(std::move(row));
        rhs.push_back(samples[s].value);
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) throw non_integral_fit("engine_ansatz: inconsistent samples");
    MultiPoly fit;
    for (size_t j = 0; j < basis.size(); ++j) {
        if (!(*sol)[j].is_integer())
            throw non_integral_fit("engine_ansatz: non-integral coefficient");
        fit += (*sol)[j] * basis[j];
    }
    for (size_t s = fit_n; s < samples.size(); ++s)
        if (fit.evaluate(samples[s].point) != samples[s].value)
            throw non_integral_fit("engine_ansatz: held-out sample mismatch");
    return fit;
}

/// True iff every conjugate collapses to zero under the pairing relations.
inline bool vanishing_check(const std::vector<MultiPoly>& conjugates,
                            const PairingRelations& rel) {
    for (auto& c : conjugates)
        if (!c.substitute(rel.substitution).is_zero()) return false;
    return true;
}

/// The degree-35 fundamental invariant of the octic group and its quartic
/// specialization under the root pairing.
struct V35 {
    MultiPoly u35;  // weighted orbit sum over G of x1^7 x2^5 x3^3 x5
    MultiPoly v35;  // -(1/8) * u35 specialized to <x1,x2,x3,x4,-x4,-x2,-x3,-x1>
};

inline V35 compute_v35(const PermGroup& g) {
    V35 out;
    MultiPoly seed = parse_poly("x1^7*x2^5*x3^3*x5");
    out.u35 = orbit_sum(g, seed).weighted;
    std::map<std::string, MultiPoly> spec = {{"x5", -MultiPoly::var("x4")},
                                             {"x6", -MultiPoly::var("x2")},
                                             {"x7", -MultiPoly::var("x3")},
                                             {"x8", -MultiPoly::var("x1")}};
    out.v35 = BigRat(-1, 8) * out.u35.substitute(spec);
    return out;
}

}  // namespace resolv

#endif
