#ifndef RESOLV_ORACLE_HPP
#define RESOLV_ORACLE_HPP

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "resolv/multipoly.hpp"

namespace resolv {

struct non_convergence : error {
    using error::error;
};
struct no_pairing : error {
    using error::error;
};
struct no_labeling_matches : error {
    using error::error;
};

using Real = boost::multiprecision::mpfr_float;

/// Set the working precision in bits for subsequently created Reals.
inline void set_precision_bits(unsigned bits) {
    // boost mpfr precision is specified in decimal digits
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
}

/// Minimal arbitrary-precision complex type.  std::complex is not reliable
/// for user-defined scalars, so the few operations needed are hand-rolled.
struct ComplexAP {
    Real re{0}, im{0};

    ComplexAP() = default;
    ComplexAP(Real r) : re(std::move(r)) {}
    ComplexAP(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexAP(const BigRat& q)
        : re(Real(q.num().get_str()) / Real(q.den().get_str())) {}

    ComplexAP operator+(const ComplexAP& o) const { return {re + o.re, im + o.im}; }
    ComplexAP operator-(const ComplexAP& o) const { return {re - o.re, im - o.im}; }
    ComplexAP operator-() const { return {-re, -im}; }
    ComplexAP operator*(const ComplexAP& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexAP operator/(const ComplexAP& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    ComplexAP& operator+=(const ComplexAP& o) { return *this = *this + o; }
    ComplexAP& operator-=(const ComplexAP& o) { return *this = *this - o; }
    ComplexAP& operator*=(const ComplexAP& o) { return *this = *this * o; }

    Real abs() const { return boost::multiprecision::sqrt(re * re + im * im); }

    ComplexAP pow(unsigned e) const {
        ComplexAP r(Real(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
};

/// Evaluate a MultiPoly at complex bindings (every variable must be bound).
inline ComplexAP evaluate_complex(const MultiPoly& p,
                                  const std::map<std::string, ComplexAP>& point) {
    ComplexAP acc;
    for (auto& [mono, c] : p.named_terms()) {
        ComplexAP t{ComplexAP(c)};
        for (auto& [v, e] : mono) {
            auto it = point.find(v);
            if (it == point.end())
                throw missing_binding("evaluate_complex: unbound variable " + v);
            t *= it->second.pow(static_cast<unsigned>(e));
        }
        acc += t;
    }
    return acc;
}

namespace detail {

inline ComplexAP horner(const std::vector<ComplexAP>& coeffs, const ComplexAP& x) {
    ComplexAP acc;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

}  // namespace detail

/// All roots of a univariate polynomial with rational coefficients, via
/// Aberth-Ehrlich with a Durand-Kerner fallback.  Deterministic.
inline std::vector<ComplexAP> find_roots(const MultiPoly& p,
                                         unsigned precision_bits = 256) {
    set_precision_bits(precision_bits);
    auto vars = p.compacted().vars();
    if (vars.size() != 1) throw error("find_roots: polynomial must be univariate");
    auto cpolys = p.coeffs_in(vars[0]);
    std::vector<ComplexAP> c;
    for (auto& cp : cpolys) c.push_back(ComplexAP(cp.coeff_of_monomial({})));
    size_t n = c.size() - 1;
    if (n < 1) throw error("find_roots: degree >= 1 required");

    std::vector<ComplexAP> dc;  // derivative coefficients
    for (size_t k = 1; k <= n; ++k) dc.push_back(ComplexAP(Real(k)) * c[k]);

    Real lc = c[n].abs();
    Real cauchy(1);
    for (size_t k = 0; k < n; ++k) cauchy = (std::max)(cauchy, 1 + c[k].abs() / lc);

    Real tol = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits) / 2);
    auto residual_ok = [&](const std::vector<ComplexAP>& z) {
        for (auto& r : z) {
            Real scale = (std::max)(Real(1), r.abs());
            Real s(1);
            for (size_t k = 0; k < n; ++k) s *= scale;
            if (detail::horner(c, r).abs() / (lc * s) > tol) return false;
        }
        return true;
    };

    // deterministic perturbed-circle start
    auto initial = [&](Real angle0) {
        std::vector<ComplexAP> z;
        const Real pi = boost::math::constants::pi<Real>();
        for (size_t k = 0; k < n; ++k) {
            Real ang = angle0 + 2 * pi * Real(k) / Real(static_cast<unsigned>(n));
            z.push_back({cauchy * boost::multiprecision::cos(ang),
                         cauchy * boost::multiprecision::sin(ang)});
        }
        return z;
    };

    // Aberth-Ehrlich
    std::vector<ComplexAP> z = initial(Real("0.4"));
    for (int iter = 0; iter < 500; ++iter) {
        bool moved = false;
        for (size_t k = 0; k < n; ++k) {
            ComplexAP pv = detail::horner(c, z[k]);
            ComplexAP dv = detail::horner(dc, z[k]);
            if (dv.abs() == 0) continue;
            ComplexAP ratio = pv / dv;
            ComplexAP sum;
            for (size_t j = 0; j < n; ++j)
                if (j != k) sum += ComplexAP(Real(1)) / (z[k] - z[j]);
            ComplexAP denom = ComplexAP(Real(1)) - ratio * sum;
            ComplexAP step = ratio / denom;
            z[k] -= step;
            if (step.abs() > tol) moved = true;
        }
        if (!moved && residual_ok(z)) return z;
    }
    if (residual_ok(z)) return z;

    // Durand-Kerner fallback
    z = initial(Real("0.7"));
    for (int iter = 0; iter < 2000; ++iter) {
        bool moved = false;
        for (size_t k = 0; k < n; ++k) {
            ComplexAP num = detail::horner(c, z[k]) / c[n];
            ComplexAP den(Real(1));
            for (size_t j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            ComplexAP step = num / den;
            z[k] -= step;
            if (step.abs() > tol) moved = true;
        }
        if (!moved && residual_ok(z)) return z;
    }
    throw non_convergence("find_roots: iteration cap reached");
}

/// Labeled octic roots obeying r8=-r1, r6=-r2, r7=-r3, r5=-r4.
struct RootLabeling {
    std::array<ComplexAP, 8> r;  // r[i] holds the root labeled i+1

    const ComplexAP& at(int i) const { return r[static_cast<size_t>(i - 1)]; }

    std::map<std::string, ComplexAP> bindings() const {
        std::map<std::string, ComplexAP> b;
        for (int i = 1; i <= 8; ++i) b["x" + std::to_string(i)] = at(i);
        return b;
    }

    /// Apply a pair-respecting relabeling: pair_perm maps pair slot i to the
    /// original pair, flip negates the chosen representative.
    RootLabeling relabel(const std::array<int, 4>& pair_perm,
                         const std::array<bool, 4>& flip) const {
        RootLabeling out;
        for (int i = 0; i < 4; ++i) {
            ComplexAP v = r[static_cast<size_t>(pair_perm[static_cast<size_t>(i)])];
            if (flip[static_cast<size_t>(i)]) v = -v;
            out.r[static_cast<size_t>(i)] = v;
            out.r[static_cast<size_t>(7 - i)] = -v;
        }
        // fix the pairing pattern to r5=-r4, r6=-r2, r7=-r3, r8=-r1
        std::swap(out.r[5], out.r[6]);
        return out;
    }
};

/// Canonical labeling of negation-closed roots: pairs sorted by |Re| then
/// |Im|, representative has nonnegative real part (ties broken by imaginary
/// part).
inline RootLabeling pair_by_negation(std::vector<ComplexAP> roots,
                                     const Real& tol) {
    if (roots.size() != 8 && roots.size() % 2 != 0)
        throw no_pairing("pair_by_negation: even root count required");
    std::vector<std::pair<ComplexAP, ComplexAP>> pairs;
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        size_t best = roots.size();
        Real bestd;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            Real d = (roots[i] + roots[j]).abs();
            if (best == roots.size() || d < bestd) {
                best = j;
                bestd = d;
            }
        }
        if (best == roots.size() || bestd > tol)
            throw no_pairing("pair_by_negation: no negation partner in tolerance");
        used[best] = true;
        ComplexAP a = roots[i], b = roots[best];
        bool a_first = a.re > 0 || (a.re == 0 && a.im >= 0);
        // canonical representative: nonnegative real part, tie on imaginary
        if (boost::multiprecision::abs(a.re) < tol)
            a_first = a.im >= 0;
        else
            a_first = a.re > 0;
        if (!a_first) std::swap(a, b);
        pairs.emplace_back(a, b);
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
        Real pr = boost::multiprecision::abs(p.first.re),
             qr = boost::multiprecision::abs(q.first.re);
        if (pr != qr) return pr < qr;
        return boost::multiprecision::abs(p.first.im) <
               boost::multiprecision::abs(q.first.im);
    });
    if (pairs.size() != 4) throw no_pairing("pair_by_negation: need 4 pairs");
    RootLabeling lab;
    for (int i = 0; i < 4; ++i) {
        lab.r[static_cast<size_t>(i)] = pairs[static_cast<size_t>(i)].first;
        lab.r[static_cast<size_t>(7 - i)] = pairs[static_cast<size_t>(i)].second;
    }
    std::swap(lab.r[5], lab.r[6]);
    return lab;
}

/// Numeric value of an invariant at labeled roots (plus optional parameter
/// bindings for a, b, z, w).
inline ComplexAP sample_invariant(const MultiPoly& inv, const RootLabeling& lab,
                                  const std::map<std::string, BigRat>& params = {}) {
    auto b = lab.bindings();
    for (auto& [k, v] : params) b[k] = ComplexAP(v);
    return evaluate_complex(inv, b);
}

struct OracleReport {
    bool pass = false;
    Real max_deviation{0};
    std::array<int, 4> matched_pair_perm{0, 1, 2, 3};
    std::array<bool, 4> matched_flip{false, false, false, false};
};

/// Compare a symbolic resolvent (univariate in `var` with rational
/// coefficients after specialization) against the numerically constructed
/// product over conjugate values, searching all 384 pair-respecting
/// relabelings.  Throws no_labeling_matches if none fits.
inline OracleReport verify_resolvent(const MultiPoly& symbolic,
                                     const std::string& var,
                                     const std::vector<MultiPoly>& conjugates,
                                     const RootLabeling& labeling,
                                     const Real& tol) {
    auto scoeffs = symbolic.coeffs_in(var);
    std::array<int, 4> perm = {0, 1, 2, 3};
    OracleReport best;
    bool found = false;
    Real best_dev;
    do {
        for (int mask = 0; mask < 16; ++mask) {
            std::array<bool, 4> flip = {(mask & 1) != 0, (mask & 2) != 0,
                                        (mask & 4) != 0, (mask & 8) != 0};
            RootLabeling lab = labeling.relabel(perm, flip);
            auto bind = lab.bindings();
            // numeric monic product over conjugate values
            std::vector<ComplexAP> poly = {ComplexAP(Real(1))};
            for (auto& c : conjugates) {
                ComplexAP v = evaluate_complex(c, bind);
                std::vector<ComplexAP> next(poly.size() + 1);
                for (size_t k = 0; k < poly.size(); ++k) {
                    next[k + 1] += poly[k];
                    next[k] -= poly[k] * v;
                }
                poly = std::move(next);
            }
            if (poly.size() != scoeffs.size()) continue;
            Real dev(0);
            for (size_t k = 0; k < poly.size(); ++k) {
                BigRat want = scoeffs[k].coeff_of_monomial({});
                dev = (std::max)(dev, (poly[k] - ComplexAP(want)).abs());
            }
            if (dev < tol && (!found || dev < best_dev)) {
                found = true;
                best_dev = dev;
                best.pass = true;
                best.max_deviation = dev;
                best.matched_pair_perm = perm;
                best.matched_flip = flip;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!found)
        throw no_labeling_matches(
            "verify_resolvent: no pair-respecting labeling matches");
    return best;
}

}  // namespace resolv

#endif
