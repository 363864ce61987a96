#ifndef RESOLV_SYMMETRIC_HPP
#define RESOLV_SYMMETRIC_HPP

#include <map>
#include <string>
#include <vector>

#include "resolv/multipoly.hpp"

namespace resolv {

struct not_symmetric : error {
    using error::error;
};

/// Positive integer weight per variable; the grading every polynomial in the
/// pipelines respects.  Weights are doubled relative to the usual elliptic
/// grading so that octic root variables carry integer weight 3.
class WeightSystem {
public:
    WeightSystem() = default;
    explicit WeightSystem(std::map<std::string, int> w) : w_(std::move(w)) {}

    void set(const std::string& v, int weight) { w_[v] = weight; }
    int weight_of(const std::string& v) const {
        auto it = w_.find(v);
        if (it == w_.end()) throw error("WeightSystem: unweighted variable " + v);
        return it->second;
    }

    /// a:8 b:12 z:4 w:6 d:24 Delta:24, plus x1..xn at the given root weight.
    static WeightSystem canonical(int root_weight, int nroots = 8) {
        WeightSystem ws;
        ws.set("a", 8);
        ws.set("b", 12);
        ws.set("z", 4);
        ws.set("w", 6);
        ws.set("d", 24);
        ws.set("Delta", 24);
        for (int i = 1; i <= nroots; ++i)
            ws.set("x" + std::to_string(i), root_weight);
        return ws;
    }
    static WeightSystem canonical_octic() { return canonical(3, 8); }
    static WeightSystem canonical_sextic() { return canonical(4, 6); }

private:
    std::map<std::string, int> w_;
};

/// Decompose into weighted-homogeneous parts; pairs sorted by weight.
inline std::vector<std::pair<int, MultiPoly>> weighted_components(
    const MultiPoly& p, const WeightSystem& ws) {
    std::map<int, MultiPoly> parts;
    for (auto& [mono, c] : p.compacted().named_terms()) {
        int w = 0;
        for (auto& [v, e] : mono) w += ws.weight_of(v) * e;
        MultiPoly t(c);
        for (auto& [v, e] : mono) t *= MultiPoly::var(v, e);
        parts[w] += t;
    }
    return {parts.begin(), parts.end()};
}

inline bool is_weighted_homogeneous(const MultiPoly& p, const WeightSystem& ws) {
    return weighted_components(p, ws).size() <= 1;
}

/// Elementary symmetric polynomial e_k in x1..xn.
inline MultiPoly elem_sym(int n, int k) {
    if (k < 0 || k > n) throw error("elem_sym: need 0 <= k <= n");
    if (k == 0) return MultiPoly(1);
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    std::sort(vars.begin(), vars.end(), var_name_less);
    MultiPoly out;
    std::vector<int> pick(k);
    // iterate k-subsets of {0..n-1}
    for (int i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        Exps e(n, 0);
        for (int i : pick) e[i] = 1;
        out += MultiPoly::monomial(vars, e, BigRat(1));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace detail {

inline std::vector<std::string> root_vars(int n) {
    std::vector<std::string> vars;
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    std::sort(vars.begin(), vars.end(), var_name_less);
    return vars;
}

/// Exponent vector of p's lex-leading term w.r.t. x1 > x2 > ... > xn.
inline Exps lex_leading(const MultiPoly& p, const std::vector<std::string>& vars) {
    Exps best;
    BigRat bc;
    bool have = false;
    for (auto& [mono, c] : p.named_terms()) {
        Exps e(vars.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i) {
            auto it = mono.find(vars[i]);
            if (it != mono.end()) e[i] = it->second;
        }
        if (!have || best < e) {
            best = e;
            have = true;
        }
    }
    if (!have) throw zero_polynomial("lex_leading: zero polynomial");
    return best;
}

}  // namespace detail

/// Rewrite a fully symmetric polynomial in x1..xn as a polynomial in e1..en
/// (Gauss's algorithm: peel lex-leading terms by matching e-monomials).
/// The result is verified by back-substitution before returning.
inline MultiPoly symmetric_reduce(const MultiPoly& p, int n) {
    auto vars = detail::root_vars(n);
    const MultiPoly pc = p.compacted();
    for (const auto& v : pc.vars())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw error("symmetric_reduce: unexpected variable " + v);

    // Symmetry check: adjacent transpositions generate S_n.
    for (int i = 1; i < n; ++i) {
        std::map<std::string, MultiPoly> swap_sub = {
            {"x" + std::to_string(i), MultiPoly::var("x" + std::to_string(i + 1))},
            {"x" + std::to_string(i + 1), MultiPoly::var("x" + std::to_string(i))}};
        if (p.substitute(swap_sub) != p)
            throw not_symmetric("symmetric_reduce: input is not S_n-symmetric");
    }

    std::vector<MultiPoly> e(n + 1);
    for (int k = 0; k <= n; ++k) e[k] = elem_sym(n, k);

    MultiPoly rem = p, result;
    while (!rem.is_zero()) {
        Exps lead = detail::lex_leading(rem, vars);
        // leading exponents of a symmetric polynomial are weakly decreasing
        for (size_t i = 1; i < lead.size(); ++i)
            if (lead[i] > lead[i - 1])
                throw not_symmetric("symmetric_reduce: non-symmetric remainder");
        BigRat c = rem.coeff_of_monomial([&] {
            std::map<std::string, int> m;
            for (size_t i = 0; i < vars.size(); ++i)
                if (lead[i] > 0) m[vars[i]] = lead[i];
            return m;
        }());
        MultiPoly e_term(c), x_term(c);
        for (int k = 1; k <= n; ++k) {
            int exp = lead[k - 1] - (k < n ? lead[k] : 0);
            if (exp > 0) {
                e_term *= MultiPoly::var("e" + std::to_string(k), exp);
                x_term *= e[k].pow(static_cast<unsigned>(exp));
            }
        }
        result += e_term;
        rem -= x_term;
    }

    // Back-substitution check.
    std::map<std::string, MultiPoly> back;
    for (int k = 1; k <= n; ++k) back["e" + std::to_string(k)] = e[k];
    if (result.substitute(back) != p)
        throw error("symmetric_reduce: internal verification failed");
    return result.compacted();
}

}  // namespace resolv

#endif
