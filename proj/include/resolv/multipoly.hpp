#ifndef RESOLV_MULTIPOLY_HPP
#define RESOLV_MULTIPOLY_HPP

#include <algorithm>
#include <cctype>
#include <iterator>
#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "resolv/rational.hpp"

namespace resolv {

struct not_divisible : error {
    using error::error;
};
struct missing_binding : error {
    using error::error;
};
struct zero_polynomial : error {
    using error::error;
};

using Exps = std::vector<int>;

/// Variable-name order used everywhere: numeric-suffix aware, so x2 < x10.
inline bool var_name_less(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        size_t i = s.size();
        while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
        return std::pair<std::string, long>(
            s.substr(0, i), i == s.size() ? -1 : std::stol(s.substr(i)));
    };
    auto [ap, an] = split(a);
    auto [bp, bn] = split(b);
    if (ap != bp) return ap < bp;
    return an < bn;
}

/// Sparse multivariate polynomial over BigRat.  Each instance carries its own
/// sorted variable list; arithmetic merges variable sets on demand.  No stored
/// term has a zero coefficient.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(const BigRat& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    MultiPoly(long c) : MultiPoly(BigRat(c)) {}

    static MultiPoly var(const std::string& name, int exp = 1) {
        MultiPoly p;
        p.vars_ = {name};
        if (exp < 0) throw error("MultiPoly::var: negative exponent");
        p.terms_[{exp}] = BigRat(1);
        return p;
    }
    static MultiPoly monomial(const std::vector<std::string>& vars, Exps exps,
                              const BigRat& c) {
        MultiPoly p;
        p.vars_ = vars;
        if (!std::is_sorted(vars.begin(), vars.end(), var_name_less))
            throw error("MultiPoly::monomial: unsorted variable list");
        if (!c.is_zero()) p.terms_[std::move(exps)] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exps, BigRat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && deg_of(terms_.begin()->first) == 0);
    }
    BigRat constant_value() const {
        if (terms_.empty()) return BigRat(0);
        if (!is_constant()) throw error("constant_value: polynomial is not constant");
        return terms_.begin()->second;
    }
    size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, deg_of(e));
        return d;
    }
    int degree_in(const std::string& v) const {
        int idx = var_index(v);
        if (idx < 0) return 0;
        int d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    /// Drop variables that no longer occur in any term.
    MultiPoly compacted() const {
        std::vector<bool> used(vars_.size(), false);
        for (auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) used[i] = true;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        if (nv.size() == vars_.size()) return *this;
        MultiPoly r;
        r.vars_ = nv;
        for (auto& [e, c] : terms_) {
            Exps ne;
            for (size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            r.terms_[std::move(ne)] = c;
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly ca = a.compacted(), cb = b.compacted();
        return ca.vars_ == cb.vars_ && ca.terms_ == cb.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [va, vb, merged] = aligned(a, b);
        MultiPoly r;
        r.vars_ = merged;
        r.terms_ = va;
        for (auto& [e, c] : vb) add_term(r.terms_, e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [va, vb, merged] = aligned(a, b);
        MultiPoly r;
        r.vars_ = merged;
        for (auto& [ea, ca] : va)
            for (auto& [eb, cb] : vb) {
                Exps e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                add_term(r.terms_, e, ca * cb);
            }
        return r;
    }
    friend MultiPoly operator*(const BigRat& c, const MultiPoly& p) {
        MultiPoly r;
        if (c.is_zero()) return r;
        r.vars_ = p.vars_;
        for (auto& [e, t] : p.terms_) r.terms_[e] = c * t;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned e) const {
        MultiPoly r(1), base(*this);
        unsigned k = e;
        while (k) {
            if (k & 1) r *= base;
            if (k >>= 1) base *= base;
        }
        return r;
    }

    /// Exact division in the polynomial ring; throws not_divisible otherwise.
    friend MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) {
        if (q.is_zero()) throw not_divisible("exact_div: division by zero polynomial");
        auto [vp, vq, merged] = aligned(p, q);
        MultiPoly rem, div, quot;
        rem.vars_ = merged;
        rem.terms_ = vp;
        div.vars_ = merged;
        div.terms_ = vq;
        quot.vars_ = merged;
        auto [elq, clq] = div.leading_term_grlex();
        while (!rem.is_zero()) {
            auto [elr, clr] = rem.leading_term_grlex();
            Exps e(elr.size());
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = elr[i] - elq[i];
                if (e[i] < 0) throw not_divisible("exact_div: remainder nonzero");
            }
            BigRat c = clr / clq;
            MultiPoly t = MultiPoly::monomial(merged, e, c);
            quot += t;
            rem -= t * div;
        }
        return quot;
    }

    /// Simultaneous substitution of variables by polynomials.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const {
        // Cache powers per bound variable.
        MultiPoly result;
        for (auto& [e, c] : terms_) {
            MultiPoly t(c);
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = bindings.find(vars_[i]);
                if (it == bindings.end())
                    t *= MultiPoly::var(vars_[i], e[i]);
                else
                    t *= it->second.pow(static_cast<unsigned>(e[i]));
            }
            result += t;
        }
        return result;
    }

    BigRat evaluate(const std::map<std::string, BigRat>& point) const {
        BigRat result(0);
        for (auto& [e, c] : terms_) {
            BigRat t = c;
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = point.find(vars_[i]);
                if (it == point.end())
                    throw missing_binding("evaluate: unbound variable " + vars_[i]);
                t *= it->second.pow(static_cast<unsigned>(e[i]));
            }
            result += t;
        }
        return result;
    }

    /// Coefficients as polynomials in the remaining variables, indexed by the
    /// exponent of `v`.  Index 0..degree_in(v); absent degrees are zero.
    std::vector<MultiPoly> coeffs_in(const std::string& v) const {
        int d = degree_in(v);
        std::vector<MultiPoly> out(static_cast<size_t>(d) + 1);
        int idx = var_index(v);
        for (auto& p : out) p.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            int k = idx < 0 ? 0 : e[idx];
            Exps ne(e);
            if (idx >= 0) ne[idx] = 0;
            add_term(out[k].terms_, std::move(ne), c);
        }
        for (auto& p : out) p = p.compacted();
        return out;
    }

    MultiPoly derivative(const std::string& v) const {
        int idx = var_index(v);
        MultiPoly r;
        if (idx < 0) return r;
        r.vars_ = vars_;
        for (auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exps ne(e);
            ne[idx] -= 1;
            add_term(r.terms_, ne, c * BigRat(e[idx]));
        }
        return r;
    }

    /// Grlex-leading term (highest total degree, then lex on the variable
    /// list).  Throws on the zero polynomial.
    std::pair<Exps, BigRat> leading_term_grlex() const {
        if (terms_.empty()) throw zero_polynomial("leading_term_grlex: zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    BigRat coeff_of_monomial(const std::map<std::string, int>& mono) const {
        Exps e(vars_.size(), 0);
        int matched = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = mono.find(vars_[i]);
            if (it != mono.end()) {
                e[i] = it->second;
                ++matched;
            }
        }
        for (auto& [v, k] : mono)
            if (k > 0 && var_index(v) < 0) return BigRat(0);
        (void)matched;
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRat(0) : it->second;
    }

    /// All terms as (exponent map by name, coefficient); deterministic
    /// grlex-descending order.
    std::vector<std::pair<std::map<std::string, int>, BigRat>> named_terms() const {
        std::vector<const std::pair<const Exps, BigRat>*> order;
        for (auto& t : terms_) order.push_back(&t);
        std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
            return grlex_less(b->first, a->first);
        });
        std::vector<std::pair<std::map<std::string, int>, BigRat>> out;
        for (auto* t : order) {
            std::map<std::string, int> m;
            for (size_t i = 0; i < vars_.size(); ++i)
                if (t->first[i] > 0) m[vars_[i]] = t->first[i];
            out.emplace_back(std::move(m), t->second);
        }
        return out;
    }

    static bool grlex_less(const Exps& a, const Exps& b) {
        int da = deg_of(a), db = deg_of(b);
        if (da != db) return da < db;
        return a < b;  // lex on aligned exponent vectors
    }

private:
    static int deg_of(const Exps& e) {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    int var_index(const std::string& v) const {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), v, var_name_less);
        if (it != vars_.end() && *it == v) return static_cast<int>(it - vars_.begin());
        return -1;
    }
    static void add_term(std::map<Exps, BigRat>& m, const Exps& e, const BigRat& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = m.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    }

    // Re-express both term maps over the merged variable list.
    static std::tuple<std::map<Exps, BigRat>, std::map<Exps, BigRat>,
                      std::vector<std::string>>
    aligned(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ == b.vars_) return {a.terms_, b.terms_, a.vars_};
        std::vector<std::string> merged;
        std::merge(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                   std::back_inserter(merged), var_name_less);
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        auto remap = [&](const MultiPoly& p) {
            std::vector<int> pos(p.vars_.size());
            for (size_t i = 0; i < p.vars_.size(); ++i)
                pos[i] = static_cast<int>(
                    std::lower_bound(merged.begin(), merged.end(), p.vars_[i],
                                     var_name_less) -
                    merged.begin());
            std::map<Exps, BigRat> out;
            for (auto& [e, c] : p.terms_) {
                Exps ne(merged.size(), 0);
                for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
                out[std::move(ne)] = c;
            }
            return out;
        };
        return {remap(a), remap(b), merged};
    }

    std::vector<std::string> vars_;
    std::map<Exps, BigRat> terms_;
};

}  // namespace resolv

#endif
