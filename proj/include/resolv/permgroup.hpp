#ifndef RESOLV_PERMGROUP_HPP
#define RESOLV_PERMGROUP_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "resolv/multipoly.hpp"
#include "resolv/perm.hpp"

namespace resolv {

struct cap_exceeded : error {
    using error::error;
};
struct not_a_subgroup : error {
    using error::error;
};
struct not_normal : error {
    using error::error;
};
struct degree_mismatch : error {
    using error::error;
};
struct not_invariant : error {
    using error::error;
};

/// Fully enumerated finite permutation group.  All the groups in the
/// pipelines have order <= 192, so breadth-first closure beats anything
/// cleverer.  Immutable after construction.
class PermGroup {
public:
    static PermGroup closure(int degree, std::vector<Perm> gens,
                             size_t cap = 1'000'000) {
        for (auto& g : gens)
            if (g.degree() != degree) throw degree_mismatch("closure: generator degree");
        std::set<Perm> elems;
        std::deque<Perm> queue;
        elems.insert(Perm(degree));
        queue.push_back(Perm(degree));
        while (!queue.empty()) {
            Perm p = queue.front();
            queue.pop_front();
            for (auto& g : gens) {
                Perm q = g * p;
                if (elems.insert(q).second) {
                    if (elems.size() > cap)
                        throw cap_exceeded("closure: enumeration cap exceeded");
                    queue.push_back(q);
                }
            }
        }
        PermGroup grp;
        grp.degree_ = degree;
        grp.gens_ = std::move(gens);
        grp.elems_.assign(elems.begin(), elems.end());
        return grp;
    }

    static PermGroup from_cycles(int degree, const std::vector<std::string>& gens) {
        std::vector<Perm> ps;
        for (auto& s : gens) ps.push_back(Perm::from_cycles(s, degree));
        return closure(degree, std::move(ps));
    }

    static PermGroup symmetric(int n) {
        std::vector<Perm> gens;
        if (n >= 2) gens.push_back(Perm::from_cycles("(1,2)", n));
        if (n >= 3) {
            std::string cyc = "(1";
            for (int i = 2; i <= n; ++i) cyc += "," + std::to_string(i);
            cyc += ")";
            gens.push_back(Perm::from_cycles(cyc, n));
        }
        return closure(n, std::move(gens));
    }

    int degree() const { return degree_; }
    size_t order() const { return elems_.size(); }
    const std::vector<Perm>& elements() const { return elems_; }
    const std::vector<Perm>& generators() const { return gens_; }

    bool contains(const Perm& p) const {
        return std::binary_search(elems_.begin(), elems_.end(), p);
    }
    bool is_subgroup_of(const PermGroup& g) const {
        if (degree_ != g.degree_) return false;
        for (auto& e : elems_)
            if (!g.contains(e)) return false;
        return true;
    }

private:
    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> elems_;  // sorted
};

inline void require_subgroup(const PermGroup& g, const PermGroup& h,
                             const char* who) {
    if (!h.is_subgroup_of(g))
        throw not_a_subgroup(std::string(who) + ": H is not a subgroup of G");
}

inline bool is_normal(const PermGroup& g, const PermGroup& h) {
    require_subgroup(g, h, "is_normal");
    for (auto& gen : g.generators().empty() ? g.elements() : g.generators())
        for (auto& x : h.elements())
            if (!h.contains(gen * x * gen.inverse())) return false;
    return true;
}

/// Coset of a fixed subgroup; equality is rep-independent.
struct Coset {
    Perm representative;
    const PermGroup* subgroup;

    bool same_coset(const Coset& o) const {
        return subgroup->contains(representative.inverse() * o.representative);
    }
};

/// Left transversal of F in G; representatives are the least elements of
/// their cosets in enumeration order, so the result is deterministic.
inline std::vector<Coset> left_transversal(const PermGroup& g, const PermGroup& f) {
    require_subgroup(g, f, "left_transversal");
    std::set<Perm> covered;
    std::vector<Coset> out;
    for (auto& e : g.elements()) {
        if (covered.count(e)) continue;
        out.push_back({e, &f});
        for (auto& h : f.elements()) covered.insert(e * h);
    }
    return out;
}

inline PermGroup normalizer(const PermGroup& g, const PermGroup& s) {
    require_subgroup(g, s, "normalizer");
    std::vector<Perm> elems;
    for (auto& x : g.elements()) {
        bool ok = true;
        for (auto& h : s.generators().empty() ? s.elements() : s.generators())
            if (!s.contains(x * h * x.inverse())) {
                ok = false;
                break;
            }
        if (ok) elems.push_back(x);
    }
    return PermGroup::closure(g.degree(), std::move(elems));
}

/// sigma acting on root variables: x_i -> x_{sigma(i)}; other variables fixed.
inline MultiPoly act_on_poly(const Perm& g, const MultiPoly& p) {
    const MultiPoly pc = p.compacted();
    for (const auto& v : pc.vars()) {
        if (v.size() > 1 && v[0] == 'x' &&
            std::all_of(v.begin() + 1, v.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            int i = std::stoi(v.substr(1));
            if (i < 1 || i > g.degree())
                throw degree_mismatch("act_on_poly: root variable " + v +
                                      " outside permutation degree");
        }
    }
    std::map<std::string, MultiPoly> sub;
    for (int i = 1; i <= g.degree(); ++i)
        sub["x" + std::to_string(i)] =
            MultiPoly::var("x" + std::to_string(g.image(i)));
    return p.substitute(sub);
}

inline PermGroup stabilizer_of_poly(const PermGroup& g, const MultiPoly& p) {
    std::vector<Perm> elems;
    for (auto& s : g.elements())
        if (act_on_poly(s, p) == p) elems.push_back(s);
    return PermGroup::closure(g.degree(), std::move(elems));
}

struct OrbitSum {
    MultiPoly weighted;  // one summand per group element
    MultiPoly plain;     // one summand per distinct image
};

inline OrbitSum orbit_sum(const PermGroup& f, const MultiPoly& m) {
    OrbitSum out;
    std::vector<MultiPoly> images;
    for (auto& s : f.elements()) {
        MultiPoly im = act_on_poly(s, m);
        out.weighted += im;
        if (std::find(images.begin(), images.end(), im) == images.end()) {
            images.push_back(im);
            out.plain += im;
        }
    }
    return out;
}

/// One conjugate per coset.  p must be fixed by the transversal's subgroup;
/// the result is then independent of representative choice as a set.
inline std::vector<MultiPoly> conjugates_of_poly(const std::vector<Coset>& transversal,
                                                 const MultiPoly& p) {
    if (!transversal.empty()) {
        const PermGroup* f = transversal.front().subgroup;
        for (auto& h : f->generators().empty() ? f->elements() : f->generators())
            if (act_on_poly(h, p) != p)
                throw not_invariant(
                    "conjugates_of_poly: polynomial moves under its stabilizer");
    }
    std::vector<MultiPoly> out;
    for (auto& c : transversal) out.push_back(act_on_poly(c.representative, p));
    return out;
}

/// Abstract quotient of (G, H) with H normal in G, held as a coset
/// multiplication table.
class Quotient {
public:
    Quotient(const PermGroup& g, const PermGroup& h) {
        require_subgroup(g, h, "Quotient");
        if (!is_normal(g, h)) throw not_normal("Quotient: H is not normal in G");
        auto trans = left_transversal(g, h);
        reps_.reserve(trans.size());
        for (auto& c : trans) reps_.push_back(c.representative);
        auto coset_index = [&](const Perm& p) {
            for (size_t i = 0; i < reps_.size(); ++i)
                if (h.contains(reps_[i].inverse() * p)) return i;
            throw error("Quotient: element outside G");
        };
        mul_.assign(reps_.size(), std::vector<size_t>(reps_.size()));
        for (size_t i = 0; i < reps_.size(); ++i)
            for (size_t j = 0; j < reps_.size(); ++j)
                mul_[i][j] = coset_index(reps_[i] * reps_[j]);
    }

    size_t order() const { return reps_.size(); }
    size_t mul(size_t i, size_t j) const { return mul_[i][j]; }

    size_t identity() const {
        for (size_t i = 0; i < order(); ++i)
            if (mul_[i][i] == i) {
                bool id = true;
                for (size_t j = 0; j < order(); ++j)
                    if (mul_[i][j] != j || mul_[j][i] != j) {
                        id = false;
                        break;
                    }
                if (id) return i;
            }
        throw error("Quotient: no identity (corrupt table)");
    }

    size_t element_order(size_t x) const {
        size_t e = identity(), acc = x, k = 1;
        while (acc != e) {
            acc = mul_[acc][x];
            ++k;
        }
        return k;
    }

private:
    std::vector<Perm> reps_;
    std::vector<std::vector<size_t>> mul_;
};

namespace detail {

/// Try to extend gen images to a full homomorphism by closing words;
/// returns true iff the result is a bijection onto the target group.
inline bool extends_to_isomorphism(const Quotient& q,
                                   const std::vector<size_t>& q_gens,
                                   const PermGroup& target,
                                   const std::vector<Perm>& images) {
    std::map<size_t, Perm> phi;
    phi[q.identity()] = Perm(target.degree());
    std::deque<size_t> queue = {q.identity()};
    while (!queue.empty()) {
        size_t x = queue.front();
        queue.pop_front();
        for (size_t gi = 0; gi < q_gens.size(); ++gi) {
            size_t y = q.mul(x, q_gens[gi]);
            Perm im = phi[x] * images[gi];
            auto it = phi.find(y);
            if (it == phi.end()) {
                phi[y] = im;
                queue.push_back(y);
            } else if (!(it->second == im)) {
                return false;
            }
        }
    }
    if (phi.size() != q.order()) return false;  // q_gens do not generate
    std::set<Perm> image_set;
    for (auto& [x, p] : phi) {
        if (!target.contains(p)) return false;
        image_set.insert(p);
    }
    return image_set.size() == target.order();
}

}  // namespace detail

/// Explicit-isomorphism test against the symmetric group S_n.
inline bool is_isomorphic_to_sym(const Quotient& q, int n) {
    PermGroup sn = PermGroup::symmetric(n);
    if (q.order() != sn.order()) return false;
    // Find a two-element generating set of the quotient.
    for (size_t g1 = 0; g1 < q.order(); ++g1) {
        for (size_t g2 = 0; g2 < q.order(); ++g2) {
            // quick closure to check generation
            std::set<size_t> gen = {q.identity()};
            std::deque<size_t> bfs = {q.identity()};
            while (!bfs.empty()) {
                size_t x = bfs.front();
                bfs.pop_front();
                for (size_t g : {g1, g2}) {
                    size_t y = q.mul(x, g);
                    if (gen.insert(y).second) bfs.push_back(y);
                }
            }
            if (gen.size() != q.order()) continue;
            size_t o1 = q.element_order(g1), o2 = q.element_order(g2);
            for (auto& h1 : sn.elements()) {
                if (static_cast<size_t>(h1.order()) != o1) continue;
                for (auto& h2 : sn.elements()) {
                    if (static_cast<size_t>(h2.order()) != o2) continue;
                    if (detail::extends_to_isomorphism(q, {g1, g2}, sn, {h1, h2}))
                        return true;
                }
            }
            return false;  // generating pair exists but no image works
        }
    }
    return false;
}

}  // namespace resolv

#endif
