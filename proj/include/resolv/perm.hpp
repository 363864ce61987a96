#ifndef RESOLV_PERM_HPP
#define RESOLV_PERM_HPP

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "resolv/rational.hpp"

namespace resolv {

/// Permutation on {1..n}, stored 0-based.
class Perm {
public:
    Perm() = default;
    explicit Perm(int degree) : img_(degree) {
        std::iota(img_.begin(), img_.end(), 0);
    }
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw error("Perm: images are not a bijection");
            seen[v] = true;
        }
    }

    int degree() const { return static_cast<int>(img_.size()); }
    /// 1-based image of 1-based point.
    int image(int point) const { return img_[point - 1] + 1; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    /// (a*b) applies b first, then a.
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw error("Perm: degree mismatch");
        std::vector<int> r(a.img_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.img_[b.img_[i]];
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    Perm inverse() const {
        std::vector<int> r(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) r[img_[i]] = static_cast<int>(i);
        Perm p;
        p.img_ = std::move(r);
        return p;
    }

    int order() const {
        Perm p = *this, id(degree());
        int k = 1;
        while (!(p == id)) {
            p = p * *this;
            ++k;
        }
        return k;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    /// Parse cycle notation: "(1,3,4)(2,6)"; "()" is the identity.
    static Perm from_cycles(const std::string& s, int degree) {
        std::vector<int> img(degree);
        std::iota(img.begin(), img.end(), 0);
        size_t i = 0;
        auto skip_ws = [&] {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        };
        skip_ws();
        while (i < s.size()) {
            if (s[i] != '(') throw error("Perm: expected '(' in cycle notation");
            ++i;
            std::vector<int> cycle;
            skip_ws();
            while (i < s.size() && s[i] != ')') {
                if (std::isdigit(static_cast<unsigned char>(s[i]))) {
                    int v = 0;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                        v = v * 10 + (s[i++] - '0');
                    if (v < 1 || v > degree)
                        throw error("Perm: point out of range in cycle notation");
                    cycle.push_back(v - 1);
                } else if (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i]))) {
                    ++i;
                } else {
                    throw error("Perm: bad character in cycle notation");
                }
            }
            if (i == s.size()) throw error("Perm: unterminated cycle");
            ++i;  // ')'
            for (size_t k = 0; k < cycle.size(); ++k)
                img[cycle[k]] = cycle[(k + 1) % cycle.size()];
            skip_ws();
        }
        return Perm(std::move(img));
    }

    std::string to_cycles() const {
        std::vector<bool> seen(img_.size(), false);
        std::ostringstream out;
        bool any = false;
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            out << "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out << ",";
                out << j + 1;
                first = false;
                j = static_cast<size_t>(img_[j]);
            }
            out << ")";
            any = true;
        }
        return any ? out.str() : "()";
    }

    const std::vector<int>& images0() const { return img_; }

private:
    std::vector<int> img_;
};

}  // namespace resolv

#endif
