#ifndef RESOLV_TESTS_SUPPORT_HPP
#define RESOLV_TESTS_SUPPORT_HPP

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "resolv/multipoly.hpp"
#include "resolv/poly_text.hpp"

namespace testsupport {

inline resolv::MultiPoly P(const std::string& s) { return resolv::parse_poly(s); }

/// Random sparse polynomial in x1..xn, deg <= maxdeg per variable bounded by
/// total degree, small integer coefficients.
inline resolv::MultiPoly random_poly(std::mt19937& rng, int nvars, int maxdeg,
                                     int nterms) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> var(1, nvars);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    resolv::MultiPoly p;
    for (int t = 0; t < nterms; ++t) {
        resolv::MultiPoly term(resolv::BigRat(coeff(rng)));
        int budget = deg(rng);
        while (budget > 0) {
            term *= resolv::MultiPoly::var("x" + std::to_string(var(rng)));
            --budget;
        }
        p += term;
    }
    return p;
}

inline std::string golden_dir() {
    if (const char* d = std::getenv("RESOLV_GOLDEN_DIR")) return d;
    return "golden";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Golden files hold one polynomial expression (possibly spanning lines).
inline resolv::MultiPoly golden_poly(const std::string& name) {
    return P(read_file(golden_dir() + "/" + name));
}

/// Golden file contents with trailing whitespace trimmed.
inline std::string golden_text(const std::string& name) {
    std::string s = read_file(golden_dir() + "/" + name);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
        s.pop_back();
    return s;
}

}  // namespace testsupport

#endif
