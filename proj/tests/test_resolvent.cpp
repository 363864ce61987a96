#include <catch2/catch_amalgamated.hpp>

#include "resolv/elliptic.hpp"
#include "resolv/resolvent.hpp"
#include "support.hpp"

using namespace resolv;
using testsupport::P;

TEST_CASE("vieta_expand") {
    CHECK(vieta_expand({MultiPoly(1), MultiPoly(2)}, "x") == P("x^2 - 3*x + 2"));
    CHECK_THROWS_AS(vieta_expand({}, "x"), error);
}

TEST_CASE("engine_symmetric: warm-up resolvent cubic") {
    auto s = scenarios::warmup();
    auto conj = conjugates_of_poly(left_transversal(s.G, s.F), s.P);
    REQUIRE(conj.size() == 3);
    MultiPoly g = engine_symmetric(vieta_expand(conj, "x"), "x", 4,
                                   {"a0", "a1", "a2", "a3"});
    MultiPoly want =
        P("x^3 - a2*x^2 + (a1*a3 - 4*a0)*x + (-a1^2 + 4*a0*a2 - a0*a3^2)");
    CHECK(g == want);

    // f = x^4 + 1: a3=a2=a1=0, a0=1 gives x^3 - 4x
    std::map<std::string, MultiPoly> sub = {{"a3", MultiPoly()},
                                            {"a2", MultiPoly()},
                                            {"a1", MultiPoly()},
                                            {"a0", MultiPoly(1)}};
    CHECK(g.substitute(sub) == P("x^3 - 4*x"));

    // degenerate: single conjugate e1 for a monic quadratic -> x + a1
    CHECK(engine_symmetric(vieta_expand({elem_sym(2, 1)}, "x"), "x", 2,
                           {"a0", "a1"}) == P("x + a1"));

    CHECK_THROWS_AS(engine_symmetric(vieta_expand({P("x1")}, "t"), "t", 2,
                                     {"a0", "a1"}),
                    not_symmetric);
}

TEST_CASE("octic scenario: group structure") {
    auto s = scenarios::octic_quotients();
    CHECK(s.G.order() == 192);
    for (int i = 0; i < 3; ++i) {
        CHECK(s.H[i].order() == 8);
        CHECK(is_normal(s.G, s.H[i]));
        CHECK(s.F[i].order() == 48);
        CHECK(s.H[i].is_subgroup_of(s.F[i]));
        CHECK(s.G.order() / s.F[i].order() == 4);
        Quotient q(s.G, s.H[i]);
        CHECK(q.order() == 24);
        CHECK(is_isomorphic_to_sym(q, 4));
    }

    // H1, H2 have the quaternion signature; H3 is elementary abelian
    auto involutions = [](const PermGroup& h) {
        int n = 0;
        for (auto& e : h.elements())
            if (e.order() == 2) ++n;
        return n;
    };
    auto abelian = [](const PermGroup& h) {
        for (auto& x : h.elements())
            for (auto& y : h.elements())
                if (!(x * y == y * x)) return false;
        return true;
    };
    CHECK(involutions(s.H[0]) == 1);
    CHECK(involutions(s.H[1]) == 1);
    CHECK_FALSE(abelian(s.H[0]));
    CHECK_FALSE(abelian(s.H[1]));
    CHECK(involutions(s.H[2]) == 7);
    CHECK(abelian(s.H[2]));
}

TEST_CASE("octic scenario: stabilizers and transversals") {
    auto s = scenarios::octic_quotients();
    for (int i = 0; i < 3; ++i) {
        PermGroup stab = stabilizer_of_poly(s.G, s.P[i]);
        CHECK(stab.order() == 48);
        CHECK(stab.is_subgroup_of(s.F[i]));
        CHECK(s.F[i].is_subgroup_of(stab));

        auto trans = left_transversal(s.G, s.F[i]);
        REQUIRE(trans.size() == 4);
        for (auto& rep : s.printed_transversal[i]) {
            Coset c{rep, &s.F[i]};
            int hits = 0;
            for (auto& got : trans)
                if (got.same_coset(c)) ++hits;
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("pairing relations") {
    auto rel = PairingRelations::octic();
    // substitution is an involution up to sign on the octic root variables
    MultiPoly x1 = MultiPoly::var("x1");
    CHECK(rel.substitution.at("x8") == -x1);
    // E_k values match the octic's coefficients
    MultiPoly f = octic_f();
    auto cs = f.coeffs_in("x");
    CHECK(rel.e_sq_value[0] == -cs[6]);
    CHECK(rel.e_sq_value[1] == cs[4]);
    CHECK(rel.e_sq_value[2] == -cs[2]);
    CHECK(rel.e_sq_value[3] == cs[0]);
}

TEST_CASE("vanishing_check") {
    auto s = scenarios::octic_quotients();
    auto rel = PairingRelations::octic();
    for (int i = 0; i < 2; ++i) {
        auto conj = conjugates_of_poly(left_transversal(s.G, s.F[i]),
                                       s.primary_deg3[i]);
        REQUIRE(conj.size() == 4);
        CHECK(vanishing_check(conj, rel));
    }
    // the degree-4 secondary invariants do not vanish
    auto conj4 = conjugates_of_poly(left_transversal(s.G, s.F[0]), s.P[0]);
    CHECK_FALSE(vanishing_check(conj4, rel));
}

TEST_CASE("engine_sign_specialize: h3 coefficients") {
    auto s = scenarios::octic_quotients();
    auto rel = PairingRelations::octic();
    auto conj = conjugates_of_poly(left_transversal(s.G, s.F[2]), s.P[2]);
    auto cs = vieta_expand(conj, "t").coeffs_in("t");

    // sum of gamma_i is -E1; the Vieta t^3-coefficient is +8w
    CHECK(engine_sign_specialize(cs[3], rel).image == P("8*w"));
    CHECK(engine_sign_specialize(cs[2], rel).image == P("6*(2*a*z + 3*b)"));
    CHECK(engine_sign_specialize(cs[1], rel).image.is_zero());
    CHECK(engine_sign_specialize(cs[0], rel).image ==
          P("-(4*a^3 + 27*b^2)"));

    CHECK_THROWS_AS(engine_sign_specialize(P("x1"), rel), not_symmetric);
    CHECK_THROWS_AS(engine_sign_specialize(P("x1^2"), rel), not_symmetric);
    // the full root sum collapses to zero under the pairing
    CHECK(engine_sign_specialize(P("x1+x2+x3+x4+x5+x6+x7+x8"), rel)
              .image.is_zero());
    CHECK_THROWS_AS(
        engine_sign_specialize(P("x1*x2*x3*x4 + x5*x6*x7*x8"), rel),
        not_in_square_subring);
}

TEST_CASE("compute_v35") {
    auto s = scenarios::octic_quotients();
    auto v = compute_v35(s.G);

    // matches the factored form prod x_i * prod_{i<j} (x_i^2 - x_j^2)
    MultiPoly factored(1);
    for (int i = 1; i <= 4; ++i) factored *= MultiPoly::var("x" + std::to_string(i));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            factored *= MultiPoly::var("x" + std::to_string(i), 2) -
                        MultiPoly::var("x" + std::to_string(j), 2);
    CHECK(v.v35 == factored);

    // matches the reference 24-term expansion bit-exactly
    CHECK(v.v35 == testsupport::golden_poly("v35.txt"));
    CHECK(v.v35.compacted().named_terms().size() == 24);

    // vanishes when x_i = +-x_j or x_i = 0
    CHECK(v.v35.substitute({{"x2", MultiPoly::var("x1")}}).is_zero());
    CHECK(v.v35.substitute({{"x3", -MultiPoly::var("x4")}}).is_zero());
    CHECK(v.v35.substitute({{"x1", MultiPoly()}}).is_zero());

    // omega(v35)^2 is determined symbolically: the square of the adopted
    // value agrees with the specialization of v35^2 modulo the point relation
    auto rel = PairingRelations::octic();
    auto sq = engine_sign_specialize(v.v35 * v.v35, rel);
    CHECK(reduce_on_curve(sq.image) ==
          reduce_on_curve(omega_v35_value() * omega_v35_value()));
}

TEST_CASE("engine_ansatz") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pick(-9, 9);
    auto samples_for = [&](const MultiPoly& target, size_t count) {
        std::vector<AnsatzSample> out;
        while (out.size() < count) {
            BigRat a(pick(rng)), z(pick(rng)), w(pick(rng));
            BigRat b = w * w - z.pow(3) - a * z;  // on-curve sample
            if ((BigRat(4) * a.pow(3) + BigRat(27) * b.pow(2)).is_zero()) continue;
            std::map<std::string, BigRat> pt = {
                {"a", a}, {"b", b}, {"z", z}, {"w", w}};
            out.push_back({pt, target.evaluate(pt)});
        }
        return out;
    };

    MultiPoly h2c0 =
        P("2^16*(4*a^3 + 27*b^2)*((4*a^3 + 27*b^2) + w^2*(12*a*z - 36*b))");
    auto basis48 = ansatz_basis(48);
    MultiPoly fit = engine_ansatz(48, samples_for(h2c0, basis48.size() + 8));
    CHECK(reduce_on_curve(fit) == reduce_on_curve(h2c0));

    MultiPoly gap = P("2^18*(4*a^3 + 27*b^2)*(27*b*z^3 - 9*a^2*z^2 - a^3)");
    MultiPoly fit2 = engine_ansatz(48, samples_for(gap, basis48.size() + 8));
    CHECK(reduce_on_curve(fit2) == reduce_on_curve(gap));

    // the zero function fits to zero
    CHECK(engine_ansatz(48, samples_for(MultiPoly(), basis48.size() + 8))
              .is_zero());

    CHECK_THROWS_AS(engine_ansatz(48, samples_for(h2c0, 4)), underdetermined);
    // non-integral target must be rejected
    MultiPoly frac = BigRat(1, 3) * h2c0;
    CHECK_THROWS_AS(engine_ansatz(48, samples_for(frac, basis48.size() + 8)),
                    non_integral_fit);
}

TEST_CASE("engine agreement: ansatz vs sign-specialize") {
    // h3's x^2-coefficient through both channels
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> pick(-9, 9);
    MultiPoly target = P("6*(2*a*z + 3*b)");
    std::vector<AnsatzSample> samples;
    auto basis = ansatz_basis(12);
    while (samples.size() < basis.size() + 8) {
        BigRat a(pick(rng)), z(pick(rng)), w(pick(rng));
        BigRat b = w * w - z.pow(3) - a * z;
        std::map<std::string, BigRat> pt = {{"a", a}, {"b", b}, {"z", z}, {"w", w}};
        samples.push_back({pt, target.evaluate(pt)});
    }
    MultiPoly fit = engine_ansatz(12, samples);
    CHECK(reduce_on_curve(fit) == reduce_on_curve(target));
}

TEST_CASE("engine outputs are weighted-homogeneous") {
    auto ws = WeightSystem::canonical_octic();
    auto s = scenarios::octic_quotients();
    auto rel = PairingRelations::octic();
    auto conj = conjugates_of_poly(left_transversal(s.G, s.F[2]), s.P[2]);
    auto cs = vieta_expand(conj, "t").coeffs_in("t");
    for (size_t k = 0; k + 1 < cs.size(); ++k) {
        MultiPoly img = engine_sign_specialize(cs[k], rel).image;
        if (!img.is_zero()) {
            CHECK(is_weighted_homogeneous(img, ws));
            auto parts = weighted_components(img, ws);
            CHECK(parts[0].first == static_cast<int>(6 * (4 - k)));
        }
    }
}
