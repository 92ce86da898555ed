#include "doctest.h"

#include <cmath>
#include <functional>

#include "core/error.hpp"
#include "core/gallery.hpp"
#include "core/recop.hpp"
#include "core/witness.hpp"

using namespace ng;

TEST_CASE("shift operator: images, apply, nilpotence, shape") {
    RecursionOperator T = example_gallery("trivial-f2");
    CHECK(T.image_of_basis(5) == Poly::y_power(T.ring(), 4));
    CHECK(T.image_of_basis(0).is_zero());
    Poly f = Poly::from_mod(2, {0, 1, 1});             // y^2 + y
    CHECK(T.apply(f) == Poly::from_mod(2, {1, 1}));    // y + 1
    CHECK(nilpotence_index(T, Poly::y_power(T.ring(), 5)) == Deg::of(5));
    CHECK(nilpotence_index(T, Poly::zero(T.ring())) == Deg::neg_inf());
    CHECK(T.shape().empty_middle_D == 0);
    CHECK(T.degree_lowering());
    CHECK(T.lowering_gap() == 1);
}

TEST_CASE("Fibonacci over Q: T(y^n) = F_n y^(n-1), so N_T(y^n) = n") {
    RecursionOperator T = example_gallery("fib-q");
    long long F[25] = {0, 1};
    for (int i = 2; i <= 24; ++i) F[i] = F[i - 1] + F[i - 2];
    for (int n = 1; n <= 20; ++n) {
        Poly expect = Poly::monomial(T.ring(), static_cast<std::size_t>(n - 1),
                                     Scalar::from_rat(T.ring(), Rat(static_cast<long>(F[n]))));
        CHECK(T.image_of_basis(static_cast<std::uint64_t>(n)) == expect);
    }
    std::vector<Deg> nt = nilpotence_of_powers(T, 20);
    for (int n = 0; n <= 20; ++n) CHECK(nt[static_cast<std::size_t>(n)] == Deg::of(n));
}

TEST_CASE("Fibonacci mod p: T^(p+1) annihilates every y^n") {
    for (std::string name : {"fib-f2", "fib-f3", "fib-f5", "fib-f7"}) {
        RecursionOperator T = example_gallery(name);
        std::uint64_t p = T.ring().modulus();
        std::vector<Deg> nt = nilpotence_of_powers(T, 120);
        for (std::size_t n = 0; n < nt.size(); ++n) {
            if (nt[n].is_neg_inf()) continue;
            CHECK(nt[n].value() <= static_cast<std::int64_t>(p));
        }
    }
    // F_4 = 3 vanishes mod 3: the orbit of y^4 dies immediately
    std::vector<Deg> f3 = nilpotence_of_powers(example_gallery("fib-f3"), 5);
    CHECK(f3[4] == Deg::of(0));
}

TEST_CASE("characteristic-zero family: N_T(y^(dk+d-1)) = floor(k/(d-1)) + 1") {
    for (std::string name : {"prop10.3-d2", "prop10.3-d3", "prop10.3-d5"}) {
        RecursionOperator T = example_gallery(name);
        std::uint32_t d = T.companion().order();
        CHECK(T.degree_lowering());
        CHECK(T.lowering_gap() == d - 1);
        for (std::uint64_t k = 0; k <= 12; ++k) {
            Deg nt = nilpotence_index(T, Poly::y_power(T.ring(), d * k + d - 1));
            CHECK(nt == Deg::of(static_cast<std::int64_t>(k / (d - 1) + 1)));
        }
        for (std::uint64_t n = 0; n <= 3 * d; ++n)
            if (n % d != d - 1) CHECK(T.image_of_basis(n).is_zero());
    }
}

TEST_CASE("q=3 example: the exact orbit of y^4") {
    RecursionOperator T = example_gallery("sec10-p3");
    CHECK(T.shape().filtered);
    CHECK(T.shape().empty_middle_D == 1);
    CHECK(T.shape().yd_coeff == Scalar::from_residue(T.ring(), 1));
    CHECK(T.degree_lowering());
    Poly g1 = T.image_of_basis(4);
    CHECK(g1 == Poly::from_mod(3, {0, 0, 2, 1}));  // y^3 + 2y^2
    Poly g2 = T.apply(g1);
    CHECK(g2 == Poly::from_mod(3, {0, 1}));        // y
    Poly g3 = T.apply(g2);
    CHECK(g3 == Poly::from_mod(3, {1}));           // 1
    CHECK(T.apply(g3).is_zero());
    CHECK(nilpotence_index(T, Poly::y_power(T.ring(), 4)) == Deg::of(3));
}

TEST_CASE("refined integral bound: exact cross-multiplied comparison") {
    // N_T(y^4) = 3 for the q=3 example; cap is 4 * 4^(log2/log3) ~ 9.59
    CHECK(refined_bound_check(3, 4, 3, 1, 1) == BoundVerdict::holds);
    CHECK(refined_bound_check(9, 4, 3, 1, 1) == BoundVerdict::holds);
    CHECK(refined_bound_check(10, 4, 3, 1, 1) == BoundVerdict::violated);

    // every gallery operator meeting the hypotheses satisfies the bound
    for (std::string name : {"sec10-p3", "sec10-p5", "sec10-p7", "sec10-p11"}) {
        RecursionOperator T = example_gallery(name);
        std::uint64_t q = T.ring().modulus();
        std::vector<Deg> nt = nilpotence_of_powers(T, 200);
        for (std::uint64_t n = 1; n <= 200; ++n) {
            if (nt[n].is_neg_inf() || nt[n].value() == 0) continue;
            CHECK(refined_bound_check(static_cast<std::uint64_t>(nt[n].value()), n, q, 1, 1) ==
                  BoundVerdict::holds);
        }
    }
}

TEST_CASE("M-corrected nilgrowth bound holds where the literal one fails") {
    // literal: N_T(y^n) <= c(n); the q=3 example violates it at n = 4
    RecursionOperator T = example_gallery("sec10-p3");
    FractionTriple t{3, 3, 1};
    WitnessFn c(t);
    CHECK(c.value_at(4).to_string() == "3/2");  // N_T(y^4) = 3 > 3/2
    Int M = m_const(t);
    CHECK(M == 2);
    std::vector<Deg> nt = nilpotence_of_powers(T, 500);
    for (std::uint64_t n = 0; n <= 500; ++n) {
        if (nt[n].is_neg_inf()) continue;
        CHECK(Rat(nt[n].value()) <= Rat(M) * c.value_at(n).rat());
    }
}

TEST_CASE("content decreases strictly under one application") {
    RecursionOperator T = example_gallery("sec10-p3");
    DecreaseReport rep = content_decrease_check(T, FractionTriple{3, 3, 1}, 200);
    CHECK(rep.ok);
}

TEST_CASE("large-characteristic examples share the filtered empty-middle shape") {
    for (std::string name : {"sec10-p5", "sec10-p7", "sec10-p11"}) {
        RecursionOperator T = example_gallery(name);
        CHECK(T.shape().filtered);
        CHECK(T.shape().empty_middle_D == 1);
        CHECK(T.shape().yd_coeff == Scalar::from_residue(T.ring(), 1));
        CHECK(T.degree_lowering());
        CHECK(T.lowering_gap() == 1);
    }
}

TEST_CASE("Frobenius power agrees with explicit X-polynomial squaring") {
    CoeffRing r2 = CoeffRing::integers_mod(2);
    CompanionPoly P = example_gallery("trivial-f2").companion();
    CompanionPoly F = frobenius_power(P, 1);
    CHECK(F.order() == 4);
    XPoly xp = xpoly_from_companion(P);
    CompanionPoly F2 = companion_from_xpoly(r2, xpoly_mul(xp, xp, r2));
    CHECK(F == F2);
    CHECK(F.rec[1] == Poly::y_power(r2, 2));
}

TEST_CASE("fast nilpotence scan matches the generic orbit walk") {
    RecursionOperator T = example_gallery("fib-f3");
    std::vector<Deg> fast = nilpotence_of_powers(T, 50);
    std::int64_t peak = 0;
    for (std::uint64_t n = 0; n <= 50; ++n) {
        Deg slow = nilpotence_index(T, Poly::y_power(T.ring(), n));
        CHECK(fast[n] == slow);
        if (!fast[n].is_neg_inf()) peak = std::max(peak, fast[n].value());
    }
    CHECK(peak <= 3);
}

TEST_CASE("nilpotence needs a certificate: non-lowering operators are refused") {
    CoeffRing r2 = CoeffRing::integers_mod(2);
    CompanionPoly c = CompanionPoly::from_rec(r2, {Poly::y_power(r2, 1), Poly::zero(r2)});
    RecursionOperator bad =
        make_operator(c, {Poly::constant(r2, Scalar::one(r2)), Poly::y_power(r2, 2)});
    CHECK_FALSE(bad.degree_lowering());
    bool threw = false;
    try {
        (void)nilpotence_index(bad, Poly::y_power(r2, 3));
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::domain;
    }
    CHECK(threw);
    // the bounded fallback still works without a certificate
    BoundedNilpotence bn = nilpotence_index_bounded(bad, Poly::y_power(r2, 3), 64);
    CHECK((bn.resolved || bn.steps_used == 64));
}

TEST_CASE("growth exponent estimate lands near log(q-D)/log q") {
    RecursionOperator T = example_gallery("sec10-p3");
    AlphaEstimate a = alpha_estimate(T, 200);
    double target = std::log(2.0) / std::log(3.0);
    CHECK(a.alpha_hat > 0.0);
    CHECK(a.alpha_hat < 1.0);
    CHECK(std::abs(a.alpha_hat - target) < 0.25);  // diagnostic, wide tolerance
    CHECK(a.samples.size() == 201);
    CHECK(a.samples[4].second == 3);
}

TEST_CASE("gallery inventory and configuration rendering") {
    CHECK(gallery_names().size() == 16);
    std::string js = operator_config_json("sec10-p3", example_gallery("sec10-p3"));
    CHECK(js.find("\"sec10-p3\"") != std::string::npos);
    CHECK(js.find("Z/3") != std::string::npos);
    bool threw = false;
    try {
        (void)example_gallery("no-such-operator");
    } catch (const Error& e) {
        threw = e.code() == ErrorCode::usage;
    }
    CHECK(threw);
}

TEST_CASE("companion polynomial printing uses the subtracted-coefficient convention") {
    CompanionPoly P = example_gallery("fib-q").companion();
    CHECK(P.to_string_poly() == "X^2 - (y)*X - (y^2)");
    CHECK(P.order() == 2);
    CHECK(P == CompanionPoly::from_poly_form(
                   P.ring, {Poly::from_q({Rat(0), Rat(-1)}), Poly::from_q({Rat(0), Rat(0), Rat(-1)})}));
}
