#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/hecke.hpp"
#include "core/recop.hpp"
#include "core/witness.hpp"

using namespace ng;

namespace {

bool throws_domain(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == ErrorCode::domain;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace

TEST_CASE("tau residues mod 2 and mod 3 match the integer table") {
    const long tau[11] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920};
    for (std::uint64_t p : {2ull, 3ull}) {
        QExpansion d = delta_qexp(p, 11);
        CHECK(d.a[0] == 0);
        for (int n = 1; n <= 10; ++n) {
            long r = tau[n] % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            CHECK(d.a[n] == static_cast<std::uint64_t>(r));
        }
    }
    CHECK(delta_qexp(3, 8).a[7] == 2);  // tau(7) = -16744 = 2 mod 3
}

TEST_CASE("pentagonal-number recurrence agrees with the direct eta product") {
    for (std::uint64_t p : {2ull, 3ull}) {
        QExpansion a = delta_qexp(p, 2000);
        QExpansion b = delta_qexp_pentagonal(p, 2000);
        CHECK(a.p == b.p);
        CHECK(a.a == b.a);
    }
}

TEST_CASE("mod 2 the series is supported on the odd squares") {
    QExpansion d = delta_qexp(2, 2000);
    std::vector<std::uint64_t> want(2000, 0);
    for (std::uint64_t k = 1; k * k < 2000; k += 2) want[k * k] = 1;
    CHECK(d.a == want);
}

TEST_CASE("series cache: hits, prefix reads, corruption recovery") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "nilgrowth-test-dcache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    QExpansion ref = delta_qexp(2, 500);
    QExpansion a = delta_qexp_cached(2, 500, dir.string());
    QExpansion b = delta_qexp_cached(2, 500, dir.string());  // full hit
    QExpansion c = delta_qexp_cached(2, 300, dir.string());  // prefix hit
    CHECK(a.a == ref.a);
    CHECK(b.a == ref.a);
    CHECK(std::vector<std::uint64_t>(ref.a.begin(), ref.a.begin() + 300) == c.a);
    {
        std::ofstream out(dir / "delta-p2.txt", std::ios::trunc);
        out << "garbage\n";
    }
    CHECK(delta_qexp_cached(2, 500, dir.string()).a == ref.a);  // recompute
    CHECK(delta_qexp_cached(2, 500, dir.string()).a == ref.a);  // repaired file
    fs::remove_all(dir);
}

TEST_CASE("eigenform property: T_ell maps the generator to tau(ell) times itself") {
    struct Case {
        std::uint64_t p, ell, taumod;
    };
    for (Case cs : {Case{2, 3, 0}, Case{2, 5, 0}, Case{3, 2, 0}, Case{3, 7, 2}}) {
        QExpansion d = delta_qexp(cs.p, 600);
        QExpansion img = hecke_apply_qexp(d, cs.ell, 12);
        QExpansion want = qexp_scale(d, cs.taumod);
        want.a.resize(img.a.size());
        CHECK(img.p == cs.p);
        CHECK(img.a == want.a);
        CHECK(img.precision() == 600 / cs.ell);
    }
}

TEST_CASE("weights 12 and 24 give the same operator residues") {
    for (std::uint64_t p : {2ull, 3ull}) {
        QExpansion d = delta_qexp(p, 400);
        QExpansion d2 = qexp_mul(d, d);
        std::uint64_t ell = p == 2 ? 3 : 7;
        CHECK(hecke_apply_qexp(d2, ell, 12).a == hecke_apply_qexp(d2, ell, 24).a);
    }
}

TEST_CASE("ell = p applies the U_p contraction") {
    QExpansion d = delta_qexp(3, 300);
    CHECK(hecke_apply_qexp(d, 3, 12).a == tp_apply_qexp(d).a);
}

TEST_CASE("series-to-polynomial extraction round trips and rejects residuals") {
    QExpansion d = delta_qexp(2, 64);
    QExpansion d2 = qexp_mul(d, d);
    CHECK(qexp_to_delta_poly(d2) == Poly::from_mod(2, {0, 0, 1}));
    QExpansion s = qexp_add(d2, d);
    CHECK(qexp_to_delta_poly(s) == Poly::from_mod(2, {0, 1, 1}));
    CHECK(throws_domain([&] { (void)qexp_to_delta_poly(s, 1); }));  // cap below true degree
}

TEST_CASE("oracle images: hand-checked small cases") {
    // T_3 mod 2 on 1 and on the generator
    std::vector<Poly> img = hecke_oracle_images(2, 3, false, 3);
    CHECK(img.size() == 4);
    CHECK(img[0].is_zero());  // 1 + 3^(k-1) = 0 mod 2
    CHECK(img[1].is_zero());  // tau(3) = 252 even
    // T_7' mod 3 subtracts the tau(7) multiple
    std::vector<Poly> img7 = hecke_oracle_images(3, 7, true, 2);
    CHECK(img7[0].is_zero());
    CHECK(img7[1].is_zero());
    // plain T_7 keeps it
    std::vector<Poly> plain = hecke_oracle_images(3, 7, false, 1);
    CHECK(plain[0] == Poly::from_mod(3, {2}));
    CHECK(plain[1] == Poly::from_mod(3, {0, 2}));
}

TEST_CASE("the four recursion operators carry shape certificates") {
    for (auto [p, ell] :
         {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 5}, {3, 2}, {3, 7}}) {
        HeckeOp op = hecke_recursion_operator(p, ell);
        CHECK(op.modified == (p == 3 && ell == 7));
        CHECK(op.as_recursion.degree_lowering());
        CHECK(op.as_recursion.initial()[0].is_zero());
        CHECK(op.as_recursion.shape().filtered);
    }
    CHECK(hecke_recursion_operator(2, 3).as_recursion.companion().order() == 4);
    CHECK(hecke_recursion_operator(2, 5).as_recursion.companion().order() == 6);
    CHECK(hecke_recursion_operator(3, 2).as_recursion.companion().order() == 3);
    CHECK(hecke_recursion_operator(3, 7).as_recursion.companion().order() == 9);
    CHECK(shape_info(hecke_recursion_operator(2, 3).as_recursion.companion()).empty_middle_D == 2);
    CHECK(shape_info(hecke_recursion_operator(2, 5).as_recursion.companion()).empty_middle_D == 0);
    CHECK(shape_info(hecke_recursion_operator(3, 2).as_recursion.companion()).empty_middle_D == 1);
    CHECK(shape_info(hecke_recursion_operator(3, 7).as_recursion.companion()).empty_middle_D == 3);
    RecursionOperator p5p = hecke_p5prime_operator();
    CHECK(p5p.companion().order() == 8);
    CHECK(shape_info(p5p.companion()).empty_middle_D == 4);
    CHECK(p5p.degree_lowering());
    RecursionOperator t78 = hecke_t7_order8_operator();
    CHECK(t78.companion().order() == 8);
    CHECK(!t78.degree_lowering());  // plain T_7 keeps the scalar multiple of the input
}

TEST_CASE("recurrence validity thresholds against the oracle") {
    RecursionVerdict v23 = verify_hecke_recursion(2, 3, 60);
    CHECK(v23.ok_from_order());
    CHECK(v23.first_valid_n == 4);
    CHECK(v23.order == 4);
    RecursionVerdict v25 = verify_hecke_recursion(2, 5, 60);
    CHECK(v25.ok_from_order());
    CHECK(v25.first_valid_n == 6);
    RecursionVerdict v32 = verify_hecke_recursion(3, 2, 60);
    CHECK(v32.ok_from_order());
    CHECK(v32.first_valid_n == 3);
    RecursionVerdict v37 = verify_hecke_recursion(3, 7, 60);
    CHECK(v37.ok_from_order());
    CHECK(v37.first_valid_n == 9);
    RecursionVerdict vp5 =
        verify_companion_against_oracle(hecke_p5prime_operator().companion(), 2, 5, false, 60);
    CHECK(vp5.ok_from_order());
    CHECK(vp5.first_valid_n == 8);
    RecursionVerdict vt78 =
        verify_companion_against_oracle(hecke_t7_order8_operator().companion(), 3, 7, false, 60);
    CHECK(vt78.ok_from_order());
    CHECK(vt78.first_valid_n == 8);

    // negative controls
    CoeffRing r2 = CoeffRing::integers_mod(2);
    std::vector<Poly> bad(4, Poly::zero(r2));
    bad[2] = Poly::y_power(r2, 2);  // wrong entry: square instead of the generator
    bad[3] = Poly::y_power(r2, 4);
    RecursionVerdict vbad =
        verify_companion_against_oracle(CompanionPoly::from_poly_form(r2, bad), 2, 3, false, 30);
    CHECK(vbad.first_fail_n != 0);
    // the order-8 quotient does not hold for the modified operator
    RecursionVerdict vmix =
        verify_companion_against_oracle(hecke_t7_order8_operator().companion(), 3, 7, true, 30);
    CHECK(vmix.first_fail_n != 0);
    // plain T_7 satisfies the order-9 multiple from n >= 9
    RecursionVerdict vmul = verify_companion_against_oracle(
        hecke_recursion_operator(3, 7).as_recursion.companion(), 3, 7, false, 30);
    CHECK(vmul.ok_from_order());
    CHECK(vmul.first_valid_n == 9);
}

TEST_CASE("recursion operator images agree with the oracle") {
    for (auto [p, ell] :
         {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 5}, {3, 2}, {3, 7}}) {
        HeckeOp op = hecke_recursion_operator(p, ell);
        std::vector<Poly> img = hecke_oracle_images(p, ell, op.modified, 40);
        for (std::uint64_t n = 0; n <= 40; ++n) CHECK(op.as_recursion.image_of_basis(n) == img[n]);
    }
}

TEST_CASE("U_p kernel contains the expected powers") {
    CHECK(kernel_check(2, 100).ok);
    CHECK(kernel_check(3, 100).ok);
}

TEST_CASE("divided nilpotence bounds hold for p=2, first fail at n=4 for p=3") {
    struct B {
        std::uint64_t p, ell;
        std::uint32_t b, D;
        bool via_p5p;
        std::uint64_t first_bad;
    };
    for (B cs : {B{2, 3, 4, 2, false, 0}, B{2, 5, 8, 4, true, 0}, B{3, 2, 3, 1, false, 4},
                 B{3, 7, 9, 3, false, 4}}) {
        RecursionOperator op = cs.via_p5p ? hecke_p5prime_operator()
                                          : hecke_recursion_operator(cs.p, cs.ell).as_recursion;
        WitnessFn c(FractionTriple{cs.b, cs.b, cs.D});
        std::vector<Deg> nt = nilpotence_of_powers(op, 300);
        std::uint64_t first_bad = 0;
        std::int64_t peak = 0;
        bool undivided_ok = true;
        for (std::uint64_t n = 1; n <= 300; ++n) {
            if (nt[n].is_neg_inf()) continue;
            if (peak < nt[n].value()) peak = nt[n].value();
            NonNegRational lhs = NonNegRational::from_uint(static_cast<std::uint64_t>(nt[n].value()));
            if (first_bad == 0 && !(lhs <= c.value_at(n))) first_bad = n;
            if (!(lhs <= c.value_at(cs.b * n)))  // undivided: argument b*n/d with d = b
                undivided_ok = false;
        }
        CHECK(first_bad == cs.first_bad);
        CHECK(undivided_ok);
        CHECK(peak >= 1);
    }
    // frozen counterexample values at n = 4
    std::vector<Deg> nt2 = nilpotence_of_powers(hecke_recursion_operator(3, 2).as_recursion, 4);
    CHECK(nt2[4] == Deg::of(2));
    std::vector<Deg> nt7 = nilpotence_of_powers(hecke_recursion_operator(3, 7).as_recursion, 4);
    CHECK(nt7[4] == Deg::of(1));
    CHECK(WitnessFn(FractionTriple{3, 3, 1}).value_at(4).to_string() == "3/2");
    CHECK(WitnessFn(FractionTriple{9, 9, 3}).value_at(4).to_string() == "2/3");
}

TEST_CASE("joint nilpotence table and threshold counts") {
    std::vector<JointRow> t2 = joint_nilpotence(2, 99);
    CHECK(t2.size() == 50);
    CHECK(t2[0].n == 1);
    CHECK(t2[0].nt == 0);
    CHECK(t2[0].ns == 0);
    CHECK(t2[0].total == 0);
    std::uint64_t prev = ~0ull;
    for (std::int64_t k = 0; k <= 12; ++k) {
        std::uint64_t c = hilbert_samuel_count(t2, k);
        CHECK(c <= prev);
        prev = c;
    }
    for (const JointRow& r : t2) {
        CHECK(r.nt >= 0);
        CHECK(r.ns >= 0);
    }
    CHECK(hilbert_samuel_count(t2, 2) >= 6);
    std::string js = hilbert_samuel_summary_json(t2, 1, 8);
    CHECK(js.find("\"diagnostic\"") != std::string::npos);
    std::vector<JointRow> t3 = joint_nilpotence(3, 40);
    REQUIRE(!t3.empty());
    CHECK(t3[0].n == 1);
    CHECK(t3[0].total == 0);
    for (const JointRow& r : t3) CHECK(r.n % 3 != 0);
}

TEST_CASE("domain errors for unsupported characteristics and operators") {
    CHECK(throws_domain([] { (void)delta_qexp(5, 100); }));
    CHECK(throws_domain([] { (void)hecke_recursion_operator(2, 7); }));
    CHECK(throws_domain([] { (void)hecke_apply_qexp(delta_qexp(3, 30), 6, 12); }));
}
