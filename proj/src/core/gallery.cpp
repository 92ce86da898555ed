#include "core/gallery.hpp"

#include "json.hpp"

namespace ng {

namespace {

// y^k with coefficient c (reduced into the ring).
Poly ym(const CoeffRing& r, std::size_t k, std::int64_t c) {
    return Poly::monomial(r, k, Scalar::from_rat(r, Rat(static_cast<long>(c))));
}

RecursionOperator trivial_op(const CoeffRing& r) {
    // X^2 - yX: rec a_1 = y, a_2 = 0; images 0, 1, y, y^2, ...
    CompanionPoly c = CompanionPoly::from_rec(r, {ym(r, 1, 1), Poly::zero(r)});
    return make_operator(c, {Poly::zero(r), Poly::constant(r, Scalar::one(r))});
}

RecursionOperator sec34_op(const CoeffRing& r) {
    // X^2 + yX + y: rec a_1 = -y, a_2 = -y.
    CompanionPoly c = CompanionPoly::from_rec(r, {ym(r, 1, -1), ym(r, 1, -1)});
    return make_operator(c, {Poly::zero(r), Poly::constant(r, Scalar::one(r))});
}

RecursionOperator fib_op(const CoeffRing& r) {
    // X^2 - yX - y^2: rec a_1 = y, a_2 = y^2; T(y^n) = F_n y^(n-1).
    CompanionPoly c = CompanionPoly::from_rec(r, {ym(r, 1, 1), ym(r, 2, 1)});
    return make_operator(c, {Poly::zero(r), Poly::constant(r, Scalar::one(r))});
}

RecursionOperator charzero_family(std::uint32_t d) {
    // X^d - y^d - y over Q: rec a_d = y^d + y, others 0; initial [0,...,0,1].
    CoeffRing r = CoeffRing::rationals();
    std::vector<Poly> rec(d, Poly::zero(r));
    rec[d - 1] = ym(r, d, 1) + ym(r, 1, 1);
    std::vector<Poly> init(d, Poly::zero(r));
    init[d - 1] = Poly::constant(r, Scalar::one(r));
    return make_operator(CompanionPoly::from_rec(r, rec), init);
}

// Characteristic-p operator from the printed polynomial-form coefficients
// c_j of X^(d-j) (j = 1..d) with initial values [0, 1, y, ..., y^(d-2)].
RecursionOperator sec10_op(std::uint64_t p, std::vector<std::pair<std::size_t, std::int64_t>> cs,
                           std::uint32_t d) {
    CoeffRing r = CoeffRing::integers_mod(p);
    std::vector<Poly> poly_coeffs(d, Poly::zero(r));
    for (auto [lag_and_exp, coef] : cs) {
        // encoded as lag*100 + y-exponent
        std::size_t lag = lag_and_exp / 100, yexp = lag_and_exp % 100;
        poly_coeffs[lag - 1] = poly_coeffs[lag - 1] + ym(r, yexp, coef);
    }
    std::vector<Poly> init(d, Poly::zero(r));
    for (std::uint32_t i = 1; i < d; ++i) init[i] = Poly::y_power(r, i - 1);
    return make_operator(CompanionPoly::from_poly_form(r, poly_coeffs), init);
}

}  // namespace

std::vector<std::string> gallery_names() {
    return {"trivial-f2", "trivial-q", "sec3-4-f2", "sec3-4-f3", "fib-q",
            "fib-f2",     "fib-f3",    "fib-f5",    "fib-f7",    "prop10.3-d2",
            "prop10.3-d3", "prop10.3-d5", "sec10-p3", "sec10-p5", "sec10-p7",
            "sec10-p11"};
}

RecursionOperator example_gallery(const std::string& name) {
    if (name == "trivial-f2") return trivial_op(CoeffRing::integers_mod(2));
    if (name == "trivial-q") return trivial_op(CoeffRing::rationals());
    if (name == "sec3-4-f2") return sec34_op(CoeffRing::integers_mod(2));
    if (name == "sec3-4-f3") return sec34_op(CoeffRing::integers_mod(3));
    if (name == "fib-q") return fib_op(CoeffRing::rationals());
    if (name == "fib-f2") return fib_op(CoeffRing::integers_mod(2));
    if (name == "fib-f3") return fib_op(CoeffRing::integers_mod(3));
    if (name == "fib-f5") return fib_op(CoeffRing::integers_mod(5));
    if (name == "fib-f7") return fib_op(CoeffRing::integers_mod(7));
    if (name == "prop10.3-d2") return charzero_family(2);
    if (name == "prop10.3-d3") return charzero_family(3);
    if (name == "prop10.3-d5") return charzero_family(5);
    // X^3 + yX - y^3
    if (name == "sec10-p3") return sec10_op(3, {{201, 1}, {303, -1}}, 3);
    // X^5 + 3yX^3 + y^2X^2 + 3y^3X + 4y^5
    if (name == "sec10-p5")
        return sec10_op(5, {{201, 3}, {302, 1}, {403, 3}, {505, 4}}, 5);
    // X^7 + 3y^2X^4 + 6y^3X^3 + 5y^4X^2 + 3y^5X + 6y^7
    if (name == "sec10-p7")
        return sec10_op(7, {{302, 3}, {403, 6}, {504, 5}, {605, 3}, {707, 6}}, 7);
    // X^11 + 6yX^9 + 2y^2X^8 + 3y^3X^7 + 6y^4X^6 + 8y^6X^4 + y^8X^2 + 9y^9X + 10y^11
    if (name == "sec10-p11")
        return sec10_op(11,
                        {{201, 6}, {302, 2}, {403, 3}, {504, 6}, {706, 8}, {908, 1}, {1009, 9},
                         {1111, 10}},
                        11);
    fail_usage("unknown gallery name: " + name);
}

std::string operator_config_json(const std::string& name, const RecursionOperator& T) {
    nlohmann::ordered_json out;
    out["name"] = name;
    out["ring"] = T.ring().to_string();
    out["order"] = T.companion().order();
    out["companion_poly_form"] = T.companion().to_string_poly();
    out["recurrence_rhs"] = T.companion().to_string_rec();
    out["initial"] = nlohmann::ordered_json::array();
    for (const Poly& f : T.initial()) out["initial"].push_back(f.to_string());
    out["filtered"] = T.shape().filtered;
    out["empty_middle_D"] = T.shape().empty_middle_D;
    out["degree_lowering"] = T.degree_lowering();
    return out.dump(2);
}

}  // namespace ng
