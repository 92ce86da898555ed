#include "core/content.hpp"

#include "core/error.hpp"

namespace ng {

void FractionTriple::validate() const {
    if (D < 1 || D > d || d > b) fail_usage("need 1 <= D <= d <= b");
    if (b - D < 2) fail_usage("reading base beta = b - D must be >= 2");
}

namespace {

void require_params(const ContentParams& p) {
    if (p.b < 2 || p.beta < 2) fail_usage("bases must be >= 2");
}

NonNegRational content_of_int(const Int& n, const ContentParams& p) {
    return content(NonNegRational(n), p);
}

Rat unit_bound(std::uint32_t beta) {
    return Rat(Int(beta) + 1, Int(beta) * (Int(beta) - 1));
}

}  // namespace

NonNegRational content(const NonNegRational& q, const ContentParams& p) {
    require_params(p);
    return reed(rite(q, p.b), p.beta);
}

NonNegRational content_closed_form(const NonNegRational& q, const ContentParams& p) {
    require_params(p);
    BaseStats st = base_stats(q, p.b);
    Int bs = int_pow(Int(p.beta), st.s);
    Int bt = int_pow(Int(p.beta), st.t);
    Rat v = content_of_int(st.n, p).rat() + content_of_int(st.u, p).rat() / bs +
            content_of_int(st.m, p).rat() / (bs * (bt - 1));
    v.canonicalize();
    return NonNegRational(v);
}

Envelope growth_envelope(const Int& n, const ContentParams& p) {
    require_params(p);
    if (n < 1) fail_usage("growth envelope is defined for n >= 1");
    std::size_t ell = 0;
    for (Int v = n; v > 0; ++ell) v = v / p.b;
    Envelope env;
    env.lower = NonNegRational(int_pow(Int(p.beta), ell - 1));
    Rat upper(Int(p.b - 1) * (int_pow(Int(p.beta), ell) - 1), Int(p.beta) - 1);
    upper.canonicalize();
    env.upper = NonNegRational(upper);
    env.value = content(NonNegRational(n), p);
    env.ok = env.lower.rat() <= env.value.rat() && env.value.rat() <= env.upper.rat();
    return env;
}

bool content_scale_check(const NonNegRational& q, long k, const ContentParams& p) {
    require_params(p);
    Rat bk = rat_pow(Rat(p.b), k);
    Rat betak = rat_pow(Rat(p.beta), k);
    Rat scaled = q.rat() * bk;
    scaled.canonicalize();
    return content(NonNegRational(scaled), p).rat() == betak * content(q, p).rat();
}

CarryContent carry_content_identity(const NonNegRational& m, const NonNegRational& n,
                                    const ContentParams& p) {
    require_params(p);
    CarryContent out;
    out.word = carry_word(m, n, p.b);
    out.carry_reed = reed(out.word, p.beta);
    out.lhs = content(m, p).rat() + content(n, p).rat();
    out.rhs = content(m + n, p).rat() +
              (Rat(p.b) - Rat(p.beta)) * out.carry_reed.rat();
    out.lhs.canonicalize();
    out.rhs.canonicalize();
    out.equal = out.lhs == out.rhs;
    check_internal(out.equal, "carry-content identity violated");
    return out;
}

UnitFractionDigits unit_fraction_digits(const FractionTriple& t, std::size_t k) {
    t.validate();
    const std::uint32_t b = t.b, d = t.d;
    UnitFractionDigits out;
    PeriodicWord w = rite(NonNegRational(Int(1), Int(d)), b);
    out.a.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) out.a.push_back(w.frac_digit(i));

    out.classifier_applicable = d >= 2;
    if (!out.classifier_applicable) {
        out.case_index = 0;
        return out;
    }
    if (d == b)
        out.case_index = 5;
    else if (d == b - 1)
        out.case_index = 4;
    else if (b > 6 && d == b - 2)
        out.case_index = 3;
    else if (2 * d <= b)
        out.case_index = 1;
    else
        out.case_index = 2;

    auto digit = [&](std::size_t i) { return w.frac_digit(i); };
    switch (out.case_index) {
        case 1:
            check_internal(digit(1) >= 2, "case 1 digit pattern");
            break;
        case 2:
            check_internal(digit(1) == 1 && digit(2) >= 3, "case 2 digit pattern");
            check_internal(Int(d) * (Int(b) + 3) <= Int(b) * Int(b), "case 2 range");
            break;
        case 3:
            check_internal(digit(1) == 1 && digit(2) == 2 && digit(3) >= 4,
                           "case 3 digit pattern");
            break;
        case 4:
            check_internal(w.pre.empty() && w.period == std::vector<std::uint32_t>{1},
                           "case 4 word shape");
            break;
        case 5:
            check_internal(w.int_digits.empty() && w.pre == std::vector<std::uint32_t>{1} &&
                               w.period == std::vector<std::uint32_t>{0},
                           "case 5 word shape");
            break;
    }

    // Geometric-prefix law: a_j = (b-d)^(j-1) for all j <= i iff (b-d)^i < d,
    // and at the first deviation a_i = (b-d)^(i-1) + floor((b-d)^i / d).
    const Int bd(static_cast<long>(b) - static_cast<long>(d));
    Int pw(1);
    bool prefix = true;
    for (std::size_t i = 1; i <= k; ++i) {
        bool geo_here = Int(w.frac_digit(i)) == pw;
        if (prefix && !geo_here)
            check_internal(Int(w.frac_digit(i)) == pw + (pw * bd) / d,
                           "first geometric deviation value");
        prefix = prefix && geo_here;
        check_internal(prefix == (pw * bd < d), "geometric-prefix criterion");
        pw *= bd;
    }
    return out;
}

FractionDigits fraction_digits_and_carries(const FractionTriple& t, std::size_t k) {
    // Digits and carries live entirely in base b; the reading base b - D is
    // not involved, so triples with b - D < 2 are accepted here.
    if (t.D < 1 || t.D > t.d || t.d > t.b) fail_usage("need 1 <= D <= d <= b");
    const std::uint32_t b = t.b, d = t.d, D = t.D;
    FractionDigits out;
    PeriodicWord we = rite(NonNegRational(Int(D), Int(d)), b);
    out.e.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) out.e.push_back(we.frac_digit(i));

    std::vector<std::uint32_t> r = carry_word_dfold(d, D, b, k + 1);
    out.r.assign(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k));

    if (D < d) {
        PeriodicWord wa = rite(NonNegRational(Int(1), Int(d)), b);
        for (std::size_t i = 1; i <= k + 1; ++i) {
            Int bi = int_pow(Int(b), i - 1);
            Int ci = int_pow(Int(b - d), i - 1);
            Int va = (Int(D) * bi) / d - Int(D) * (bi / d);
            Int vb = (Int(D) * ci) / d - Int(D) * (ci / d);
            check_internal(va == vb, "carry floor-formula variants disagree");
            check_internal(va == Int(r[i - 1]), "carry formula disagrees with addition route");
        }
        for (std::size_t i = 1; i <= k; ++i) {
            long lhs = static_cast<long>(out.e[i - 1]);
            long rhs = static_cast<long>(D) * wa.frac_digit(i) + static_cast<long>(r[i]) -
                       static_cast<long>(b) * r[i - 1];
            check_internal(lhs == rhs, "digit-carry identity violated");
        }
    }
    return out;
}

BoundC1Report bound_c1(const FractionTriple& t) {
    t.validate();
    const std::uint32_t b = t.b, d = t.d, D = t.D, beta = t.beta();
    BoundC1Report rep;
    rep.c1 = content(NonNegRational(Int(1), Int(d)), t.params());

    Rat prop_bound = unit_bound(beta);
    rep.prop_applicable = d + 2 <= b && b > 6;
    rep.prop_holds = rep.c1.rat() >= prop_bound;
    rep.prop_margin = rep.c1.rat() - prop_bound;
    rep.prop_margin.canonicalize();
    rep.listed_exception = (b == 4 && d == 2 && D == 2) || (b == 5 && d == 3 && D == 3) ||
                           (b == 6 && d == 4 && D == 4);

    Rat cor_bound(Int(D), Int(beta) * (Int(beta) - 1));
    cor_bound.canonicalize();
    rep.cor_applicable = d + 2 <= b && 2 * D <= b;
    rep.cor_holds = rep.c1.rat() >= cor_bound;
    rep.cor_margin = rep.c1.rat() - cor_bound;
    rep.cor_margin.canonicalize();

    rep.easy_formula_checked = false;
    if (d == b || d == b - 1) {
        Rat easy(Int(1), Int(d) - Int(D));
        easy.canonicalize();
        check_internal(rep.c1.rat() == easy, "unit content easy formula");
        rep.easy_formula_checked = true;
    }
    return rep;
}

BoundCDReport bound_cD(const FractionTriple& t) {
    t.validate();
    const std::uint32_t b = t.b, d = t.d, D = t.D, beta = t.beta();
    BoundCDReport rep;
    rep.cD = content(NonNegRational(Int(D), Int(d)), t.params());
    rep.bound = Rat(Int(D)) * unit_bound(beta);
    rep.bound.canonicalize();
    rep.holds = rep.cD.rat() >= rep.bound;
    rep.margin = rep.cD.rat() - rep.bound;
    rep.margin.canonicalize();

    rep.prop_applicable = D < d && d + 2 <= b;
    rep.cond1 = 2 * d <= b;
    rep.cond2 = b > d && Int(D) * (Int(b) - d) < Int(d) * (Int(b) - d - 1);
    rep.cond1prime = b > d && Int(b - d) * Int(b - d) > Int(b) - 1;

    for (bool& f : rep.a2r23) f = false;
    rep.r2ineq_applicable = rep.prop_applicable && 2 * d > b;
    rep.r2ineq_equivalent = true;
    if (D < d) {
        FractionDigits fd = fraction_digits_and_carries(t, 3);
        UnitFractionDigits ud = unit_fraction_digits(t, 3);
        long a1 = ud.a[0], a2 = ud.a[1], a3 = ud.a[2];
        long r2 = fd.r[1], r3 = fd.r[2];
        Rat gap(Int(2) * D, Int(beta) - 1);
        gap.canonicalize();
        rep.a2r23[0] = beta >= 3 && a1 >= 2;
        rep.a2r23[1] = Rat(r2) >= gap;
        rep.a2r23[2] = beta >= 3 && a2 - r2 >= 3;
        rep.a2r23[3] = a2 - r2 == 2 && Rat(r3) >= gap;
        rep.a2r23[4] = beta >= 3 && a2 - r2 == 2 && a3 - r3 >= 3;
        if (rep.r2ineq_applicable)
            rep.r2ineq_equivalent = (r2 < static_cast<long>(b) - d - 1) == rep.cond2;
    }
    rep.any_sufficient = rep.cond1 || rep.cond2;
    for (bool f : rep.a2r23) rep.any_sufficient = rep.any_sufficient || f;
    return rep;
}

Rat poscutoff_lower(const FractionTriple& t, std::size_t k) {
    t.validate();
    if (t.D >= t.d) fail_usage("partial-sum bound needs D < d");
    if (k < 1) fail_usage("partial-sum bound needs k >= 1");
    const Int beta(t.beta());
    FractionDigits fd = fraction_digits_and_carries(t, k + 1);
    UnitFractionDigits ud = unit_fraction_digits(t, k);
    Int num(0);
    for (std::size_t i = 1; i <= k; ++i)
        num += (Int(ud.a[i - 1]) - Int(fd.r[i - 1])) * int_pow(beta, k - i);
    num = Int(t.D) * num + Int(fd.r[k]);
    Rat lower(num, int_pow(beta, k));
    lower.canonicalize();

    Rat partial(0);
    for (std::size_t i = 1; i <= k; ++i) partial += Rat(Int(fd.e[i - 1]), int_pow(beta, i));
    partial.canonicalize();
    check_internal(lower == partial, "partial sum does not match digit expansion");
    return lower;
}

}  // namespace ng
