#include "core/word.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace ng {

namespace {

// lcm of period lengths, guarded: carry alignment uses it as a block size.
std::size_t lcm_checked(std::size_t a, std::size_t b) {
    std::size_t g = std::gcd(a, b);
    std::size_t l = (a / g) * b;
    if (l > 100'000'000) fail_domain("period alignment too large");
    return l;
}

std::vector<std::uint32_t> rotate_right(std::vector<std::uint32_t> v) {
    if (v.size() > 1) std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
    return v;
}

}  // namespace

void PeriodicWord::normalize() {
    if (period.empty()) period = {0};
    // Primitive cyclic root: shortest divisor-length block that tiles it.
    for (std::size_t root = 1; root < period.size(); ++root) {
        if (period.size() % root != 0) continue;
        bool tiles = true;
        for (std::size_t k = root; k < period.size() && tiles; ++k)
            tiles = period[k] == period[k % root];
        if (tiles) {
            period.resize(root);
            break;
        }
    }
    // Minimal preperiod: absorb a matching boundary digit into the period.
    while (!pre.empty() && pre.back() == period.back()) {
        pre.pop_back();
        period = rotate_right(std::move(period));
    }
    // A pure (b-1)-repetend is the terminating form of the next rational up;
    // rewrite it so every value has one normal form.
    if (period.size() == 1 && period[0] == base - 1) {
        period[0] = 0;
        std::uint32_t carry = 1;
        for (auto it = pre.rbegin(); it != pre.rend() && carry; ++it) {
            *it += 1;
            if (*it == base) *it = 0; else carry = 0;
        }
        for (std::size_t i = 0; carry && i < int_digits.size(); ++i) {
            int_digits[i] += 1;
            if (int_digits[i] == base) int_digits[i] = 0; else carry = 0;
        }
        if (carry) int_digits.push_back(1);
        while (!pre.empty() && pre.back() == 0) pre.pop_back();
    }
    while (!int_digits.empty() && int_digits.back() == 0) int_digits.pop_back();
}

std::uint32_t PeriodicWord::frac_digit(std::size_t j) const {
    check_internal(j >= 1, "fractional slots start at 1");
    if (j <= pre.size()) return pre[j - 1];
    return period[(j - pre.size() - 1) % period.size()];
}

std::uint32_t PeriodicWord::int_digit(std::size_t i) const {
    return i < int_digits.size() ? int_digits[i] : 0;
}

std::string PeriodicWord::to_string() const {
    const bool wide = base > 10;
    auto emit = [&](std::ostringstream& out, const std::vector<std::uint32_t>& ds, bool reversed) {
        for (std::size_t k = 0; k < ds.size(); ++k) {
            if (wide && k > 0) out << ':';
            out << ds[reversed ? ds.size() - 1 - k : k];
        }
    };
    std::ostringstream out;
    if (int_digits.empty())
        out << '0';
    else
        emit(out, int_digits, /*reversed=*/true);
    bool trivial_frac = pre.empty() && period == std::vector<std::uint32_t>{0};
    if (!trivial_frac) {
        out << '.';
        emit(out, pre, false);
        if (period != std::vector<std::uint32_t>{0}) {
            out << '(';
            emit(out, period, false);
            out << ')';
        }
    }
    return out.str();
}

namespace {

std::vector<std::uint32_t> parse_digits(const std::string& part, std::uint32_t base,
                                        const std::string& what) {
    std::vector<std::uint32_t> ds;
    if (part.empty()) return ds;
    if (base <= 10) {
        for (char c : part) {
            if (c < '0' || c > '9') fail_usage("bad digit '" + std::string(1, c) + "' in " + what);
            ds.push_back(static_cast<std::uint32_t>(c - '0'));
        }
    } else {
        std::size_t pos = 0;
        while (pos <= part.size()) {
            std::size_t next = part.find(':', pos);
            std::string tok = part.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                fail_usage("bad digit token '" + tok + "' in " + what);
            ds.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    for (auto d : ds)
        if (d >= base) fail_usage("digit " + std::to_string(d) + " out of range for base " +
                                  std::to_string(base));
    return ds;
}

}  // namespace

PeriodicWord PeriodicWord::parse(const std::string& text, std::uint32_t base) {
    if (base < 2) fail_usage("base must be >= 2");
    PeriodicWord w;
    w.base = base;
    std::string body = text;
    std::string frac;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        frac = body.substr(dot + 1);
        body = body.substr(0, dot);
    }
    auto ints = parse_digits(body, base, "integer part");
    std::reverse(ints.begin(), ints.end());
    w.int_digits = std::move(ints);
    if (auto open = frac.find('('); open != std::string::npos) {
        if (frac.empty() || frac.back() != ')') fail_usage("unterminated period block");
        w.pre = parse_digits(frac.substr(0, open), base, "preperiod");
        w.period = parse_digits(frac.substr(open + 1, frac.size() - open - 2), base, "period");
        if (w.period.empty()) fail_usage("empty period block");
    } else {
        w.pre = parse_digits(frac, base, "fraction");
        w.period = {0};
    }
    while (!w.int_digits.empty() && w.int_digits.back() == 0) w.int_digits.pop_back();
    return w;
}

PeriodicWord rite(const NonNegRational& q, std::uint32_t b) {
    if (b < 2) fail_usage("base must be >= 2");
    PeriodicWord w;
    w.base = b;
    Int ip = q.floor();
    Int rem = q.num() - ip * q.den();  // fractional numerator, 0 <= rem < den
    Int den = q.den();
    while (ip > 0) {
        Int d;
        mpz_fdiv_qr_ui(ip.get_mpz_t(), d.get_mpz_t(), ip.get_mpz_t(), b);
        w.int_digits.push_back(static_cast<std::uint32_t>(d.get_ui()));
    }
    // Long division: remainder states repeat at the minimal (s, t); the
    // produced digit stream is the standard expansion, so it can never be
    // the all-(b-1) tail.
    std::map<Int, std::size_t> seen;  // remainder -> number of slots already emitted
    std::vector<std::uint32_t> digits;
    Int r = rem;
    for (;;) {
        auto it = seen.find(r);
        if (it != seen.end()) {
            std::size_t first = it->second;
            w.pre.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
            w.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(first), digits.end());
            break;
        }
        seen.emplace(r, digits.size());
        Int prod = r * b;
        Int dq, dr;
        mpz_fdiv_qr(dq.get_mpz_t(), dr.get_mpz_t(), prod.get_mpz_t(), den.get_mpz_t());
        digits.push_back(static_cast<std::uint32_t>(dq.get_ui()));
        r = dr;
    }
    w.normalize();
    return w;
}

NonNegRational reed(const PeriodicWord& w, std::uint32_t beta) {
    if (beta < 2) fail_usage("radix must be >= 2");
    Int B(beta);
    // Integer digits are little-endian: most significant is the back.
    Int n(0);
    for (auto it = w.int_digits.rbegin(); it != w.int_digits.rend(); ++it) n = n * B + *it;
    Int u(0);
    for (auto d : w.pre) u = u * B + d;
    Int m(0);
    for (auto d : w.period) m = m * B + d;
    Int bs = int_pow(B, w.pre.size());
    Int bt = int_pow(B, w.period.size());
    Rat val = Rat(n) + Rat(u, bs) + Rat(m, bs * (bt - 1));
    val.canonicalize();
    return NonNegRational(val);
}

BaseStats base_stats(const NonNegRational& q, std::uint32_t b) {
    PeriodicWord w = rite(q, b);
    BaseStats st;
    st.ell = w.ell();
    st.s = w.s();
    st.t = w.t();
    Int B(b);
    st.n = 0;
    for (auto it = w.int_digits.rbegin(); it != w.int_digits.rend(); ++it) st.n = st.n * B + *it;
    st.u = 0;
    for (auto d : w.pre) st.u = st.u * B + d;
    st.m = 0;
    for (auto d : w.period) st.m = st.m * B + d;
    // Shape identity for the expansion this summarises.
    Rat back = Rat(st.n) + Rat(st.u, int_pow(B, st.s)) +
               Rat(st.m, int_pow(B, st.s) * (int_pow(B, st.t) - 1));
    back.canonicalize();
    check_internal(back == q.rat(), "base_stats does not reassemble its input");
    check_internal(st.u < int_pow(B, st.s), "preperiod value out of range");
    check_internal(st.m < int_pow(B, st.t) - 1, "period value out of range");
    return st;
}

PeriodicWord carry_word(const NonNegRational& x, const NonNegRational& y, std::uint32_t b) {
    PeriodicWord wx = rite(x, b), wy = rite(y, b), ws = rite(x + y, b);
    std::size_t top = std::max<std::size_t>(1, ws.ell());
    check_internal(top >= wx.ell() && top >= wy.ell(), "sum shorter than a summand");

    PeriodicWord out;
    out.base = b;
    out.int_digits.assign(top, 0);
    // Work top-down: the carry out of the top position is 0, and at each
    // position i the digits satisfy x_i + y_i + r_{i-1} = s_i + b * r_i.
    std::int64_t r = 0;
    auto step = [&](std::int64_t si, std::int64_t xi, std::int64_t yi) {
        std::int64_t next = si + static_cast<std::int64_t>(b) * r - xi - yi;
        check_internal(next == 0 || next == 1, "carry digit outside {0,1}");
        r = next;
        return static_cast<std::uint32_t>(next);
    };
    out.int_digits[top - 1] = 0;
    for (std::size_t i = top; i-- > 1;)
        out.int_digits[i - 1] = step(ws.int_digit(i), wx.int_digit(i), wy.int_digit(i));
    std::uint32_t rho1 = step(ws.int_digit(0), wx.int_digit(0), wy.int_digit(0));

    std::size_t S = std::max({wx.s(), wy.s(), ws.s()});
    std::size_t L = lcm_checked(lcm_checked(wx.t(), wy.t()), ws.t());
    // frac[j-1] = carry out of fractional slot j; compute S + 2L + 1 slots,
    // then locate a repeated block-entry state (it lies in {0,1}, so the
    // entry states of blocks 1..3 must contain a repeat).
    std::vector<std::uint32_t> frac;
    frac.reserve(S + 2 * L + 1);
    frac.push_back(rho1);
    for (std::size_t j = 1; frac.size() < S + 2 * L + 1; ++j)
        frac.push_back(step(ws.frac_digit(j), wx.frac_digit(j), wy.frac_digit(j)));

    auto slot = [&](std::size_t j) { return frac[j - 1]; };
    std::size_t pre_len, per_start;  // period = slots [per_start, per_start + per_len)
    std::size_t per_len = L;
    if (slot(S + L + 1) == slot(S + 1)) {
        pre_len = S;
        per_start = S + 1;
    } else if (slot(S + 2 * L + 1) == slot(S + L + 1)) {
        pre_len = S + L;
        per_start = S + L + 1;
    } else {
        check_internal(slot(S + 2 * L + 1) == slot(S + 1), "no repeated carry state");
        pre_len = S;
        per_start = S + 1;
        per_len = 2 * L;
    }
    out.pre.assign(frac.begin(), frac.begin() + static_cast<std::ptrdiff_t>(pre_len));
    out.period.assign(frac.begin() + static_cast<std::ptrdiff_t>(per_start - 1),
                      frac.begin() + static_cast<std::ptrdiff_t>(per_start - 1 + per_len));
    out.normalize();
    return out;
}

PeriodicWord dfold_carry_word(std::uint32_t b, std::uint32_t d, std::uint32_t D) {
    if (b < 2 || d > b) fail_usage("need base >= 2 and d <= b");
    if (d < 1 || D < 1 || D > d) fail_usage("need 1 <= D <= d");
    PeriodicWord sum;
    sum.base = b;
    sum.period = {0};
    for (std::uint32_t i = 1; i < D; ++i) {
        PeriodicWord w =
            carry_word(NonNegRational(Int(i), Int(d)), NonNegRational(Int(1), Int(d)), b);
        // Digit-wise addition over a common alignment.
        PeriodicWord next;
        next.base = b;
        std::size_t il = std::max(sum.ell(), w.ell());
        for (std::size_t k = 0; k < il; ++k)
            next.int_digits.push_back(sum.int_digit(k) + w.int_digit(k));
        std::size_t S = std::max(sum.s(), w.s());
        std::size_t L = lcm_checked(sum.t(), w.t());
        for (std::size_t j = 1; j <= S; ++j) next.pre.push_back(sum.frac_digit(j) + w.frac_digit(j));
        for (std::size_t j = S + 1; j <= S + L; ++j)
            next.period.push_back(sum.frac_digit(j) + w.frac_digit(j));
        next.normalize();
        sum = std::move(next);
    }
    sum.normalize();
    return sum;
}

std::vector<std::uint32_t> carry_word_dfold(std::uint32_t d, std::uint32_t D, std::uint32_t b,
                                            std::size_t k) {
    PeriodicWord w = dfold_carry_word(b, d, D);
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::size_t j = 1; j <= k; ++j) {
        std::uint32_t r = w.frac_digit(j);
        check_internal(r <= D - 1, "d-fold carry digit exceeds D-1");
        out.push_back(r);
    }
    if (!out.empty() && D < d) check_internal(out[0] == 0, "first d-fold carry digit not 0");
    return out;
}

}  // namespace ng
