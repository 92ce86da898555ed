#include "core/rational.hpp"

#include <cctype>

namespace ng {

Int int_pow(const Int& base, std::uint64_t e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rat rat_pow(const Rat& base, std::int64_t e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    std::uint64_t a = inv ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    if (inv && base == 0) fail_domain("zero base with negative exponent");
    Rat r(int_pow(Int(base.get_num()), a), int_pow(Int(base.get_den()), a));
    r.canonicalize();
    if (inv) r = 1 / r;
    return r;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const Int& n) { return n.get_str(); }

NonNegRational::NonNegRational(const Int& num, const Int& den) {
    if (den == 0) fail_domain("zero denominator");
    v_ = Rat(num, den);
    v_.canonicalize();
    require_nonneg();
}

NonNegRational NonNegRational::parse(const std::string& text) {
    std::size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    std::string body = text.substr(a, b - a);
    if (body.empty()) fail_usage("empty rational literal");
    std::string num = body, den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    auto digits_only = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!digits_only(num) || !digits_only(den))
        fail_usage("rational literal must be 'num' or 'num/den' with decimal digits: '" + body + "'");
    Int n(num, 10), d(den, 10);
    if (d == 0) fail_usage("zero denominator in '" + body + "'");
    return NonNegRational(n, d);
}

Int NonNegRational::floor() const {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

NonNegRational NonNegRational::operator-(const NonNegRational& o) const {
    if (v_ < o.v_) fail_domain("subtraction would leave the nonnegative domain");
    return NonNegRational(Rat(v_ - o.v_));
}

NonNegRational NonNegRational::operator/(const NonNegRational& o) const {
    if (o.v_ == 0) fail_domain("division by zero");
    return NonNegRational(Rat(v_ / o.v_));
}

}  // namespace ng
