#include "tropbn/rational.hpp"

#include <limits>
#include <sstream>

#include "tropbn/errors.hpp"

namespace tropbn {

Int floor_div(const Int& a, const Int& b) {
    require_internal(b > 0, "floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

Int rat_floor(const Rat& x) { return floor_div(numerator(x), denominator(x)); }

Rat rat_mod(const Rat& x, const Int& mu) {
    require_internal(mu > 0, "rat_mod: modulus must be positive");
    Rat r = x - Rat(mu) * Rat(rat_floor(x / Rat(mu)));
    return r;
}

bool congruent(const Rat& x, const Rat& y, long long mu) {
    if (mu == 0) return x == y;
    return rat_mod(x - y, Int(mu)) == 0;
}

long long to_ll(const Int& x) {
    require_internal(x >= std::numeric_limits<long long>::min() &&
                         x <= std::numeric_limits<long long>::max(),
                     "integer out of 64-bit range");
    return static_cast<long long>(x);
}

long long rat_to_ll(const Rat& x) {
    require_internal(is_integer(x), "expected an integer rational");
    return to_ll(numerator(x));
}

std::string rat_str(const Rat& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << '/' << denominator(x);
    return os.str();
}

Rat parse_rat(std::string_view s) {
    auto bad = [&] { throw InputError("malformed rational: '" + std::string(s) + "'"); };
    if (s.empty()) bad();
    std::string num, den = "1";
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        num = std::string(s);
    } else {
        num = std::string(s.substr(0, slash));
        den = std::string(s.substr(slash + 1));
        if (num.empty() || den.empty()) bad();
    }
    auto check_digits = [&](const std::string& t, bool sign_ok) {
        size_t i = 0;
        if (sign_ok && (t[0] == '+' || t[0] == '-')) i = 1;
        if (i >= t.size()) bad();
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    check_digits(num, true);
    check_digits(den, false);
    Int p(num), q(den);
    if (q == 0) throw InputError("zero denominator in rational: '" + std::string(s) + "'");
    return Rat(p, q);
}

std::string rat_vec_str(const std::vector<Rat>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    out += ")";
    return out;
}

}  // namespace tropbn
