#include "x33/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace x33 {

Rat rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_parse(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string body(s.substr(b, e - b));
    if (body.empty()) throw std::invalid_argument("empty rational literal");
    auto check_digits = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = body.find('/');
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!check_digits(num) || !check_digits(den))
        throw std::invalid_argument("bad rational literal: " + body);
    Rat r{Int(num), Int(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + body);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long rat_floor_long(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw std::overflow_error("floor out of range");
    return q.get_si();
}

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace x33
