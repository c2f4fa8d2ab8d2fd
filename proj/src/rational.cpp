#include "dybmo/rational.hpp"

#include <cctype>
#include <cstdio>

namespace dybmo {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("parse_rat: bad character in \"" + s + "\"");
    }
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rat: cannot parse \"" + s + "\"");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string rat_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rat_decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", r.get_d());
    return buf;
}

Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rat mod_one(const Rat& r) {
    Rat m = r - Rat(rat_floor(r));
    return m;
}

Rat pow2(long e) {
    Rat r;
    if (e >= 0) {
        mpz_ui_pow_ui(r.get_num().get_mpz_t(), 2, static_cast<unsigned long>(e));
    } else {
        mpz_ui_pow_ui(r.get_den().get_mpz_t(), 2, static_cast<unsigned long>(-e));
    }
    return r;
}

Rat dist_to_int(const Rat& r) {
    Rat m = mod_one(r);
    Rat other = 1 - m;
    return m <= other ? m : other;
}

bool is_dyadic(const Rat& r, long* exponent) {
    const Int& den = r.get_den();
    // den is positive and odd-free iff it is a power of two.
    size_t e = mpz_scan1(den.get_mpz_t(), 0);
    Int shifted = den >> e;
    if (shifted != 1) return false;
    if (exponent) *exponent = static_cast<long>(e);
    return true;
}

}  // namespace dybmo
