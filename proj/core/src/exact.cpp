#include "conewalls/exact.hpp"

#include <stdexcept>

namespace conewalls {

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int rat_strict_floor(const Rat& q) {
    return rat_ceil(q) - 1;
}

Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int rat_sqrt_floor(const Rat& q) {
    if (q < 0) throw std::invalid_argument("rat_sqrt_floor: negative argument");
    Int m = isqrt_floor(rat_floor(q));
    while (Rat((m + 1) * (m + 1)) <= q) ++m;
    return m;
}

Int floor_add_sqrt(const Rat& c, const Rat& r) {
    Int t = rat_floor(c) + rat_sqrt_floor(r);
    // t <= c + sqrt(r) already; push up while the next integer still fits.
    for (;;) {
        Rat d = Rat(t + 1) - c;
        if (d <= 0 || d * d <= r)
            ++t;
        else
            break;
    }
    return t;
}

Int ceil_sub_sqrt(const Rat& c, const Rat& r) {
    Int t = rat_ceil(c) - rat_sqrt_floor(r);
    for (;;) {
        Rat d = c - Rat(t - 1);
        if (d <= 0 || d * d <= r)
            --t;
        else
            break;
    }
    return t;
}

std::string rat_to_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace conewalls
