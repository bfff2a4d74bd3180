#pragma once

// Prime field arithmetic with a runtime modulus.
//
// All coefficient arithmetic in this library happens in F_p.  The modulus is
// carried by the containing context (subspace, algebra, ...) rather than by
// each element, so the element type here is a plain residue plus free
// functions that take p explicitly.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairops {

using fe = std::uint32_t; // residue in [0, p)

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_prime(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

inline fe fadd(fe a, fe b, fe p) { return (a + b) % p; }
inline fe fsub(fe a, fe b, fe p) { return (a + p - b % p) % p; }
inline fe fneg(fe a, fe p) { return a == 0 ? 0 : p - a; }
inline fe fmul(fe a, fe b, fe p) {
    return static_cast<fe>(std::uint64_t(a) * b % p);
}

inline fe fpow(fe a, std::uint64_t e, fe p) {
    fe r = 1 % p, base = a % p;
    while (e) {
        if (e & 1) r = fmul(r, base, p);
        base = fmul(base, base, p);
        e >>= 1;
    }
    return r;
}

// Inverse by Fermat; p is prime by construction of every context.
inline fe finv(fe a, fe p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    return fpow(a, p - 2, p);
}

// Normalize a (possibly negative) machine integer into [0, p).
inline fe fnorm(long long v, fe p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<fe>(r);
}

} // namespace pairops
