#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttsupp/error.hpp"

namespace ttsupp {

// ---------------------------------------------------------------------------
// Exact arithmetic in the two Euclidean base domains: Z and F_p[x].
// Elements are small by design (desk scale); integer overflow is an error,
// not UB.
// ---------------------------------------------------------------------------

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw resource_error("integer overflow in exact arithmetic");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw resource_error("integer overflow in exact arithmetic");
    return r;
}

// Dense polynomial over F_p, little-endian coefficients, no trailing zeros.
struct Poly {
    std::uint32_t p = 0;             // characteristic; 0 means "unset"
    std::vector<std::uint32_t> c;    // c[i] is the coefficient of x^i

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; } // deg(0) == -1
    std::uint32_t lead() const { return c.back(); }
    bool operator==(const Poly&) const = default;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // extended Euclid mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    if (r != 1) throw input_error("fp_inv: not invertible");
    return static_cast<std::uint32_t>((t % p + p) % p);
}

inline Poly poly_zero(std::uint32_t p) { return Poly{p, {}}; }
inline Poly poly_const(std::uint32_t p, std::uint32_t v) {
    Poly r{p, {v % p}};
    r.trim();
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r{a.p, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) {
        std::uint64_t s = (i < a.c.size() ? a.c[i] : 0u) + (i < b.c.size() ? b.c[i] : 0u);
        r.c[i] = static_cast<std::uint32_t>(s % a.p);
    }
    r.trim();
    return r;
}

inline Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = (a.p - x) % a.p;
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero(a.p);
    Poly r{a.p, {}};
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = static_cast<std::uint32_t>((r.c[i + j] + std::uint64_t{a.c[i]} * b.c[j]) % a.p);
    r.trim();
    return r;
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    Poly rem = a, quo = poly_zero(a.p);
    quo.c.assign(a.c.size(), 0);
    std::uint32_t binv = fp_inv(b.lead(), a.p);
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int shift = rem.deg() - b.deg();
        std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t{rem.lead()} * binv % a.p);
        if (static_cast<size_t>(shift) >= quo.c.size()) quo.c.resize(shift + 1, 0);
        quo.c[shift] = static_cast<std::uint32_t>((quo.c[shift] + f) % a.p);
        for (int i = 0; i <= b.deg(); ++i) {
            std::uint64_t sub = std::uint64_t{f} * b.c[i] % a.p;
            std::uint32_t& target = rem.c[i + shift];
            target = static_cast<std::uint32_t>((target + a.p - sub) % a.p);
        }
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

inline bool poly_eq(const Poly& a, const Poly& b) { return a.p == b.p && a.c == b.c; }

// The Euclidean base domain of a ring of modules/complexes.
struct EuclideanDomain {
    enum class Kind { Z, FpX };
    Kind kind = Kind::Z;
    std::uint32_t p = 0; // characteristic for FpX

    bool operator==(const EuclideanDomain&) const = default;
    std::string name() const {
        if (kind == Kind::Z) return "Z";
        return "F" + std::to_string(p) + "[x]";
    }
};

// Element of a Euclidean base domain (tagged union, value semantics).
struct DElem {
    EuclideanDomain dom;
    std::int64_t n = 0; // used when dom.kind == Z
    Poly f;             // used when dom.kind == FpX

    bool is_int() const { return dom.kind == EuclideanDomain::Kind::Z; }
    bool operator==(const DElem& o) const {
        return dom == o.dom && (is_int() ? n == o.n : f == o.f);
    }
};

inline DElem de_int(std::int64_t v) { return DElem{{EuclideanDomain::Kind::Z, 0}, v, {}}; }
inline DElem de_poly(Poly f) {
    DElem e;
    e.dom = {EuclideanDomain::Kind::FpX, f.p};
    e.f = std::move(f);
    return e;
}
inline DElem de_zero(const EuclideanDomain& d) {
    return d.kind == EuclideanDomain::Kind::Z ? de_int(0) : de_poly(poly_zero(d.p));
}
inline DElem de_one(const EuclideanDomain& d) {
    return d.kind == EuclideanDomain::Kind::Z ? de_int(1) : de_poly(poly_const(d.p, 1));
}

inline void de_check_same(const DElem& a, const DElem& b) {
    if (!(a.dom == b.dom)) throw input_error("mixed base domains in element arithmetic");
}

inline bool de_is_zero(const DElem& a) { return a.is_int() ? a.n == 0 : a.f.is_zero(); }
inline bool de_eq(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    return a.is_int() ? a.n == b.n : poly_eq(a.f, b.f);
}

inline DElem de_add(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    if (a.is_int()) return de_int(checked_add(a.n, b.n));
    return de_poly(poly_add(a.f, b.f));
}
inline DElem de_neg(const DElem& a) {
    if (a.is_int()) return de_int(-a.n);
    return de_poly(poly_neg(a.f));
}
inline DElem de_sub(const DElem& a, const DElem& b) { return de_add(a, de_neg(b)); }
inline DElem de_mul(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    if (a.is_int()) return de_int(checked_mul(a.n, b.n));
    return de_poly(poly_mul(a.f, b.f));
}

inline std::pair<DElem, DElem> de_divmod(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    if (de_is_zero(b)) throw input_error("division by zero");
    if (a.is_int()) {
        std::int64_t q = a.n / b.n, r = a.n % b.n;
        return {de_int(q), de_int(r)};
    }
    auto [q, r] = poly_divmod(a.f, b.f);
    return {de_poly(q), de_poly(r)};
}

inline bool de_divides(const DElem& d, const DElem& a) {
    if (de_is_zero(d)) return de_is_zero(a);
    return de_is_zero(de_divmod(a, d).second);
}

inline bool de_is_unit(const DElem& a) {
    if (a.is_int()) return a.n == 1 || a.n == -1;
    return !a.f.is_zero() && a.f.deg() == 0;
}

// Canonical associate: positive integer / monic polynomial.
inline DElem de_normalize(const DElem& a) {
    if (a.is_int()) return de_int(a.n < 0 ? -a.n : a.n);
    if (a.f.is_zero()) return a;
    Poly r = a.f;
    std::uint32_t inv = fp_inv(r.lead(), r.p);
    for (auto& x : r.c) x = static_cast<std::uint32_t>(std::uint64_t{x} * inv % r.p);
    return de_poly(r);
}

inline DElem de_gcd(DElem a, DElem b) {
    de_check_same(a, b);
    while (!de_is_zero(b)) {
        DElem r = de_divmod(a, b).second;
        a = b;
        b = r;
    }
    return de_normalize(a);
}

// g = gcd, and x,y with x*a + y*b = g (g canonical).
struct Egcd {
    DElem g, x, y;
};
inline Egcd de_egcd(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    DElem r0 = a, r1 = b;
    DElem x0 = de_one(a.dom), x1 = de_zero(a.dom);
    DElem y0 = de_zero(a.dom), y1 = de_one(a.dom);
    while (!de_is_zero(r1)) {
        DElem q = de_divmod(r0, r1).first;
        DElem r2 = de_sub(r0, de_mul(q, r1));
        DElem x2 = de_sub(x0, de_mul(q, x1));
        DElem y2 = de_sub(y0, de_mul(q, y1));
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    // normalize so the gcd is canonical
    if (!de_is_zero(r0)) {
        DElem unit = de_divmod(r0, de_normalize(r0)).first; // +-1 or the lead coeff
        // multiply coefficients by unit^{-1}
        if (r0.is_int()) {
            if (unit.n == -1) { r0 = de_neg(r0); x0 = de_neg(x0); y0 = de_neg(y0); }
        } else {
            std::uint32_t inv = fp_inv(unit.f.c[0], r0.f.p);
            DElem invE = de_poly(poly_const(r0.f.p, inv));
            r0 = de_mul(r0, invE); x0 = de_mul(x0, invE); y0 = de_mul(y0, invE);
        }
    }
    return {r0, x0, y0};
}

inline DElem de_lcm(const DElem& a, const DElem& b) {
    if (de_is_zero(a) || de_is_zero(b)) return de_zero(a.dom);
    DElem g = de_gcd(a, b);
    return de_normalize(de_mul(de_divmod(a, g).first, b));
}

// exact division (throws if not divisible)
inline DElem de_divexact(const DElem& a, const DElem& d) {
    auto [q, r] = de_divmod(a, d);
    if (!de_is_zero(r)) throw input_error("de_divexact: not divisible");
    return q;
}

// v_p(a) for prime p; a != 0
inline int de_valuation(DElem a, const DElem& p) {
    if (de_is_zero(a)) throw input_error("valuation of zero");
    int v = 0;
    while (true) {
        auto [q, r] = de_divmod(a, p);
        if (!de_is_zero(r)) return v;
        a = q;
        ++v;
    }
}

// ---------------------------------------------------------------------------
// Primality, factorization, prime streams
// ---------------------------------------------------------------------------

inline bool int_is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Monic irreducibles of F_p[x] in increasing (degree, lexicographic) order.
// Degree cap guards the exhaustive search.
inline std::vector<Poly> fpx_irreducibles_up_to(std::uint32_t p, int maxdeg) {
    std::vector<Poly> irr;
    for (int d = 1; d <= maxdeg; ++d) {
        // enumerate monic polys of degree d by counting in base p
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t k = 0; k < count; ++k) {
            Poly f{p, {}};
            f.c.assign(d + 1, 0);
            std::uint64_t t = k;
            for (int i = 0; i < d; ++i) {
                f.c[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            f.c[d] = 1;
            bool red = false;
            for (const Poly& g : irr) {
                if (2 * g.deg() > d) break;
                if (poly_divmod(f, g).second.is_zero()) { red = true; break; }
            }
            if (!red) irr.push_back(f);
        }
    }
    return irr;
}

inline bool de_is_prime(const DElem& a, std::int64_t factor_bound = 1000000) {
    if (de_is_zero(a) || de_is_unit(a)) return false;
    if (a.is_int()) {
        std::int64_t n = a.n < 0 ? -a.n : a.n;
        if (n > checked_mul(factor_bound, factor_bound))
            throw resource_error("primality test beyond factor bound");
        return int_is_prime(n);
    }
    const Poly& f = a.f;
    if (f.deg() > 8) throw resource_error("polynomial factorization beyond degree cap 8");
    auto irr = fpx_irreducibles_up_to(f.p, f.deg() / 2);
    for (const Poly& g : irr)
        if (poly_divmod(f, g).second.is_zero()) return false;
    return true;
}

// Factorization of a nonzero element into canonical primes with exponents.
// Trial division with the configured bound; a surviving cofactor above the
// bound is a resource error (deterministic by design).
struct Factorization {
    // canonical prime -> exponent, ordered
    std::vector<std::pair<DElem, int>> primes;
    bool unit_only() const { return primes.empty(); }
};

inline Factorization de_factor(const DElem& a0, std::int64_t factor_bound = 1000000) {
    if (de_is_zero(a0)) throw input_error("factorization of zero");
    Factorization out;
    DElem a = de_normalize(a0);
    if (a.is_int()) {
        std::int64_t n = a.n;
        for (std::int64_t d = 2; d * d <= n; ++d) {
            if (d > factor_bound) throw resource_error("factor bound exceeded");
            if (n % d == 0) {
                int e = 0;
                while (n % d == 0) { n /= d; ++e; }
                out.primes.push_back({de_int(d), e});
            }
        }
        if (n > 1) {
            if (n > factor_bound && !int_is_prime(n)) throw resource_error("factor bound exceeded");
            out.primes.push_back({de_int(n), 1});
        }
        return out;
    }
    Poly f = a.f;
    if (f.deg() > 8) throw resource_error("polynomial factorization beyond degree cap 8");
    auto irr = fpx_irreducibles_up_to(f.p, std::max(1, f.deg()));
    for (const Poly& g : irr) {
        if (g.deg() > f.deg()) break;
        int e = 0;
        while (true) {
            auto [q, r] = poly_divmod(f, g);
            if (!r.is_zero()) break;
            f = q;
            ++e;
        }
        if (e > 0) out.primes.push_back({de_poly(g), e});
        if (f.deg() == 0) break;
    }
    return out;
}

inline DElem de_radical(const DElem& a, std::int64_t factor_bound = 1000000) {
    auto fac = de_factor(a, factor_bound);
    DElem r = de_one(a.dom);
    for (auto& [p, e] : fac.primes) r = de_mul(r, p);
    return de_normalize(r);
}

// k-th canonical prime of the domain (2,3,5,... / x, x+1, ... in order).
inline DElem nth_prime(const EuclideanDomain& dom, int k) {
    if (dom.kind == EuclideanDomain::Kind::Z) {
        std::int64_t n = 2;
        for (int seen = 0;; ++n) {
            if (int_is_prime(n) && seen++ == k) return de_int(n);
        }
    }
    auto irr = fpx_irreducibles_up_to(dom.p, 4);
    if (k < static_cast<int>(irr.size())) return de_poly(irr[k]);
    irr = fpx_irreducibles_up_to(dom.p, 8);
    if (k >= static_cast<int>(irr.size())) throw resource_error("prime stream exhausted");
    return de_poly(irr[k]);
}

// ---------------------------------------------------------------------------
// Printing / parsing ("12", "-3", "x^2+x+1", ...)
// ---------------------------------------------------------------------------

inline std::string de_str(const DElem& a) {
    if (a.is_int()) return std::to_string(a.n);
    if (a.f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = a.f.deg(); i >= 0; --i) {
        std::uint32_t c = a.f.c[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace detail {
inline void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
}
} // namespace detail

// Parses integer literals for Z and sums of c*x^k terms for F_p[x].
inline DElem de_parse(const EuclideanDomain& dom, const std::string& s) {
    size_t i = 0;
    detail::skip_ws(s, i);
    if (dom.kind == EuclideanDomain::Kind::Z) {
        try {
            size_t used = 0;
            std::int64_t v = std::stoll(s, &used);
            detail::skip_ws(s, used);
            if (used != s.size()) throw input_error("trailing characters in integer: " + s);
            return de_int(v);
        } catch (const std::logic_error&) {
            throw input_error("bad integer literal: " + s);
        }
    }
    Poly acc = poly_zero(dom.p);
    bool neg = false;
    while (i < s.size()) {
        detail::skip_ws(s, i);
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = (s[i] == '-');
            ++i;
            detail::skip_ws(s, i);
        }
        std::uint64_t coeff = 1;
        bool saw_num = false, saw_x = false;
        std::uint64_t expo = 0;
        if (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) {
            saw_num = true;
            coeff = 0;
            while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                coeff = coeff * 10 + (s[i++] - '0');
        }
        detail::skip_ws(s, i);
        if (i < s.size() && s[i] == '*') { ++i; detail::skip_ws(s, i); }
        if (i < s.size() && s[i] == 'x') {
            saw_x = true;
            expo = 1;
            ++i;
            detail::skip_ws(s, i);
            if (i < s.size() && s[i] == '^') {
                ++i;
                detail::skip_ws(s, i);
                if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i])))
                    throw input_error("bad exponent in polynomial: " + s);
                expo = 0;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i])))
                    expo = expo * 10 + (s[i++] - '0');
            }
        }
        if (!saw_num && !saw_x) throw input_error("bad polynomial literal: " + s);
        if (expo > 64) throw resource_error("polynomial exponent too large");
        std::uint32_t c = static_cast<std::uint32_t>(coeff % dom.p);
        if (neg) c = (dom.p - c) % dom.p;
        Poly term{dom.p, {}};
        term.c.assign(expo + 1, 0);
        term.c[expo] = c;
        term.trim();
        acc = poly_add(acc, term);
        neg = false;
        detail::skip_ws(s, i);
    }
    return de_poly(acc);
}

// Total order on canonical elements, used for deterministic tie-breaking
// and sorted prime sets.
inline bool de_less(const DElem& a, const DElem& b) {
    de_check_same(a, b);
    if (a.is_int()) return a.n < b.n;
    if (a.f.deg() != b.f.deg()) return a.f.deg() < b.f.deg();
    for (int i = a.f.deg(); i >= 0; --i)
        if (a.f.c[i] != b.f.c[i]) return a.f.c[i] < b.f.c[i];
    return false;
}

struct DElemLess {
    bool operator()(const DElem& a, const DElem& b) const { return de_less(a, b); }
};

} // namespace ttsupp
