#include "pbf/gf2n.hpp"

#include <stdexcept>
#include <vector>

namespace pbf {

namespace {

constexpr uint32_t kNoRoot = 0xffffffffu;

int poly_degree(uint64_t p) {
    return p ? 63 - __builtin_clzll(p) : -1;
}

// Carry-less product of two GF(2)[x] polynomials (degrees <= 30).
uint64_t poly_mul(uint64_t a, uint64_t b) {
    uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

uint64_t poly_mod(uint64_t a, uint64_t m) {
    int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
        a ^= m << (d - dm);
    return a;
}

uint64_t poly_mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return poly_mod(poly_mul(a, b), m);
}

uint64_t poly_gcd(uint64_t a, uint64_t b) {
    while (b) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f (monic, degree n) is irreducible iff x^(2^n) = x mod f and
// gcd(f, x^(2^(n/p)) - x) = 1 for every prime p | n.
bool poly_irreducible(uint64_t f, unsigned n) {
    std::vector<unsigned> prime_divs;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            prime_divs.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) prime_divs.push_back(m);

    uint64_t t = 2; // the polynomial x
    for (unsigned k = 1; k <= n; ++k) {
        t = poly_mulmod(t, t, f); // t = x^(2^k) mod f
        for (unsigned p : prime_divs)
            if (k == n / p && poly_gcd(f, t ^ 2) != 1) return false;
    }
    return t == 2;
}

std::vector<uint64_t> prime_factors(uint64_t m) {
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) out.push_back(m);
    return out;
}

struct DefaultPoly {
    unsigned n;
    uint32_t poly;
};

// Lowest-weight primitive moduli. 6..14 are the ones the toolkit's table
// anchors were computed with; 4 covers small exhaustive tests.
constexpr DefaultPoly kDefaults[] = {
    {4, 0x13},     // x^4 + x + 1
    {6, 0x43},     // x^6 + x + 1
    {8, 0x11d},    // x^8 + x^4 + x^3 + x^2 + 1
    {10, 0x409},   // x^10 + x^3 + 1
    {12, 0x1053},  // x^12 + x^6 + x^4 + x + 1
    {14, 0x4443},  // x^14 + x^10 + x^6 + x + 1
};

} // namespace

struct FieldSpec::Impl {
    unsigned n;
    uint32_t poly;
    std::size_t size;
    uint32_t trace_mask; // trace(a) = parity(a & trace_mask)
    Fe omega;
    Fe trace_one;
    std::vector<uint32_t> as_root; // c -> even root of z^2+z=c, kNoRoot if none

    Fe mul(Fe a, Fe b) const {
        uint32_t r = 0, x = a.v, y = b.v;
        while (y) {
            if (y & 1) r ^= x;
            y >>= 1;
            x <<= 1;
            if ((x >> n) & 1) x ^= poly;
        }
        return Fe{r};
    }

    Fe pow(Fe a, uint64_t e) const {
        Fe r{1}, base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
};

FieldSpec::FieldSpec(unsigned n, uint32_t poly) {
    if (n < 4 || n > 30 || n % 2 != 0)
        throw std::invalid_argument("FieldSpec: n must be even and in [4, 30]");
    if (poly_degree(poly) != static_cast<int>(n))
        throw std::invalid_argument("FieldSpec: poly must be monic of degree n");
    if (!poly_irreducible(poly, n))
        throw std::invalid_argument("FieldSpec: poly is not irreducible");

    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->poly = poly;
    impl->size = std::size_t(1) << n;

    // trace(a) = sum of a^(2^i); linear, so a mask over basis elements suffices.
    impl->trace_mask = 0;
    for (unsigned i = 0; i < n; ++i) {
        Fe e{uint32_t(1) << i};
        Fe acc = e, cur = e;
        for (unsigned k = 1; k < n; ++k) {
            cur = impl->mul(cur, cur);
            acc = Fe{acc.v ^ cur.v};
        }
        if (acc.v == 1) impl->trace_mask |= uint32_t(1) << i;
        // acc is 0 or 1 for a valid modulus
    }
    impl->trace_one = Fe{uint32_t(1) << __builtin_ctz(impl->trace_mask)};

    // z^2 + z is 2-to-1 onto the trace-0 half; keep the even root (z, z+1
    // differ exactly in bit 0).
    impl->as_root.assign(impl->size, kNoRoot);
    for (uint32_t z = 0; z < impl->size; ++z) {
        uint32_t c = impl->mul(Fe{z}, Fe{z}).v ^ z;
        impl->as_root[c] = z & ~uint32_t(1);
    }

    // omega = g^((2^n-1)/3) for the least generator g; n even makes 3 a
    // divisor of the group order.
    uint64_t order = impl->size - 1;
    auto primes = prime_factors(order);
    Fe gen{0};
    for (uint32_t g = 2; g < impl->size; ++g) {
        bool ok = true;
        for (uint64_t p : primes)
            if (impl->pow(Fe{g}, order / p).v == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen = Fe{g};
            break;
        }
    }
    impl->omega = impl->pow(gen, order / 3);

    impl_ = std::move(impl);
}

FieldSpec FieldSpec::with_default_poly(unsigned n) {
    for (const auto &d : kDefaults)
        if (d.n == n) return FieldSpec(n, d.poly);
    throw std::invalid_argument("FieldSpec: no default modulus for n=" + std::to_string(n) +
                                "; pass one explicitly");
}

bool FieldSpec::has_default_poly(unsigned n) {
    for (const auto &d : kDefaults)
        if (d.n == n) return true;
    return false;
}

unsigned FieldSpec::n() const { return impl_->n; }
uint32_t FieldSpec::poly() const { return impl_->poly; }
std::size_t FieldSpec::size() const { return impl_->size; }

Fe FieldSpec::element(uint32_t bits) const {
    if (bits >= impl_->size) throw std::invalid_argument("FieldSpec: element out of range");
    return Fe{bits};
}

Fe FieldSpec::mul(Fe a, Fe b) const { return impl_->mul(a, b); }
Fe FieldSpec::pow(Fe a, uint64_t e) const { return impl_->pow(a, e); }

Fe FieldSpec::inv(Fe a) const {
    return impl_->pow(a, impl_->size - 2);
}

int FieldSpec::trace(Fe a) const {
    return __builtin_parity(a.v & impl_->trace_mask);
}

Fe FieldSpec::omega() const { return impl_->omega; }
Fe FieldSpec::trace_one_element() const { return impl_->trace_one; }

std::optional<std::pair<Fe, Fe>> FieldSpec::solve_artin_schreier(Fe c) const {
    uint32_t r = impl_->as_root[c.v];
    if (r == kNoRoot) return std::nullopt;
    return std::make_pair(Fe{r}, Fe{r ^ 1u});
}

std::string FieldSpec::element_hex(Fe a) const {
    unsigned digits = (impl_->n + 3) / 4;
    static const char *hexc = "0123456789abcdef";
    std::string s(digits, '0');
    uint32_t v = a.v;
    for (unsigned i = 0; i < digits; ++i) {
        s[digits - 1 - i] = hexc[v & 0xf];
        v >>= 4;
    }
    return s;
}

bool operator==(const FieldSpec &a, const FieldSpec &b) {
    return a.impl_->n == b.impl_->n && a.impl_->poly == b.impl_->poly;
}

} // namespace pbf
