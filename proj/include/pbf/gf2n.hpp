#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace pbf {

// Element of GF(2^n) in the polynomial basis, n-bit coefficient word.
// Plain value; all arithmetic lives on FieldSpec.
struct Fe {
    uint32_t v = 0;

    friend bool operator==(Fe a, Fe b) { return a.v == b.v; }
    friend bool operator!=(Fe a, Fe b) { return a.v != b.v; }
    friend bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

// GF(2^n) for even n, 4 <= n <= 30, with a verified irreducible modulus.
// Immutable after construction (tables included); copies share the tables.
// Conventions: 0^{-1} = 0; addition is XOR of coefficient words.
class FieldSpec {
public:
    // Throws std::invalid_argument if n is odd / out of range or poly is not
    // a monic irreducible of degree exactly n.
    FieldSpec(unsigned n, uint32_t poly);

    // Fixed default modulus per supported n (lowest-weight primitive).
    static FieldSpec with_default_poly(unsigned n);
    static bool has_default_poly(unsigned n);

    unsigned n() const;
    uint32_t poly() const;
    std::size_t size() const; // 2^n

    Fe element(uint32_t bits) const; // range-checked
    Fe add(Fe a, Fe b) const { return Fe{a.v ^ b.v}; }
    Fe mul(Fe a, Fe b) const;
    Fe sqr(Fe a) const { return mul(a, a); }
    Fe pow(Fe a, uint64_t e) const;
    Fe inv(Fe a) const; // a^(2^n - 2); maps 0 to 0
    int trace(Fe a) const;

    // The fixed order-3 element g^((2^n-1)/3), g = least generator.
    Fe omega() const;

    // Least element with trace 1 (used when a trace-odd offset is needed).
    Fe trace_one_element() const;

    // Roots {z, z+1} of z^2 + z = c, or nullopt when trace(c) = 1.
    std::optional<std::pair<Fe, Fe>> solve_artin_schreier(Fe c) const;

    // Zero-padded lowercase hex, ceil(n/4) digits.
    std::string element_hex(Fe a) const;

    friend bool operator==(const FieldSpec &a, const FieldSpec &b);
    friend bool operator!=(const FieldSpec &a, const FieldSpec &b) { return !(a == b); }

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

} // namespace pbf
