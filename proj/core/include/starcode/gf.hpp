#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "starcode/errors.hpp"

namespace starcode {

/// A finite field GF(p^m), p prime, q = p^m <= 2^16.
///
/// Elements are integers in [0, q) read as base-p digit strings: digit i is
/// the coefficient of x^i, so 0 is the additive and 1 the multiplicative
/// identity. For m >= 2 arithmetic is polynomial arithmetic modulo a monic
/// irreducible modulus of degree m; for m == 1 it is plain arithmetic mod p.
///
/// Immutable after construction and safe to share across threads. For
/// q <= 256 full operation tables are precomputed at construction.
class Field {
public:
    using Elem = std::uint16_t;

    /// Builds GF(p^m) with the default modulus from the built-in table
    /// (the lexicographically smallest monic irreducible, by the digit
    /// encoding). Throws unsupported_order when m >= 2 and q > 256.
    Field(std::uint32_t p, std::uint32_t m);

    /// Builds GF(p^m) with an explicit modulus given as little-endian
    /// coefficients (constant term first, leading coefficient last).
    /// The modulus must be monic of degree m and irreducible over GF(p);
    /// irreducibility is checked by trial division against all monic
    /// polynomials of degree <= m/2.
    Field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Modulus in the same digit encoding as elements, including the leading
    /// coefficient (e.g. x^2+x+1 over GF(2) encodes as 7). Zero for m == 1.
    std::uint32_t modulus_encoding() const { return modulus_encoding_; }

    /// Two fields are the same when p, m and (for m >= 2) the modulus agree.
    bool same(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ &&
               (m_ == 1 || modulus_encoding_ == other.modulus_encoding_);
    }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws division_by_zero for a == 0
    Elem pow(Elem a, std::uint64_t e) const;

    bool valid(Elem a) const { return a < q_; }

private:
    void init_tables();

    Elem add_nocache(Elem a, Elem b) const;
    Elem mul_nocache(Elem a, Elem b) const;

    std::uint32_t p_, m_, q_;
    std::vector<Elem> modulus_;  // little-endian digits, size m+1; empty for m == 1
    std::uint32_t modulus_encoding_ = 0;

    // q <= 256 only: flat q*q tables and an inverse table
    bool tabled_ = false;
    std::vector<Elem> add_table_, mul_table_, inv_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Shared-field factories. Fields are immutable, so one instance is shared
/// by every vector, matrix and code built over it.
FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1);
FieldPtr make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus);

/// Builds a field from its order q (factored as p^m) and an optional modulus
/// in the integer digit encoding, as used by the `q=.. poly=..` code-file
/// header. Throws not_prime when q is not a prime power.
FieldPtr make_field_of_order(std::uint32_t q, std::optional<std::uint32_t> poly_encoding = std::nullopt);

bool is_prime(std::uint32_t n);

}  // namespace starcode
