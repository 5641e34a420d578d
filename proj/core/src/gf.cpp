#include "starcode/gf.hpp"

#include <algorithm>
#include <string>

namespace starcode {

const char* errc_name(errc code) {
    switch (code) {
        case errc::not_prime: return "NotPrime";
        case errc::reducible_polynomial: return "ReduciblePolynomial";
        case errc::unsupported_order: return "UnsupportedOrder";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::field_mismatch: return "FieldMismatch";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::empty_list: return "EmptyList";
        case errc::dependent_seed: return "DependentSeed";
        case errc::precondition_violated: return "PreconditionViolated";
        case errc::zero_code: return "ZeroCode";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::zero_product: return "ZeroProduct";
        case errc::support_condition_violated: return "SupportConditionViolated";
        case errc::invalid_params: return "InvalidParams";
        case errc::too_long: return "TooLong";
        case errc::duplicate_points: return "DuplicatePoints";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// Default modulus per prime power q <= 256 with m >= 2: the lexicographically
// smallest monic irreducible of degree m over GF(p), in the digit encoding.
struct DefaultModulus {
    std::uint32_t q;
    std::uint32_t encoding;
};

constexpr DefaultModulus kDefaultModuli[] = {
    {4, 7},     // x^2+x+1
    {8, 11},    // x^3+x+1
    {9, 10},    // x^2+1
    {16, 19},   // x^4+x+1
    {25, 27},   // x^2+2
    {27, 34},   // x^3+2x+1
    {32, 37},   // x^5+x^2+1
    {49, 50},   // x^2+1
    {64, 67},   // x^6+x+1
    {81, 86},   // x^4+x+2
    {121, 122}, // x^2+1
    {125, 131}, // x^3+x+1
    {128, 131}, // x^7+x+1
    {169, 171}, // x^2+2
    {243, 250}, // x^5+2x+1
    {256, 283}, // x^8+x^4+x^3+x+1
};

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_inv_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat; p prime, a != 0
    std::uint64_t r = 1, b = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// a mod b over GF(p); b nonzero
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    std::size_t db = b.size() - 1;
    std::uint32_t lead_inv = mod_inv_prime(b[db], p);
    while (a.size() > db) {
        std::size_t da = a.size() - 1;
        std::uint64_t f = std::uint64_t(a[da]) * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            std::uint64_t v = a[da - db + i] + std::uint64_t(p) * p - f * b[i] % p;
            a[da - db + i] = static_cast<std::uint32_t>(v % p);
        }
        trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..m/2.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        // odometer over the d low coefficients
        while (true) {
            Poly r = poly_mod(f, g, p);
            if (poly_is_zero(r)) return false;
            std::size_t i = 0;
            while (i < d && g[i] == p - 1) { g[i] = 0; ++i; }
            if (i == d) break;
            ++g[i];
        }
    }
    return true;
}

std::vector<Field::Elem> decode_digits(std::uint32_t value, std::uint32_t p) {
    std::vector<Field::Elem> digits;
    while (value) {
        digits.push_back(static_cast<Field::Elem>(value % p));
        value /= p;
    }
    return digits;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
    if (!is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) raise(errc::invalid_params, "field degree m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) raise(errc::unsupported_order, "q = p^m exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (m >= 2) {
        const DefaultModulus* hit = nullptr;
        for (const auto& entry : kDefaultModuli)
            if (entry.q == q_) hit = &entry;
        if (!hit)
            raise(errc::unsupported_order,
                  "no default modulus for q = " + std::to_string(q_) + "; supply one explicitly");
        auto digits = decode_digits(hit->encoding, p_);
        modulus_.assign(digits.begin(), digits.end());
        modulus_encoding_ = hit->encoding;
    }
    init_tables();
}

Field::Field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus)
    : p_(p), m_(m) {
    if (!is_prime(p)) raise(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) raise(errc::invalid_params, "field degree m must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > 65536) raise(errc::unsupported_order, "q = p^m exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    Poly f(modulus.begin(), modulus.end());
    trim(f);
    if (f.size() != m + 1 || f.back() != 1)
        raise(errc::invalid_params, "modulus must be monic of degree m");
    for (auto c : f)
        if (c >= p) raise(errc::invalid_params, "modulus coefficient out of range");
    if (m >= 2) {
        if (!poly_irreducible(f, p))
            raise(errc::reducible_polynomial, "modulus is reducible over GF(p)");
        modulus_.assign(f.begin(), f.end());
        std::uint64_t enc = 0;
        for (std::size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
        modulus_encoding_ = static_cast<std::uint32_t>(enc);
    }
    // m == 1: any monic linear polynomial is accepted; arithmetic is mod p
    // and the stored modulus stays the identity convention.
    init_tables();
}

void Field::init_tables() {
    if (q_ > 256) return;
    add_table_.resize(std::size_t(q_) * q_);
    mul_table_.resize(std::size_t(q_) * q_);
    inv_table_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        for (std::uint32_t b = 0; b < q_; ++b) {
            add_table_[std::size_t(a) * q_ + b] = add_nocache(Elem(a), Elem(b));
            Elem prod = mul_nocache(Elem(a), Elem(b));
            mul_table_[std::size_t(a) * q_ + b] = prod;
            if (prod == 1) inv_table_[a] = Elem(b);
        }
    }
    tabled_ = true;
}

Field::Elem Field::add_nocache(Elem a, Elem b) const {
    if (m_ == 1) return Elem((std::uint32_t(a) + b) % p_);
    std::uint32_t result = 0, scale = 1;
    std::uint32_t x = a, y = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t da = x % p_, db = y % p_;
        x /= p_;
        y /= p_;
        result += (da + db) % p_ * scale;
        scale *= p_;
    }
    return Elem(result);
}

Field::Elem Field::mul_nocache(Elem a, Elem b) const {
    if (m_ == 1) return Elem(std::uint64_t(a) * b % p_);
    // polynomial product then reduction modulo the modulus
    std::vector<std::uint32_t> da(m_), db(m_);
    {
        std::uint32_t x = a, y = b;
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = x % p_;
            db[i] = y % p_;
            x /= p_;
            y /= p_;
        }
    }
    std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i) {
        if (!da[i]) continue;
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    }
    // reduce degrees m..2m-2: x^m = -(modulus minus leading term)
    for (std::size_t d = prod.size(); d-- > m_;) {
        std::uint64_t c = prod[d] % p_;
        prod[d] = 0;
        if (!c) continue;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t sub = c * modulus_[i] % p_;
            prod[d - m_ + i] += std::uint64_t(p_) - sub;
        }
    }
    std::uint32_t result = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        result += static_cast<std::uint32_t>(prod[i] % p_) * scale;
        scale *= p_;
    }
    return Elem(result);
}

Field::Elem Field::add(Elem a, Elem b) const {
    if (tabled_) return add_table_[std::size_t(a) * q_ + b];
    return add_nocache(a, b);
}

Field::Elem Field::neg(Elem a) const {
    if (m_ == 1) return a == 0 ? Elem(0) : Elem(p_ - a);
    std::uint32_t result = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint32_t d = x % p_;
        x /= p_;
        result += (d ? p_ - d : 0) * scale;
        scale *= p_;
    }
    return Elem(result);
}

Field::Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Field::Elem Field::mul(Elem a, Elem b) const {
    if (tabled_) return mul_table_[std::size_t(a) * q_ + b];
    return mul_nocache(a, b);
}

Field::Elem Field::inv(Elem a) const {
    if (a == 0) raise(errc::division_by_zero, "inverse of zero");
    if (tabled_) return inv_table_[a];
    return pow(a, q_ - 2);  // a^(q-2) = a^{-1} in GF(q)*
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m) {
    return std::make_shared<const Field>(p, m);
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m, const std::vector<std::uint32_t>& modulus) {
    return std::make_shared<const Field>(p, m, modulus);
}

FieldPtr make_field_of_order(std::uint32_t q, std::optional<std::uint32_t> poly_encoding) {
    if (q < 2) raise(errc::not_prime, "field order must be >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    std::uint32_t m = 0;
    std::uint64_t acc = 1;
    while (acc < q) {
        acc *= p;
        ++m;
    }
    if (acc != q) raise(errc::not_prime, "q = " + std::to_string(q) + " is not a prime power");
    if (!poly_encoding) return make_field(p, m);
    std::vector<std::uint32_t> digits;
    std::uint32_t v = *poly_encoding;
    while (v) {
        digits.push_back(v % p);
        v /= p;
    }
    return make_field(p, m, digits);
}

}  // namespace starcode
