// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_FIELD_HPP
#define NONGRS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nongrs {

/// Canonical representative of a field element: an integer in [0,p) for
/// prime fields, an m-bit polynomial mask for F_{2^m}.
using Elem = std::uint64_t;

enum class FieldKind { Prime, Binary };

/// Raised for invalid field descriptions and for mixing elements of
/// different fields.
class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
    FieldKind kind = FieldKind::Prime;
    std::uint64_t p = 0;     // prime modulus (Prime)
    unsigned m = 0;          // extension degree (Binary)
    std::uint64_t poly = 0;  // irreducible polynomial mask of degree m (Binary)

    static FieldSpec prime(std::uint64_t p);
    /// F_{2^m}; without `poly` the default table entry for m is used.
    static FieldSpec gf2m(unsigned m, std::optional<std::uint64_t> poly = std::nullopt);

    std::uint64_t order() const;
    std::string describe() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Irreducibility over F_2 by trial division with every polynomial of
/// degree 1..deg/2.
bool is_irreducible_gf2(std::uint64_t poly);

/// Lexicographically smallest irreducible polynomial of degree m, m in 1..8.
std::uint64_t default_irreducible(unsigned m);

class FieldElement;

/// Immutable handle to F_p or F_{2^m}. Copies share the same tables.
///
/// Arithmetic works on raw `Elem` values for use in inner loops; callers
/// are responsible for passing reduced values. `FieldElement` is the
/// checked counterpart.
class Field {
public:
    /// Validates the spec (primality, irreducibility) and builds lookup
    /// tables for small fields.
    explicit Field(const FieldSpec& spec);

    const FieldSpec& spec() const;
    FieldKind kind() const { return spec().kind; }
    std::uint64_t order() const { return order_; }
    std::uint64_t characteristic() const;

    bool contains(Elem a) const { return a < order_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// 0^0 = 1; for a != 0 the exponent is reduced mod (q-1).
    Elem pow(Elem a, std::uint64_t e) const;
    /// Same as pow with a non-negative decimal exponent of any length.
    Elem pow(Elem a, std::string_view decimal_exponent) const;

    /// Image of an integer: reduced mod p, or taken as a bit mask for F_{2^m}.
    Elem from_int(std::int64_t v) const;

    /// Every element in canonical order: 0, 1, ..., q-1.
    std::vector<Elem> elements() const;

    FieldElement element(Elem v) const;
    FieldElement zero() const;
    FieldElement one() const;

    friend bool operator==(const Field& a, const Field& b);

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    std::uint64_t order_ = 0;
};

/// A value together with its field. Arithmetic between elements of
/// different fields throws FieldError.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.value_ == b.value_ && a.field_ == b.field_;
    }

private:
    void same_field(const FieldElement& o) const;

    Field field_;
    Elem value_;
};

FieldElement invert(const FieldElement& a);
FieldElement power(const FieldElement& a, std::uint64_t e);

}  // namespace nongrs

#endif
