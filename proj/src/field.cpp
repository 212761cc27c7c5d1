// SPDX-License-Identifier: Apache-2.0

#include "nongrs/field.hpp"

#include <array>
#include <bit>
#include <sstream>

namespace nongrs {

namespace {

using u128 = unsigned __int128;

constexpr unsigned kMaxBinaryDegree = 32;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

int degree(std::uint64_t poly) { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t b) {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
    return a;
}

std::uint64_t clmul_reduce(std::uint64_t a, std::uint64_t b, unsigned m, std::uint64_t poly) {
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << m;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_irreducible_gf2(std::uint64_t poly) {
    const int d = degree(poly);
    if (d < 1) return false;
    for (int e = 1; e <= d / 2; ++e) {
        for (std::uint64_t g = std::uint64_t{1} << e; g < (std::uint64_t{1} << (e + 1)); ++g) {
            if (gf2_mod(poly, g) == 0) return false;
        }
    }
    return true;
}

std::uint64_t default_irreducible(unsigned m) {
    // x, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x+1
    static constexpr std::array<std::uint64_t, 9> table = {0, 0b10, 0b111, 0b1011, 0b10011, 0b100101,
                                                           0b1000011, 0b10000011, 0b100011011};
    if (m < 1 || m > 8) throw FieldError("no default irreducible polynomial for m=" + std::to_string(m));
    return table[m];
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    FieldSpec s;
    s.kind = FieldKind::Prime;
    s.p = p;
    return s;
}

FieldSpec FieldSpec::gf2m(unsigned m, std::optional<std::uint64_t> poly) {
    FieldSpec s;
    s.kind = FieldKind::Binary;
    s.m = m;
    s.poly = poly ? *poly : default_irreducible(m);
    return s;
}

std::uint64_t FieldSpec::order() const {
    return kind == FieldKind::Prime ? p : (std::uint64_t{1} << m);
}

std::string FieldSpec::describe() const {
    std::ostringstream os;
    if (kind == FieldKind::Prime) {
        os << "F_" << p;
    } else {
        os << "F_2^" << m << " (poly 0x" << std::hex << poly << ")";
    }
    return os.str();
}

struct Field::Impl {
    FieldSpec spec;
    std::uint64_t q = 0;
    // prime fields up to kTableLimit
    std::vector<Elem> inv_table;
    // binary fields up to kTableLimit: log/antilog over a primitive element
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;

    Elem bmul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (!exp.empty()) return exp[log[a] + log[b]];
        return clmul_reduce(a, b, spec.m, spec.poly);
    }
};

Field::Field(const FieldSpec& spec) {
    auto impl = std::make_shared<Impl>();
    impl->spec = spec;
    if (spec.kind == FieldKind::Prime) {
        if (!is_prime(spec.p)) throw FieldError("modulus " + std::to_string(spec.p) + " is not prime");
        impl->q = spec.p;
        if (spec.p <= kTableLimit) {
            impl->inv_table.assign(spec.p, 0);
            for (Elem a = 1; a < spec.p; ++a) impl->inv_table[a] = powmod(a, spec.p - 2, spec.p);
        }
    } else {
        if (spec.m < 1 || spec.m > kMaxBinaryDegree)
            throw FieldError("extension degree must lie in 1.." + std::to_string(kMaxBinaryDegree));
        if (degree(spec.poly) != static_cast<int>(spec.m))
            throw FieldError("polynomial degree does not match m=" + std::to_string(spec.m));
        if (!is_irreducible_gf2(spec.poly)) throw FieldError("polynomial is reducible over F_2");
        impl->q = std::uint64_t{1} << spec.m;
        if (impl->q <= kTableLimit) {
            const std::uint64_t q = impl->q;
            // find a generator of the multiplicative group
            for (Elem g = 1; g < q; ++g) {
                std::vector<std::uint32_t> log(q, 0);
                std::vector<Elem> exp(2 * (q - 1));
                Elem x = 1;
                bool full = true;
                for (std::uint64_t i = 0; i < q - 1; ++i) {
                    if (i > 0 && x == 1) {
                        full = false;
                        break;
                    }
                    exp[i] = x;
                    log[x] = static_cast<std::uint32_t>(i);
                    x = clmul_reduce(x, g, spec.m, spec.poly);
                }
                if (!full) continue;
                for (std::uint64_t i = q - 1; i < 2 * (q - 1); ++i) exp[i] = exp[i - (q - 1)];
                impl->log = std::move(log);
                impl->exp = std::move(exp);
                break;
            }
        }
    }
    order_ = impl->q;
    impl_ = std::move(impl);
}

const FieldSpec& Field::spec() const { return impl_->spec; }

std::uint64_t Field::characteristic() const { return kind() == FieldKind::Prime ? impl_->spec.p : 2; }

Elem Field::add(Elem a, Elem b) const {
    if (kind() == FieldKind::Binary) return a ^ b;
    const std::uint64_t p = order_;
    return a >= p - b ? a - (p - b) : a + b;
}

Elem Field::sub(Elem a, Elem b) const {
    if (kind() == FieldKind::Binary) return a ^ b;
    return a >= b ? a - b : a + (order_ - b);
}

Elem Field::neg(Elem a) const {
    if (kind() == FieldKind::Binary || a == 0) return a;
    return order_ - a;
}

Elem Field::mul(Elem a, Elem b) const {
    if (kind() == FieldKind::Binary) return impl_->bmul(a, b);
    if (order_ <= kTableLimit) return a * b % order_;
    return mulmod(a, b, order_);
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (kind() == FieldKind::Prime) {
        if (!impl_->inv_table.empty()) return impl_->inv_table[a];
        return powmod(a, order_ - 2, order_);
    }
    if (!impl_->exp.empty()) {
        const std::uint64_t l = impl_->log[a];
        return impl_->exp[(order_ - 1 - l) % (order_ - 1)];
    }
    return pow(a, order_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= (order_ - 1);
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::pow(Elem a, std::string_view decimal_exponent) const {
    if (decimal_exponent.empty()) throw std::invalid_argument("empty exponent");
    bool is_zero = true;
    u128 reduced = 0;
    const std::uint64_t group = order_ - 1;
    for (char c : decimal_exponent) {
        if (c < '0' || c > '9') throw std::invalid_argument("exponent must be a non-negative decimal integer");
        if (c != '0') is_zero = false;
        reduced = (reduced * 10 + static_cast<unsigned>(c - '0')) % group;
    }
    if (a == 0) return is_zero ? 1 : 0;
    return pow(a, static_cast<std::uint64_t>(reduced));
}

Elem Field::from_int(std::int64_t v) const {
    if (kind() == FieldKind::Prime) {
        const auto p = static_cast<__int128>(order_);
        __int128 r = static_cast<__int128>(v) % p;
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }
    if (v < 0 || static_cast<std::uint64_t>(v) >= order_)
        throw FieldError("value " + std::to_string(v) + " is not an element of " + spec().describe());
    return static_cast<Elem>(v);
}

std::vector<Elem> Field::elements() const {
    if (order_ > (std::uint64_t{1} << 32)) throw FieldError("field too large to enumerate");
    std::vector<Elem> out(order_);
    for (Elem a = 0; a < order_; ++a) out[a] = a;
    return out;
}

FieldElement Field::element(Elem v) const { return FieldElement(*this, v); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

bool operator==(const Field& a, const Field& b) { return a.impl_ == b.impl_ || a.spec() == b.spec(); }

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_.contains(value_))
        throw FieldError("value " + std::to_string(value_) + " is not reduced in " + field_.spec().describe());
}

void FieldElement::same_field(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw FieldError("arithmetic between elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    same_field(o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    same_field(o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    same_field(o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    same_field(o);
    return {field_, field_.div(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }

FieldElement invert(const FieldElement& a) { return {a.field(), a.field().inv(a.value())}; }

FieldElement power(const FieldElement& a, std::uint64_t e) { return {a.field(), a.field().pow(a.value(), e)}; }

}  // namespace nongrs
