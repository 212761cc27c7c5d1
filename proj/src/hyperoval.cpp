// SPDX-License-Identifier: Apache-2.0

#include "nongrs/hyperoval.hpp"

#include <numeric>
#include <stdexcept>

#include "nongrs/code.hpp"

namespace nongrs {

namespace {

void require_char2(const Field& f) {
    if (f.characteristic() != 2) throw std::invalid_argument("hyperovals need a field of characteristic 2");
}

}  // namespace

FieldMatrix build_Go(const Field& f, std::span<const Elem> table) {
    require_char2(f);
    const std::uint64_t q = f.order();
    if (table.size() != q) throw std::invalid_argument("function table must have one value per field element");
    FieldMatrix g(f, 3, q + 2);
    for (Elem a = 0; a < q; ++a) {
        if (!f.contains(table[a])) throw std::invalid_argument("function table entry is not a field element");
        g(0, a) = 1;
        g(1, a) = a;
        g(2, a) = table[a];
    }
    g(1, q) = 1;
    g(2, q + 1) = 1;
    return g;
}

Certificate is_o_polynomial_bruteforce(const Field& f, std::span<const Elem> table, Exec exec) {
    require_char2(f);
    if (f.order() > 256) throw SizeGuardError("brute-force hyperoval test is limited to q <= 256");
    const FieldMatrix g = build_Go(f, table);
    Certificate cert;
    cert.kind = CertKind::OMonomial;
    cert.params = {{"q", f.order()}, {"test", "bruteforce"}};
    const auto cols = first_singular_minor(g, exec);
    if (!cols) {
        cert.verdict = Verdict::Pass;
        return cert;
    }
    nlohmann::json pts = nlohmann::json::array();
    for (std::size_t j : *cols) pts.push_back(g.column(j));
    cert.verdict = Verdict::Fail;
    cert.witness = {{"columns", *cols}, {"points", pts}};
    return cert;
}

std::vector<Elem> monomial_table(const Field& f, std::uint64_t h) {
    std::vector<Elem> t(f.order());
    for (Elem a = 0; a < f.order(); ++a) t[a] = f.pow(a, h);
    return t;
}

Elem complete3(const Field& f, long t, Elem a, Elem b, Elem c) {
    if (t < 0) return 0;
    const Elem s1 = f.add(f.add(a, b), c);
    const Elem s2 = f.add(f.add(f.mul(a, b), f.mul(a, c)), f.mul(b, c));
    const Elem s3 = f.mul(f.mul(a, b), c);
    // S_{N} = s1 S_{N-1} - s2 S_{N-2} + s3 S_{N-3}
    Elem x3 = 0, x2 = 0, x1 = 1;
    for (long n = 1; n <= t; ++n) {
        const Elem next = f.add(f.sub(f.mul(s1, x1), f.mul(s2, x2)), f.mul(s3, x3));
        x3 = x2;
        x2 = x1;
        x1 = next;
    }
    return x1;
}

OMonomialReport is_o_monomial(const Field& f, std::uint64_t h, Exec exec) {
    require_char2(f);
    if (h < 1) throw std::invalid_argument("exponent must be >= 1");
    OMonomialReport rep;
    rep.q = f.order();
    rep.h = h;
    rep.gcd_ok = std::gcd(h, f.order() - 1) == 1;
    if (!rep.gcd_ok) {
        rep.verdict = Verdict::Fail;
        return rep;
    }
    const long t = static_cast<long>(h) - 2;
    auto make = [&f, t] {
        return [&f, t](std::span<const unsigned> c) { return complete3(f, t, c[0], c[1], c[2]) == 0; };
    };
    const auto q = static_cast<unsigned>(f.order());
    const auto bad = first_combination(q, 3, make, exec);
    if (!bad) {
        rep.verdict = Verdict::Pass;
        return rep;
    }
    std::array<unsigned, 3> c{};
    unrank_combination(*bad, q, c);
    rep.verdict = Verdict::Fail;
    rep.witness = std::array<Elem, 3>{c[0], c[1], c[2]};
    return rep;
}

std::vector<OMonomialReport> enumerate_o_monomials(unsigned m, Exec exec) {
    if (m < 1 || m > 8) throw std::invalid_argument("enumeration needs 1 <= m <= 8");
    const Field f(FieldSpec::gf2m(m));
    std::vector<OMonomialReport> out;
    for (std::uint64_t h = 1; h + 2 <= f.order(); ++h) out.push_back(is_o_monomial(f, h, exec));
    return out;
}

}  // namespace nongrs
