// SPDX-License-Identifier: Apache-2.0

#include "nongrs/json_io.hpp"

#include <stdexcept>

namespace nongrs {

namespace {

constexpr std::pair<Verdict, const char*> kVerdicts[] = {
    {Verdict::Pass, "pass"}, {Verdict::Fail, "fail"}, {Verdict::Inconclusive, "inconclusive"}};

constexpr std::pair<CertKind, const char*> kKinds[] = {
    {CertKind::Mds, "mds"},
    {CertKind::NonGrs, "non-grs"},
    {CertKind::Distance, "distance"},
    {CertKind::Condition, "condition"},
    {CertKind::OMonomial, "o-monomial"},
    {CertKind::Parity, "parity"},
    {CertKind::CoveringRadius, "covering-radius"},
};

Field field_of_params(const json& j) {
    if (j.contains("m")) {
        const auto m = j.at("m").get<unsigned>();
        std::optional<std::uint64_t> poly;
        if (j.contains("poly")) poly = j.at("poly").get<std::uint64_t>();
        Field f(FieldSpec::gf2m(m, poly));
        if (j.contains("q") && j.at("q").get<std::uint64_t>() != f.order())
            throw std::invalid_argument("q does not match m");
        return f;
    }
    return Field(FieldSpec::prime(j.at("q").get<std::uint64_t>()));
}

}  // namespace

std::string to_string(Verdict v) {
    for (auto [e, s] : kVerdicts)
        if (e == v) return s;
    return "?";
}

std::string to_string(CertKind k) {
    for (auto [e, s] : kKinds)
        if (e == k) return s;
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    for (auto [e, name] : kVerdicts)
        if (s == name) return e;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

CertKind cert_kind_from_string(const std::string& s) {
    for (auto [e, name] : kKinds)
        if (s == name) return e;
    throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

void to_json(json& j, const Certificate& c) {
    j = {{"verdict", to_string(c.verdict)}, {"kind", to_string(c.kind)}, {"params", c.params}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
}

void from_json(const json& j, Certificate& c) {
    c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    c.kind = cert_kind_from_string(j.at("kind").get<std::string>());
    c.params = j.value("params", json::object());
    c.witness = j.contains("witness") ? j.at("witness") : json();
}

json field_spec_to_json(const FieldSpec& s) {
    if (s.kind == FieldKind::Prime) return {{"kind", "prime"}, {"p", s.p}};
    return {{"kind", "gf2m"}, {"m", s.m}, {"poly", s.poly}};
}

FieldSpec field_spec_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    if (kind == "gf2m") {
        std::optional<std::uint64_t> poly;
        if (j.contains("poly")) poly = j.at("poly").get<std::uint64_t>();
        return FieldSpec::gf2m(j.at("m").get<unsigned>(), poly);
    }
    throw FieldError("unknown field kind '" + kind + "'");
}

json matrix_to_json(const FieldMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        rows.push_back(std::vector<Elem>(r.begin(), r.end()));
    }
    return {{"field", field_spec_to_json(m.field().spec())}, {"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

FieldMatrix matrix_from_json(const json& j) {
    const Field f(field_spec_from_json(j.at("field")));
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto data = j.at("data").get<std::vector<std::vector<Elem>>>();
    if (data.size() != rows) throw std::invalid_argument("matrix row count mismatch");
    std::vector<Elem> flat;
    for (const auto& r : data) {
        if (r.size() != cols) throw std::invalid_argument("matrix column count mismatch");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return FieldMatrix(f, rows, cols, std::move(flat));
}

json evalset_to_json(const EvalSet& s) {
    return {{"field", field_spec_to_json(s.field().spec())},
            {"points", std::vector<Elem>(s.points().begin(), s.points().end())}};
}

EvalSet evalset_from_json(const json& j) {
    return EvalSet(Field(field_spec_from_json(j.at("field"))), j.at("points").get<std::vector<Elem>>());
}

json params_to_json(const ConstructionParams& p) {
    json j = {{"family", to_string(p.family)},
              {"q", p.field().order()},
              {"alphas", std::vector<Elem>(p.alphas.points().begin(), p.alphas.points().end())},
              {"k", p.k},
              {"r", p.r}};
    if (p.field().kind() == FieldKind::Binary) {
        j["m"] = p.field().spec().m;
        j["poly"] = p.field().spec().poly;
    }
    if (p.delta) j["delta"] = *p.delta;
    return j;
}

ConstructionParams params_from_json(const json& j) {
    ConstructionParams p{family_from_string(j.at("family").get<std::string>()),
                         EvalSet(field_of_params(j), j.at("alphas").get<std::vector<Elem>>()),
                         j.at("k").get<unsigned>(), j.at("r").get<unsigned>(), std::nullopt};
    if (j.contains("delta")) p.delta = j.at("delta").get<Elem>();
    return p;
}

json omonomial_to_json(const OMonomialReport& r) {
    json j = {{"q", r.q}, {"h", r.h}, {"gcdOk", r.gcd_ok}, {"verdict", r.passed() ? "o-monomial" : "not"}};
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

OMonomialReport omonomial_from_json(const json& j) {
    OMonomialReport r;
    r.q = j.at("q").get<std::uint64_t>();
    r.h = j.at("h").get<std::uint64_t>();
    r.gcd_ok = j.at("gcdOk").get<bool>();
    const auto v = j.at("verdict").get<std::string>();
    if (v != "o-monomial" && v != "not") throw std::invalid_argument("unknown o-monomial verdict '" + v + "'");
    r.verdict = v == "o-monomial" ? Verdict::Pass : Verdict::Fail;
    if (j.contains("witness")) r.witness = j.at("witness").get<std::array<Elem, 3>>();
    return r;
}

}  // namespace nongrs
