// SPDX-License-Identifier: Apache-2.0

#include "nongrs/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nongrs/hyperoval.hpp"
#include "nongrs/json_io.hpp"

namespace nongrs {

namespace {

constexpr std::pair<Verb, const char*> kVerbs[] = {
    {Verb::Build, "build"},   {Verb::Verify, "verify"},         {Verb::Check, "check"},
    {Verb::Deltas, "deltas"}, {Verb::Search, "search"},         {Verb::OMonomial, "omonomial"},
    {Verb::Covering, "covering"},
};

constexpr const char* kCheckNames[] = {"mds", "distance", "nongrs", "parity", "conditions"};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ',')) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        out.push_back(cur);
    }
    return out;
}

std::vector<Elem> parse_elems(const std::string& flag, const std::string& s) {
    std::vector<Elem> out;
    for (const auto& tok : split_list(s)) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError(flag + ": '" + tok + "' is not a non-negative integer");
        try {
            out.push_back(std::stoull(tok));
        } catch (const std::out_of_range&) {
            throw UsageError(flag + ": '" + tok + "' is out of range");
        }
    }
    return out;
}

std::vector<Condition> parse_conditions(const std::string& flag, const std::string& s) {
    std::vector<Condition> out;
    for (const auto& tok : split_list(s)) {
        try {
            out.push_back(condition_from_string(tok));
        } catch (const std::invalid_argument& e) {
            throw UsageError(flag + ": " + e.what());
        }
    }
    return out;
}

bool is_construction_verb(Verb v) {
    return v == Verb::Build || v == Verb::Verify || v == Verb::Check || v == Verb::Deltas || v == Verb::Covering;
}

std::uint64_t power_or_max(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > UINT64_MAX / q) return UINT64_MAX;
        r *= q;
    }
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string cert_item(const Certificate& c) {
    if (c.params.contains("condition")) return c.params.at("condition").get<std::string>();
    if (c.params.contains("check")) return c.params.at("check").get<std::string>();
    return to_string(c.kind);
}

Certificate parity_certificate(const ConstructionParams& p, const LinearCode& code) {
    const FieldMatrix h = build_parity(p);
    const FieldMatrix gh = code.generator() * h.transpose();
    const bool orthogonal = std::all_of(gh.data().begin(), gh.data().end(), [](Elem v) { return v == 0; });
    const bool same_space = row_space_equal(h, code.parity_check());
    Certificate cert;
    cert.kind = CertKind::Parity;
    cert.params = {{"rows", h.rows()}, {"cols", h.cols()}, {"rank", rank(h)}};
    cert.verdict = orthogonal && same_space ? Verdict::Pass : Verdict::Fail;
    if (!cert.passed()) cert.witness = {{"orthogonal", orthogonal}, {"row_space_equal", same_space}};
    return cert;
}

RunReport run_build(const CommandRequest& req) {
    const ConstructionParams p = request_params(req);
    RunReport rep;
    rep.results = {{"params", params_to_json(p)},
                   {"generator", matrix_to_json(build_generator(p))},
                   {"parity", matrix_to_json(build_parity(p))}};
    return rep;
}

RunReport run_verify(const CommandRequest& req) {
    const ConstructionParams p = request_params(req);
    const Exec exec = req.serial ? Exec::Serial : Exec::Parallel;
    const LinearCode code = build_code(p);
    RunReport rep;
    rep.results = {{"params", params_to_json(p)}, {"n", code.length()}, {"k", code.dimension()}};
    const bool distance_ok = power_or_max(p.field().order(), code.dimension()) <= req.guards.messages;
    const auto checks = req.checks.empty() ? std::vector<std::string>{"mds", "nongrs", "parity"} : req.checks;
    for (const auto& check : checks) {
        if (check == "mds") {
            Certificate c = is_mds(code, MdsMethod::Minors, req.guards, exec);
            if (distance_ok) {
                c.params["d"] = code.min_distance(req.guards, exec);
                rep.results["d"] = c.params["d"];
            }
            rep.certificates.push_back(std::move(c));
        } else if (check == "distance") {
            Certificate c = is_mds(code, MdsMethod::Distance, req.guards, exec);
            c.kind = CertKind::Distance;
            rep.results["d"] = c.params["d"];
            rep.certificates.push_back(std::move(c));
        } else if (check == "nongrs") {
            rep.certificates.push_back(non_grs_certificate(code, req.guards, exec));
        } else if (check == "parity") {
            rep.certificates.push_back(parity_certificate(p, code));
        } else if (check == "conditions") {
            for (Condition c : mds_conditions(p.family, p.r)) rep.certificates.push_back(check_condition(c, p, exec));
        }
    }
    return rep;
}

RunReport run_check(const CommandRequest& req) {
    const ConstructionParams p = request_params(req);
    const Exec exec = req.serial ? Exec::Serial : Exec::Parallel;
    RunReport rep;
    rep.results = {{"params", params_to_json(p)}};
    const auto conds = req.conditions.empty() ? mds_conditions(p.family, p.r) : req.conditions;
    for (Condition c : conds) rep.certificates.push_back(check_condition(c, p, exec));
    return rep;
}

RunReport run_deltas(const CommandRequest& req) {
    const ConstructionParams p = request_params(req);
    const DeltaSweep sweep = sweep_deltas(p, req.serial ? Exec::Serial : Exec::Parallel);
    RunReport rep;
    rep.certificates = sweep.prerequisites;
    const std::string cond = p.r == 1 ? "R1DELTA" : "HASH";
    nlohmann::json per = nlohmann::json::array();
    for (const auto& [d, ok] : sweep.per_delta) {
        per.push_back({{"delta", d}, {"pass", ok}});
        rep.rows.push_back({"delta=" + std::to_string(d), "condition", ok ? "pass" : "fail", cond});
    }
    rep.results = {{"params", params_to_json(p)}, {"condition", cond}, {"admissible", sweep.admissible}, {"per_delta", per}};
    return rep;
}

RunReport run_search(const CommandRequest& req) {
    SearchRequest s{.field = Field(*req.field)};
    s.n = req.n;
    s.k = req.k;
    s.r = req.r;
    s.strategy = req.strategy;
    s.required = req.required.empty() ? std::vector<Condition>{Condition::Star} : req.required;
    s.limit = req.limit;
    s.seed = req.seed;
    s.delta = req.delta;
    const auto found = search_eval_sets(s);
    RunReport rep;
    nlohmann::json sets = nlohmann::json::array();
    std::vector<std::string> required;
    for (Condition c : s.required) required.push_back(to_string(c));
    for (const auto& e : found) {
        std::vector<Elem> pts(e.points().begin(), e.points().end());
        sets.push_back(pts);
        rep.rows.push_back({nlohmann::json(pts).dump(), "condition", "pass", nlohmann::json(required).dump()});
    }
    rep.results = {{"sets", sets}, {"count", found.size()}, {"required", required}};
    return rep;
}

RunReport run_omonomial(const CommandRequest& req) {
    const Field f(*req.field);
    const Exec exec = req.serial ? Exec::Serial : Exec::Parallel;
    RunReport rep;
    rep.results["q"] = f.order();
    if (req.enumerate) {
        nlohmann::json reports = nlohmann::json::array();
        std::vector<std::uint64_t> pass_set;
        for (std::uint64_t h = 1; h + 2 <= f.order(); ++h) {
            const OMonomialReport r = is_o_monomial(f, h, exec);
            reports.push_back(omonomial_to_json(r));
            if (r.passed()) pass_set.push_back(h);
            rep.rows.push_back({"h=" + std::to_string(h), "o-monomial", r.passed() ? "pass" : "fail",
                                r.gcd_ok ? "" : "gcd(h,q-1)!=1"});
        }
        rep.results["reports"] = reports;
        rep.results["pass_set"] = pass_set;
        if (req.bruteforce) {
            std::vector<std::uint64_t> brute;
            for (std::uint64_t h = 1; h + 2 <= f.order(); ++h)
                if (is_o_polynomial_bruteforce(f, monomial_table(f, h), exec).passed()) brute.push_back(h);
            rep.results["bruteforce_pass_set"] = brute;
        }
        return rep;
    }
    if (!req.table.empty()) {
        rep.certificates.push_back(is_o_polynomial_bruteforce(f, req.table, exec));
        return rep;
    }
    const OMonomialReport r = is_o_monomial(f, *req.h, exec);
    rep.results["report"] = omonomial_to_json(r);
    Certificate c;
    c.kind = CertKind::OMonomial;
    c.verdict = r.verdict;
    c.params = {{"q", r.q}, {"h", r.h}, {"gcdOk", r.gcd_ok}, {"test", "triples"}};
    if (r.witness) c.witness = {{"triple", *r.witness}};
    rep.certificates.push_back(std::move(c));
    if (req.bruteforce) rep.certificates.push_back(is_o_polynomial_bruteforce(f, monomial_table(f, *req.h), exec));
    return rep;
}

RunReport run_covering(const CommandRequest& req) {
    const ConstructionParams p = request_params(req);
    RunReport rep;
    // CRK: dual of C_{r,k} with the stage-C1 vector; C2: dual of C1 with the stage-C2 vector.
    const ConstructionParams inner = p.family == Family::CRK ? p : p.with_family(Family::C1);
    const LinearCode d = dual(build_code(inner));
    const std::size_t radius = covering_radius(d, req.guards);
    rep.results = {{"params", params_to_json(p)},
                   {"code", to_string(inner.family)},
                   {"dual_n", d.length()},
                   {"dual_k", d.dimension()},
                   {"covering_radius", radius}};
    if (p.family != Family::C1) {
        const auto w = extension_vector(p.family == Family::CRK ? Family::C1 : Family::C2, p);
        rep.results["w"] = w;
        rep.certificates.push_back(is_deep_hole(d, w, req.guards));
    }
    return rep;
}

}  // namespace

std::string to_string(Verb v) {
    for (auto [e, s] : kVerbs)
        if (e == v) return s;
    return "?";
}

Verb verb_from_string(const std::string& s) {
    for (auto [e, name] : kVerbs)
        if (s == name) return e;
    throw std::invalid_argument("unknown verb '" + s + "'");
}

std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json:
            return "json";
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Pretty:
            return "pretty";
    }
    return "?";
}

OutputFormat format_from_string(const std::string& s) {
    for (OutputFormat f : {OutputFormat::Json, OutputFormat::Csv, OutputFormat::Pretty})
        if (to_string(f) == s) return f;
    throw std::invalid_argument("unknown format '" + s + "' (expected json, csv, pretty)");
}

CommandRequest parse_request(const std::vector<std::string>& args) {
    CLI::App app{"Non-GRS MDS code constructions and certificates", "nongrs"};
    app.require_subcommand(1, 1);

    std::optional<std::uint64_t> q, poly, h, seed;
    std::optional<unsigned> gf2m, k, r;
    std::optional<std::size_t> n, limit;
    std::optional<std::string> family, alphas, delta, checks, conditions, strategy, required, table;
    std::optional<std::uint64_t> max_messages, max_minors, max_coset;
    std::string format = "json";
    bool enumerate = false, timing = false, serial = false, bruteforce = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "json | csv | pretty");
        sub->add_option("--max-messages", max_messages, "q^k guard for distance checks (<= 2^26)");
        sub->add_option("--max-minors", max_minors, "C(n,k) guard for minor sweeps (<= 2^24)");
        sub->add_option("--max-coset-work", max_coset, "q^n guard for coset enumeration (<= 2^28)");
        sub->add_flag("--timing", timing, "include wall time in the report");
        sub->add_flag("--serial", serial, "use the serial reference kernels");
    };
    auto add_field = [&](CLI::App* sub) {
        auto* oq = sub->add_option("--q", q, "prime field order");
        auto* om = sub->add_option("--gf2m", gf2m, "extension degree of F_{2^m}");
        sub->add_option("--poly", poly, "irreducible polynomial mask for --gf2m");
        oq->excludes(om);
    };
    auto add_construction = [&](CLI::App* sub) {
        add_field(sub);
        sub->add_option("--family", family, "crk | c1 | c2");
        sub->add_option("--alphas", alphas, "comma-separated evaluation points, in order");
        sub->add_option("--k", k, "k");
        sub->add_option("--r", r, "r, 1 <= r <= k-1");
        sub->add_option("--delta", delta, "delta for family c2");
        add_common(sub);
    };

    std::vector<CLI::App*> subs;
    for (auto [verb, name] : kVerbs) {
        (void)verb;
        subs.push_back(app.add_subcommand(name));
    }
    auto* build = subs[0];
    auto* verify = subs[1];
    auto* check = subs[2];
    auto* deltas = subs[3];
    auto* search = subs[4];
    auto* omono = subs[5];
    auto* covering = subs[6];
    build->description("generator and closed-form parity-check matrices");
    add_construction(build);
    verify->description("MDS, distance, non-GRS and parity certificates");
    add_construction(verify);
    verify->add_option("--checks", checks, "comma list of mds,distance,nongrs,parity,conditions");
    check->description("condition certificates (STAR, STAR2, STAR3, HASH, R1DELTA)");
    add_construction(check);
    check->add_option("--condition", conditions, "comma list of conditions");
    deltas->description("sweep delta over the field");
    add_construction(deltas);
    covering->description("covering radius of the dual and the deep-hole check");
    add_construction(covering);
    search->description("search for evaluation sets satisfying conditions");
    add_field(search);
    search->add_option("--n", n, "number of points");
    search->add_option("--k", k, "k");
    search->add_option("--r", r, "r");
    search->add_option("--delta", delta, "delta for HASH / R1DELTA");
    search->add_option("--strategy", strategy, "consecutive | exhaustive | randomized");
    search->add_option("--require", required, "comma list of conditions (default STAR)");
    search->add_option("--limit", limit, "maximum number of sets to report");
    search->add_option("--seed", seed, "seed for the randomized strategy");
    add_common(search);
    omono->description("o-monomial and hyperoval tests over F_{2^m}");
    omono->set_help_flag("--help", "Print this help message and exit");
    auto* om = omono->add_option("--m", gf2m, "extension degree");
    auto* og = omono->add_option("--gf2m", gf2m, "alias of --m");
    om->excludes(og);
    omono->add_option("--poly", poly, "irreducible polynomial mask");
    omono->add_option("--h", h, "exponent");
    omono->add_flag("--enumerate", enumerate, "all h in 1..q-2");
    omono->add_option("--table", table, "comma-separated values f(0),...,f(q-1)");
    omono->add_flag("--bruteforce", bruteforce, "also run the brute-force hyperoval test");
    add_common(omono);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), true);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CommandRequest req;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed()) req.verb = kVerbs[i].first;

    try {
        req.format = format_from_string(format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--format: ") + e.what());
    }
    req.timing = timing;
    req.serial = serial;
    if (max_messages) req.guards.messages = *max_messages;
    if (max_minors) req.guards.minors = *max_minors;
    if (max_coset) req.guards.coset_work = *max_coset;
    if (req.guards.messages > Guards::kMaxMessages) throw UsageError("--max-messages: above the hard cap 2^26");
    if (req.guards.minors > Guards::kMaxMinors) throw UsageError("--max-minors: above the hard cap 2^24");
    if (req.guards.coset_work > Guards::kMaxCosetWork) throw UsageError("--max-coset-work: above the hard cap 2^28");

    try {
        if (q) req.field = FieldSpec::prime(*q);
        if (gf2m) req.field = FieldSpec::gf2m(*gf2m, poly);
        if (req.field) Field check_field(*req.field);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(q ? "--q: " : "--gf2m/--poly: ") + e.what());
    }
    if (poly && !gf2m) throw UsageError("--poly: only meaningful with --gf2m");

    if (family) {
        try {
            req.family = family_from_string(*family);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--family: ") + e.what());
        }
    }
    if (alphas) req.alphas = parse_elems("--alphas", *alphas);
    if (delta) {
        const auto d = parse_elems("--delta", *delta);
        if (d.size() != 1) throw UsageError("--delta: expected a single value");
        req.delta = d[0];
    }
    if (k) req.k = *k;
    if (r) req.r = *r;
    if (checks) {
        for (const auto& c : split_list(*checks)) {
            if (std::find(std::begin(kCheckNames), std::end(kCheckNames), c) == std::end(kCheckNames))
                throw UsageError("--checks: unknown check '" + c + "'");
            req.checks.push_back(c);
        }
    }
    if (conditions) req.conditions = parse_conditions("--condition", *conditions);

    if (is_construction_verb(req.verb)) {
        if (!req.field) throw UsageError("missing field: give --q P or --gf2m M");
        if ((req.verb == Verb::Build || req.verb == Verb::Verify) && !req.family)
            throw UsageError("--family is required for " + to_string(req.verb));
        if (!alphas) throw UsageError("--alphas is required");
        if (!k) throw UsageError("--k is required");
        if (!r) throw UsageError("--r is required");
        if (req.verb == Verb::Deltas && req.delta) throw UsageError("--delta: deltas sweeps every delta");
        try {
            ConstructionParams p = request_params(req);
            if (req.verb == Verb::Deltas) p = p.with_family(Family::C2, Elem{0});
            p.validate();
        } catch (const UsageError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else if (req.verb == Verb::Search) {
        if (!req.field) throw UsageError("missing field: give --q P or --gf2m M");
        if (!n) throw UsageError("--n is required");
        if (!k) throw UsageError("--k is required");
        if (!r) throw UsageError("--r is required");
        req.n = *n;
        if (req.k < 2 || req.r < 1 || req.r >= req.k) throw UsageError("--r: need 1 <= r <= k-1");
        if (req.n <= req.k || req.n > Field(*req.field).order()) throw UsageError("--n: need k < n <= q");
        if (strategy) {
            try {
                req.strategy = strategy_from_string(*strategy);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("--strategy: ") + e.what());
            }
        }
        if (required) req.required = parse_conditions("--require", *required);
        if (limit) req.limit = *limit;
        if (seed) req.seed = *seed;
        if (req.delta && !Field(*req.field).contains(*req.delta)) throw UsageError("--delta: not a field element");
        for (Condition c : req.required)
            if ((c == Condition::Hash || c == Condition::R1Delta) && !req.delta)
                throw UsageError("--require: " + to_string(c) + " needs --delta");
    } else {
        if (!req.field) throw UsageError("--m is required");
        const int modes = (h ? 1 : 0) + (enumerate ? 1 : 0) + (table ? 1 : 0);
        if (modes != 1) throw UsageError("give exactly one of --h, --enumerate, --table");
        const Field f(*req.field);
        if (h) {
            if (*h < 1) throw UsageError("--h: must be >= 1");
            req.h = *h;
        }
        req.enumerate = enumerate;
        req.bruteforce = bruteforce;
        if (table) {
            req.table = parse_elems("--table", *table);
            if (req.table.size() != f.order())
                throw UsageError("--table: expected " + std::to_string(f.order()) + " values");
            for (Elem v : req.table)
                if (!f.contains(v)) throw UsageError("--table: " + std::to_string(v) + " is not a field element");
        }
        if ((enumerate || table || h) && bruteforce && f.order() > 256)
            throw UsageError("--bruteforce: limited to m <= 8");
        if (enumerate && req.field->m > 8) throw UsageError("--enumerate: needs m <= 8");
    }
    return req;
}

ConstructionParams request_params(const CommandRequest& req) {
    if (!req.field) throw UsageError("missing field");
    Family fam = req.family.value_or(req.delta ? Family::C2 : Family::CRK);
    return ConstructionParams{fam, EvalSet(Field(*req.field), req.alphas), req.k, req.r, req.delta};
}

nlohmann::json request_to_json(const CommandRequest& req) {
    nlohmann::json j = {{"verb", to_string(req.verb)},
                        {"format", to_string(req.format)},
                        {"guards",
                         {{"messages", req.guards.messages},
                          {"minors", req.guards.minors},
                          {"coset_work", req.guards.coset_work}}},
                        {"timing", req.timing},
                        {"serial", req.serial}};
    if (req.field) j["field"] = field_spec_to_json(*req.field);
    if (req.family) j["family"] = to_string(*req.family);
    if (!req.alphas.empty()) j["alphas"] = req.alphas;
    if (req.k) j["k"] = req.k;
    if (req.r) j["r"] = req.r;
    if (req.delta) j["delta"] = *req.delta;
    if (!req.checks.empty()) j["checks"] = req.checks;
    std::vector<std::string> conds;
    for (Condition c : req.conditions) conds.push_back(to_string(c));
    if (!conds.empty()) j["conditions"] = conds;
    if (req.verb == Verb::Search) {
        std::vector<std::string> reqd;
        for (Condition c : req.required) reqd.push_back(to_string(c));
        j["n"] = req.n;
        j["strategy"] = to_string(req.strategy);
        j["required"] = reqd;
        j["limit"] = req.limit;
        j["seed"] = req.seed;
    }
    if (req.verb == Verb::OMonomial) {
        if (req.h) j["h"] = *req.h;
        j["enumerate"] = req.enumerate;
        if (!req.table.empty()) j["table"] = req.table;
        j["bruteforce"] = req.bruteforce;
    }
    return j;
}

CommandRequest request_from_json(const nlohmann::json& j) {
    CommandRequest req;
    req.verb = verb_from_string(j.at("verb").get<std::string>());
    req.format = format_from_string(j.value("format", std::string("json")));
    if (j.contains("guards")) {
        const auto& g = j.at("guards");
        req.guards.messages = g.at("messages").get<std::uint64_t>();
        req.guards.minors = g.at("minors").get<std::uint64_t>();
        req.guards.coset_work = g.at("coset_work").get<std::uint64_t>();
        req.guards.validate();
    }
    req.timing = j.value("timing", false);
    req.serial = j.value("serial", false);
    if (j.contains("field")) req.field = field_spec_from_json(j.at("field"));
    if (j.contains("family")) req.family = family_from_string(j.at("family").get<std::string>());
    req.alphas = j.value("alphas", std::vector<Elem>{});
    req.k = j.value("k", 0u);
    req.r = j.value("r", 0u);
    if (j.contains("delta")) req.delta = j.at("delta").get<Elem>();
    req.checks = j.value("checks", std::vector<std::string>{});
    for (const auto& c : j.value("conditions", std::vector<std::string>{}))
        req.conditions.push_back(condition_from_string(c));
    req.n = j.value("n", std::size_t{0});
    if (j.contains("strategy")) req.strategy = strategy_from_string(j.at("strategy").get<std::string>());
    for (const auto& c : j.value("required", std::vector<std::string>{}))
        req.required.push_back(condition_from_string(c));
    req.limit = j.value("limit", std::size_t{1});
    req.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("h")) req.h = j.at("h").get<std::uint64_t>();
    req.enumerate = j.value("enumerate", false);
    req.table = j.value("table", std::vector<Elem>{});
    req.bruteforce = j.value("bruteforce", false);
    return req;
}

int RunReport::exit_code() const {
    return std::any_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.failed(); })
               ? 1
               : 0;
}

nlohmann::json report_to_json(const RunReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"item", r.item}, {"kind", r.kind}, {"verdict", r.verdict}, {"detail", r.detail}});
    nlohmann::json j = {{"tool", "nongrs"},
                        {"version", rep.version},
                        {"request", rep.request},
                        {"certificates", rep.certificates},
                        {"results", rep.results},
                        {"rows", rows}};
    if (rep.wall_ms) j["wall_ms"] = *rep.wall_ms;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport rep;
    rep.request = j.at("request");
    rep.version = j.at("version").get<std::string>();
    rep.certificates = j.at("certificates").get<std::vector<Certificate>>();
    rep.results = j.at("results");
    for (const auto& r : j.at("rows"))
        rep.rows.push_back({r.at("item").get<std::string>(), r.at("kind").get<std::string>(),
                            r.at("verdict").get<std::string>(), r.at("detail").get<std::string>()});
    if (j.contains("wall_ms")) rep.wall_ms = j.at("wall_ms").get<double>();
    return rep;
}

RunReport execute(const CommandRequest& req) {
    req.guards.validate();
    const auto start = std::chrono::steady_clock::now();
    RunReport rep;
    switch (req.verb) {
        case Verb::Build:
            rep = run_build(req);
            break;
        case Verb::Verify:
            rep = run_verify(req);
            break;
        case Verb::Check:
            rep = run_check(req);
            break;
        case Verb::Deltas:
            rep = run_deltas(req);
            break;
        case Verb::Search:
            rep = run_search(req);
            break;
        case Verb::OMonomial:
            rep = run_omonomial(req);
            break;
        case Verb::Covering:
            rep = run_covering(req);
            break;
    }
    rep.request = request_to_json(req);
    if (req.timing)
        rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string emit_report(const RunReport& rep, OutputFormat format) {
    std::ostringstream out;
    switch (format) {
        case OutputFormat::Json:
            out << report_to_json(rep).dump() << '\n';
            break;
        case OutputFormat::Csv:
            out << "item,kind,verdict,detail\n";
            for (const auto& c : rep.certificates) {
                const std::string detail = c.witness.is_null() ? c.params.dump() : c.witness.dump();
                out << csv_field(cert_item(c)) << ',' << to_string(c.kind) << ',' << to_string(c.verdict) << ','
                    << csv_field(detail) << '\n';
            }
            for (const auto& r : rep.rows)
                out << csv_field(r.item) << ',' << r.kind << ',' << r.verdict << ',' << csv_field(r.detail) << '\n';
            break;
        case OutputFormat::Pretty: {
            out << "nongrs " << rep.version << "  " << rep.request.value("verb", std::string("?")) << '\n';
            for (const auto& c : rep.certificates) {
                out << "  [" << to_string(c.verdict) << "] " << to_string(c.kind);
                if (c.params.contains("condition")) out << ' ' << c.params.at("condition").get<std::string>();
                out << "  " << c.params.dump() << '\n';
                if (!c.witness.is_null()) {
                    out << "      witness:";
                    if (c.witness.contains("subset")) out << " subset " << c.witness.at("subset").dump();
                    out << ' ' << c.witness.dump() << '\n';
                }
            }
            for (const auto& [key, value] : rep.results.items()) {
                if (value.is_object() && value.contains("data")) {
                    out << "  " << key << " (" << value.at("rows") << "x" << value.at("cols") << "):\n";
                    for (const auto& row : value.at("data")) out << "    " << row.dump() << '\n';
                } else {
                    out << "  " << key << ": " << value.dump() << '\n';
                }
            }
            for (const auto& r : rep.rows) out << "  " << r.item << "  " << r.verdict << "  " << r.detail << '\n';
            if (rep.wall_ms) out << "  wall time: " << *rep.wall_ms << " ms\n";
            break;
        }
    }
    return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandRequest req;
    try {
        req = parse_request(args);
    } catch (const UsageError& e) {
        if (e.help()) {
            out << e.what();
            return 0;
        }
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    try {
        const RunReport rep = execute(req);
        out << emit_report(rep, req.format);
        return rep.exit_code();
    } catch (const SizeGuardError& e) {
        err << "size guard: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace nongrs
