#include "qqm/jsonio.hpp"

#include <string>

#include "qqm/parse.hpp"

namespace qqm {

namespace {

domain_error bad(const std::string& what) {
    return domain_error("json: " + what);
}

Rat rat_from(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return Rat(j.get<std::string>());
    throw bad("rational expected as integer or \"p/q\" string");
}

std::string rat_str(const Rat& r) {
    return r.str();
}

}  // namespace

Json dyadic_json(const Dyadic& d) {
    if (d.is_integer()) return d.num;
    return d.str();  // "p/2^k" as a plain fraction string
}

Dyadic dyadic_from(const Json& j) {
    if (j.is_number_integer()) return Dyadic(j.get<std::int64_t>());
    if (!j.is_string()) throw bad("dyadic expected as integer or string");
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Dyadic(std::stoll(s));
    std::int64_t num = std::stoll(s.substr(0, slash));
    std::int64_t den = std::stoll(s.substr(slash + 1));
    int k = 0;
    while (den > 1 && den % 2 == 0) {
        den /= 2;
        ++k;
    }
    if (den != 1) throw bad("dyadic denominator must be a power of two");
    return Dyadic(num, k);
}

Json group_json(const GroupElem& g) {
    Json a = Json::array();
    for (const Dyadic& d : g.coords) a.push_back(dyadic_json(d));
    return a;
}

GroupElem group_from(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        throw bad("group element expects an array of " + std::to_string(n) +
                  " coordinates");
    std::vector<Dyadic> c;
    c.reserve(n);
    for (const Json& e : j) c.push_back(dyadic_from(e));
    return GroupElem(std::move(c));
}

Json series_json(const Series& s) {
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back({{"exponent", group_json(e)}, {"coeff", rat_str(c)}});
    Json out{{"terms", std::move(terms)}};
    out["prec"] = s.prec() ? group_json(*s.prec()) : Json();
    return out;
}

Series series_from(const Json& j, std::size_t n, bool char2) {
    if (j.is_string()) return parse_series(j.get<std::string>(), n, char2);
    const Json* terms = nullptr;
    Series s(n, char2);
    if (j.is_array()) {
        terms = &j;
    } else if (j.is_object() && j.contains("terms")) {
        terms = &j.at("terms");
        if (j.contains("prec") && !j.at("prec").is_null())
            s = s.truncated(group_from(j.at("prec"), n));
    } else {
        throw bad("series expected as string, term list, or object");
    }
    for (const Json& t : *terms)
        s.add_term(group_from(t.at("exponent"), n), rat_from(t.at("coeff")));
    return s;
}

Json cut_json(const Cut& c) {
    if (c.is_empty_set()) return Json{{"shape", "empty"}};
    if (c.is_closed_ray()) {
        Json g0 = Json::array();
        for (const Dyadic& d : c.prefix) g0.push_back(dyadic_json(d));
        return Json{{"shape", "closed_ray"}, {"g0", std::move(g0)}};
    }
    Json prefix = Json::array();
    for (const Dyadic& d : c.prefix) prefix.push_back(dyadic_json(d));
    return Json{{"shape", "open_cut"},
                {"k", c.prefix.size()},
                {"prefix", std::move(prefix)},
                {"inclusive", c.inclusive}};
}

Cut cut_from(const Json& j, std::size_t dim) {
    std::string shape = j.at("shape").get<std::string>();
    if (shape == "empty") return Cut::empty(dim);
    if (shape == "closed_ray") {
        std::vector<Dyadic> g0;
        for (const Json& e : j.at("g0")) g0.push_back(dyadic_from(e));
        if (g0.size() != dim)
            throw bad("closed ray prefix must have the full dimension");
        return Cut::closed_ray(std::move(g0));
    }
    if (shape != "open_cut") throw bad("unknown cut shape: " + shape);
    std::vector<Dyadic> prefix;
    for (const Json& e : j.at("prefix")) prefix.push_back(dyadic_from(e));
    if (j.contains("k") && j.at("k").get<std::size_t>() != prefix.size())
        throw bad("cut prefix length disagrees with k");
    return Cut(dim, std::move(prefix), j.at("inclusive").get<bool>());
}

Json module_json(const QQModule& m) {
    Json out{{"n", m.dim()}, {"H", m.subgroup().j}};
    if (m.has_generators()) {
        Json gens = Json::array();
        for (const Series& f : m.generators()) gens.push_back(series_json(f));
        out["repr"] = Json{{"generators", std::move(gens)}};
        return out;
    }
    const ThetaFamily& fam = m.theta();
    Json patches = Json::array();
    for (const auto& [parity, cuts] : fam.layers()) {
        for (const auto& [value, cut] :
             {std::pair<const char*, const Cut&>{"pos", cuts.first},
              std::pair<const char*, const Cut&>{"neg", cuts.second}})
            if (!cut.is_empty_set())
                patches.push_back({{"class", parity},
                                   {"module", value},
                                   {"heads", cut_json(cut)}});
    }
    out["repr"] = Json{{"patches", std::move(patches)},
                       {"frontier", cut_json(fam.all_cut())}};
    return out;
}

QQModule module_from(const Json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    ConvexSubgroup H(j.at("H").get<std::size_t>());
    const Json& repr = j.at("repr");
    if (repr.contains("generators")) {
        std::vector<Series> gens;
        for (const Json& g : repr.at("generators"))
            gens.push_back(series_from(g, n));
        return QQModule::from_generators(n, H, std::move(gens));
    }
    if (!repr.contains("patches"))
        throw bad("module repr needs generators or patches");
    std::vector<ThetaPatch> layers;
    for (const Json& p : repr.at("patches")) {
        ThetaPatch patch;
        patch.parity = p.at("class").get<std::vector<int>>();
        if (patch.parity.size() != n)
            throw bad("patch class must list one parity bit per coordinate");
        std::string value = p.at("module").get<std::string>();
        RMod v = rmod_from_name(value);
        if (v != RMod::Pos && v != RMod::Neg)
            throw bad("patch module must be \"pos\" or \"neg\"");
        patch.value = v;
        patch.head_cut = cut_from(p.at("heads"), H.j);
        layers.push_back(std::move(patch));
    }
    Cut frontier = cut_from(repr.at("frontier"), H.j);
    return lambda_of(ThetaFamily::from_layers(n, H, layers, frontier));
}

Json c2_module_json(const Char2Module& m) {
    Json out{{"n", m.S.n}, {"H", m.S.H.j}, {"cut", cut_json(m.S.cut)}};
    if (m.layer.has_value()) out["layer"] = rname(*m.layer);
    return out;
}

Char2Module c2_module_from(const Json& j) {
    std::size_t n = j.at("n").get<std::size_t>();
    ConvexSubgroup H(j.at("H").get<std::size_t>());
    CutSet S{n, H, cut_from(j.at("cut"), n)};
    if (j.contains("layer") && !j.at("layer").is_null())
        return c2_gamma2(std::move(S),
                         rmod_from_name(j.at("layer").get<std::string>()));
    return c2_gamma1(std::move(S));
}

}  // namespace qqm
