#include "zopoly/serialize.hpp"

#include "zopoly/errors.hpp"

namespace zopoly {

json to_json(const IntPoly& f) {
    json coeffs = json::array();
    for (const Int& c : f.coeffs())
        coeffs.push_back(c.str());
    return json{{"coeffs", coeffs}, {"text", to_string(f)}};
}

IntPoly poly_from_json(const json& j) {
    std::vector<Int> c;
    for (const auto& v : j.at("coeffs"))
        c.emplace_back(v.get<std::string>());
    return IntPoly(std::move(c));
}

json to_json(const SupportSet& s) {
    return json(s.exponents());
}

json to_json(const CyclotomicFactorization& cf) {
    json factors = json::array();
    for (auto& [m, mult] : cf.factors)
        factors.push_back(json::array({m, mult}));
    return json{{"factors", factors}, {"part", to_json(cf.part)}};
}

namespace {
const char* class_tag(FactorClass c) {
    switch (c) {
    case FactorClass::NonReciprocal:
        return "non_reciprocal";
    case FactorClass::ReciprocalCyclotomic:
        return "reciprocal_cyclotomic";
    case FactorClass::ReciprocalNonCyclotomic:
        return "reciprocal_noncyclotomic";
    }
    return "?";
}
} // namespace

json to_json(const FactorizationReport& rep) {
    json factors = json::array();
    for (const auto& e : rep.factors) {
        json f{{"poly", to_json(e.poly)},
               {"multiplicity", e.multiplicity},
               {"class", class_tag(e.cls)}};
        if (e.cls == FactorClass::ReciprocalCyclotomic)
            f["m"] = e.cyclotomic_m;
        factors.push_back(std::move(f));
    }
    return json{{"unit", rep.unit}, {"content", rep.content.str()}, {"factors", factors}};
}

json to_json(const DifferenceMultiset& dm) {
    json counts = json::array();
    for (auto& [d, c] : dm.counts)
        counts.push_back(json::array({d, c}));
    return json{{"counts", counts}, {"cardinality", dm.cardinality}};
}

json to_json(const UniquenessReport& rep) {
    json solutions = json::array();
    for (const auto& s : rep.solutions)
        solutions.push_back(to_json(s));
    json extras = json::array();
    for (const auto& e : rep.extras) {
        json ws = json::array();
        for (const auto& w : e.witnesses)
            ws.push_back(json{{"i", w.i}, {"g", w.g}, {"h", w.h}});
        extras.push_back(json{{"set", to_json(e.set)}, {"witnesses", ws}});
    }
    return json{{"unique", rep.unique}, {"solutions", solutions}, {"extras", extras}};
}

namespace {
std::string rat_str(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}
} // namespace

json to_json(const BoxParameters& p) {
    return json{{"k", p.k},
                {"epsilon", rat_str(p.epsilon)},
                {"kappa", p.kappa},
                {"V", rat_str(p.V)},
                {"V_approx", p.V.convert_to<double>()}};
}

json to_json(const BoxCertificate& c) {
    json per = json::array();
    for (const auto& id : c.per_index)
        per.push_back(json{{"m", id.m}, {"t", id.t}, {"w", id.w}});
    return json{{"d", c.d},
                {"per_index", per},
                {"t", c.t},
                {"mprime", c.mprime},
                {"tprime", c.tprime},
                {"tdoubleprime", c.tdoubleprime}};
}

json to_json(const BoundsReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"slack", c.slack}});
    return json{{"checks", checks}, {"headline_pass", rep.headline_pass}};
}

json to_json(const Polytope2& p) {
    json vs = json::array();
    for (const auto& v : p.vertices)
        vs.push_back(json::array({v.x, v.y}));
    return json{{"vertices", vs}};
}

json to_json(const BivariateSupport& p) {
    json terms = json::array();
    for (const auto& t : p.terms)
        terms.push_back(json{{"coeff", t.coeff.str()}, {"e1", t.e1}, {"e2", t.e2}});
    return json{{"terms", terms}, {"text", to_string(p)}};
}

json to_json(const GHPair& gh) {
    return json{{"G", to_json(gh.G)}, {"H", to_json(gh.H)}, {"a", gh.a}};
}

} // namespace zopoly
