#include "effbayes/model_json.hpp"

#include <json.hpp>

#include "effbayes/errors.hpp"

namespace effbayes {

void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const auto& key : allowed) ok = ok || (it.key() == key);
        if (!ok) throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
    }
}

Json rational_to_json(const Rational& r) {
    return Json(r.to_string());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw ConfigError("rational must be a \"num/den\" string");
    return Rational::parse(j.get<std::string>());
}

Json point_to_json(const ParameterPoint& p) {
    Json j;
    if (const auto* u = std::get_if<UnitPoint>(&p)) {
        j["space"] = "unit";
        j["value"] = rational_to_json(u->value);
        return j;
    }
    if (const auto* s = std::get_if<SimplexPoint>(&p)) {
        j["space"] = "simplex";
        Json head = Json::array();
        for (size_t i = 0; i < s->head_size(); ++i) head.push_back(rational_to_json(s->coordinate(i)));
        j["head"] = head;
        if (s->has_geometric_tail()) {
            j["tail"] = {{"kind", "geometric"},
                         {"first", rational_to_json(s->tail().first)},
                         {"ratio", rational_to_json(s->tail().ratio)}};
        } else {
            j["tail"] = {{"kind", "zero"}};
        }
        return j;
    }
    if (const auto* c = std::get_if<CantorPoint>(&p)) {
        if (!c->is_eventually_constant()) throw ConfigError("oracle-backed cantor points are not serializable");
        j["space"] = "cantor";
        std::string bits;
        for (uint8_t b : c->prefix()) bits += static_cast<char>('0' + b);
        j["prefix"] = bits;
        j["tail_bit"] = static_cast<int>(c->tail_bit());
        return j;
    }
    throw ConfigError("hilbert-cube points are not serializable");
}

ParameterPoint point_from_json(const Json& j) {
    reject_unknown_keys(j, {"space", "value", "head", "tail", "prefix", "tail_bit"}, "point");
    std::string space = j.at("space").get<std::string>();
    if (space == "unit") return UnitPoint{rational_from_json(j.at("value"))};
    if (space == "simplex") {
        std::vector<Rational> head;
        for (const auto& h : j.at("head")) head.push_back(rational_from_json(h));
        const Json& tail = j.at("tail");
        if (tail.at("kind") == "zero") return SimplexPoint::finite(std::move(head));
        if (head.empty())
            return SimplexPoint::geometric(rational_from_json(tail.at("first")),
                                           rational_from_json(tail.at("ratio")));
        return SimplexPoint::head_plus_geometric(std::move(head), rational_from_json(tail.at("first")),
                                                 rational_from_json(tail.at("ratio")));
    }
    if (space == "cantor") {
        std::string bits = j.at("prefix").get<std::string>();
        std::vector<uint8_t> prefix;
        for (char c : bits) {
            if (c != '0' && c != '1') throw ConfigError("cantor prefix must be a 0/1 string");
            prefix.push_back(static_cast<uint8_t>(c - '0'));
        }
        int tail = j.value("tail_bit", 0);
        return CantorPoint::eventually_constant(std::move(prefix), static_cast<uint8_t>(tail));
    }
    throw ConfigError("unknown point space " + space);
}

Json prior_to_json(const Prior& p) {
    Json j;
    if (p.is_atomic()) {
        j["kind"] = "atomic";
        Json atoms = Json::array();
        for (const auto& a : p.atoms())
            atoms.push_back({{"weight", rational_to_json(a.weight)}, {"point", point_to_json(a.point)}});
        j["atoms"] = atoms;
    } else {
        j["kind"] = "poly_density";
        Json coeffs = Json::array();
        for (const auto& c : p.density().coeffs()) coeffs.push_back(rational_to_json(c));
        j["coefficients"] = coeffs;
    }
    return j;
}

Prior prior_from_json(const Json& j) {
    reject_unknown_keys(j, {"kind", "atoms", "coefficients"}, "prior");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "atomic") {
        std::vector<Prior::Atom> atoms;
        for (const auto& a : j.at("atoms")) {
            reject_unknown_keys(a, {"weight", "point"}, "atom");
            atoms.push_back({rational_from_json(a.at("weight")), point_from_json(a.at("point"))});
        }
        return Prior::atomic(std::move(atoms));
    }
    if (kind == "poly_density") {
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.push_back(rational_from_json(c));
        return Prior::poly_density(Polynomial(std::move(coeffs)));
    }
    throw ConfigError("unknown prior kind " + kind);
}

Json likelihood_to_json(const Likelihood&, const std::string& family) {
    Json j;
    j["family"] = family;
    return j;
}

namespace {

Likelihood likelihood_from_json(const Json& j, std::string& family_out) {
    reject_unknown_keys(j, {"family", "rate0", "rate1"}, "likelihood");
    std::string family = j.at("family").get<std::string>();
    family_out = family;
    if (family == "bernoulli_product") return Likelihood::bernoulli_product();
    if (family == "iid_simplex") return Likelihood::iid_simplex();
    if (family == "cantor_bitwise")
        return Likelihood::cantor_bitwise(rational_from_json(j.at("rate0")), rational_from_json(j.at("rate1")));
    throw ConfigError("unknown likelihood family " + family);
}

}  // namespace

Json model_to_json(const ModelDescription& m) {
    Json j;
    j["name"] = m.name;
    j["prior"] = prior_to_json(m.prior);
    j["likelihood"] = likelihood_to_json(m.likelihood, m.family);
    return j;
}

ModelDescription model_from_json(const Json& j) {
    reject_unknown_keys(j, {"name", "prior", "likelihood"}, "model");
    std::string family;
    Likelihood lh = likelihood_from_json(j.at("likelihood"), family);
    ModelDescription m{j.value("name", std::string("custom")), prior_from_json(j.at("prior")), lh, family};
    return m;
}

std::vector<ModelDescription> builtin_models() {
    std::vector<ModelDescription> out;
    out.push_back({"lebesgue-bernoulli", Prior::lebesgue(), Likelihood::bernoulli_product(), "bernoulli_product"});
    out.push_back({"two-atom-bernoulli",
                   Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 3)}},
                                  {Rational(1, 2), UnitPoint{Rational(2, 3)}}}),
                   Likelihood::bernoulli_product(), "bernoulli_product"});
    out.push_back({"quartile-bernoulli",
                   Prior::atomic({{Rational(1, 2), UnitPoint{Rational(1, 4)}},
                                  {Rational(1, 2), UnitPoint{Rational(3, 4)}}}),
                   Likelihood::bernoulli_product(), "bernoulli_product"});
    out.push_back({"freedman-default",
                   Prior::atomic({{Rational(1, 2),
                                   ParameterPoint(SimplexPoint::geometric(Rational(1, 2), Rational(1, 2)))},
                                  {Rational(1, 2),
                                   ParameterPoint(SimplexPoint::finite(
                                       {Rational(1, 2), Rational(1, 2), Rational(0)}))}}),
                   Likelihood::iid_simplex(), "iid_simplex"});
    out.push_back({"finite-simplex",
                   Prior::atomic({{Rational(1, 3),
                                   ParameterPoint(SimplexPoint::finite({Rational(1, 2), Rational(1, 2)}))},
                                  {Rational(2, 3),
                                   ParameterPoint(SimplexPoint::finite(
                                       {Rational(1, 4), Rational(1, 4), Rational(1, 2)}))}}),
                   Likelihood::iid_simplex(), "iid_simplex"});
    return out;
}

Json freedman_prior_to_json(const FreedmanPrior& fp) {
    Json j;
    j["positive"] = point_to_json(ParameterPoint(fp.positive_atom));
    j["positive_weight"] = rational_to_json(fp.positive_weight);
    Json nulls = Json::array();
    for (const auto& nu : fp.nulls) {
        nulls.push_back({{"point", point_to_json(ParameterPoint(nu.point))},
                         {"zero_coordinate", nu.zero_coordinate},
                         {"weight", rational_to_json(nu.weight)}});
    }
    j["nulls"] = nulls;
    return j;
}

FreedmanPrior freedman_prior_from_json(const Json& j) {
    reject_unknown_keys(j, {"positive", "positive_weight", "nulls"}, "freedman prior");
    SimplexPoint positive = std::get<SimplexPoint>(point_from_json(j.at("positive")));
    std::vector<std::pair<SimplexPoint, size_t>> nulls;
    std::vector<Rational> weights{rational_from_json(j.at("positive_weight"))};
    for (const auto& nu : j.at("nulls")) {
        reject_unknown_keys(nu, {"point", "zero_coordinate", "weight"}, "null atom");
        nulls.emplace_back(std::get<SimplexPoint>(point_from_json(nu.at("point"))),
                           nu.at("zero_coordinate").get<size_t>());
        weights.push_back(rational_from_json(nu.at("weight")));
    }
    return build_freedman_prior(std::move(positive), std::move(nulls), std::move(weights));
}

Json certificate_to_json(const InconsistencyCertificate& c) {
    Json j;
    j["prior"] = freedman_prior_to_json(c.prior);
    j["true_parameter"] = point_to_json(ParameterPoint(c.true_theta));
    j["V"] = c.v_description;
    j["horizon"] = c.horizon;
    j["exact_bound"] = rational_to_json(c.bound);
    j["decimal"] = c.bound.decimal_string(12);
    j["strictly_below_1"] = c.strictly_below_1;
    return j;
}

}  // namespace effbayes
