#pragma once

#include <json.hpp>
#include <string>

#include "effbayes/freedman.hpp"
#include "effbayes/joint.hpp"
#include "effbayes/randomness.hpp"

namespace effbayes {

using Json = nlohmann::json;

/// Rationals travel as "num/den" strings.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json point_to_json(const ParameterPoint& p);
ParameterPoint point_from_json(const Json& j);

Json prior_to_json(const Prior& p);
Prior prior_from_json(const Json& j);

/// Likelihood families carry only their construction data.
Json likelihood_to_json(const Likelihood& lh, const std::string& family);

struct ModelDescription {
    std::string name;
    Prior prior;
    Likelihood likelihood;
    std::string family;

    JointMeasure joint() const { return JointMeasure(prior, likelihood); }
};

Json model_to_json(const ModelDescription& m);
ModelDescription model_from_json(const Json& j);

/// The models shipped with the CLI.
std::vector<ModelDescription> builtin_models();

Json freedman_prior_to_json(const FreedmanPrior& fp);
FreedmanPrior freedman_prior_from_json(const Json& j);

Json certificate_to_json(const InconsistencyCertificate& c);

Json tree_to_json(const SampleTree& t);

/// Generator lists per level with exact measure certificates.
Json schnorr_test_to_json(const SequentialSchnorrTest& t);

/// Throws ConfigError when the object carries keys outside `allowed`.
void reject_unknown_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where);

}  // namespace effbayes
