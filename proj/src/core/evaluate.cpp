#include "abstain/core/types.hpp"

namespace abstain::core {

RiskCoveragePoint evaluate_selective(const SelectiveClassifier& c,
                                     const LabeledSet& test,
                                     std::string params_tag) {
    if (test.items.empty())
        throw std::invalid_argument("evaluate_selective: empty test set");

    RiskCoveragePoint rc;
    rc.m = test.size();
    rc.params = std::move(params_tag);
    for (const auto& [x, y] : test.items) {
        Decision d = c.classify(x);
        if (d.is_abstain()) continue;
        ++rc.predicted_count;
        if (*d.label != y) ++rc.wrong_count;
    }
    rc.coverage =
        static_cast<double>(rc.predicted_count) / static_cast<double>(rc.m);
    if (rc.predicted_count > 0)
        rc.risk_on_predicted = static_cast<double>(rc.wrong_count) /
                               static_cast<double>(rc.predicted_count);
    return rc;
}

}  // namespace abstain::core
