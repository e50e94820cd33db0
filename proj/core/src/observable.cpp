#include "qeffects/observable.hpp"

#include <cmath>
#include <unordered_set>

#include "qeffects/evolution.hpp"

namespace qeffects {

std::string product_label(const std::string& x, const std::string& y) {
    return x + kProductSeparator + y;
}

Observable validate_observable(std::vector<std::string> outcomes, std::vector<Effect> effects) {
    if (effects.empty()) throw Error(ErrorKind::EmptyObservable, "observable has no effects");
    if (outcomes.size() != effects.size()) {
        throw Error(ErrorKind::DimensionMismatch, "outcome labels and effects differ in number");
    }

    std::unordered_set<std::string> seen;
    for (const auto& label : outcomes) {
        if (!seen.insert(label).second) {
            throw Error(ErrorKind::DuplicateOutcome, "duplicate outcome label '" + label + "'");
        }
    }

    const Index dim = effects.front().dim();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const auto& e : effects) {
        require_same_dim(dim, e.dim(), "validate_observable");
        sum += e.matrix();
    }
    const double defect = spectral_norm(sum - ComplexMatrix::Identity(dim, dim));
    if (defect > tol::kObservableSum) {
        throw Error(ErrorKind::SumNotIdentity,
                    "||sum A_x - I|| = " + std::to_string(defect), defect);
    }
    return Observable(std::move(outcomes), std::move(effects));
}

Observable validate_observable(std::vector<std::string> outcomes,
                               const std::vector<ComplexMatrix>& effects) {
    std::vector<Effect> members;
    members.reserve(effects.size());
    for (std::size_t i = 0; i < effects.size(); ++i) {
        try {
            members.push_back(validate_effect(effects[i]));
        } catch (const Error& e) {
            const std::string label = i < outcomes.size() ? outcomes[i] : std::to_string(i);
            throw Error(ErrorKind::MemberNotEffect,
                        "outcome '" + label + "': " + e.what(), e.value());
        }
    }
    return validate_observable(std::move(outcomes), std::move(members));
}

OutcomeDistribution distribution(const Observable& a, const State& rho) {
    require_same_dim(a.dim(), rho.dim(), "distribution");

    OutcomeDistribution out{a.outcomes(), {}};
    out.probabilities.reserve(a.size());
    double total = 0.0;
    for (const auto& e : a.effects()) {
        const double p = (rho.matrix() * e.matrix()).trace().real();
        if (p < -tol::kDistributionFloor) {
            throw Error(ErrorKind::NumericalInconsistency, "negative outcome probability", p);
        }
        out.probabilities.push_back(p);
        total += p;
    }
    if (std::abs(total - 1.0) > tol::kDistributionSum) {
        throw Error(ErrorKind::NumericalInconsistency, "distribution does not sum to 1", total);
    }
    return out;
}

Observable obs_seq_product(const Observable& a, const Observable& b) {
    require_same_dim(a.dim(), b.dim(), "obs_seq_product");
    std::vector<std::string> labels;
    std::vector<Effect> effects;
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            labels.push_back(product_label(a.outcomes()[x], b.outcomes()[y]));
            effects.push_back(sequential_product(a[x], b[y]));
        }
    }
    return validate_observable(std::move(labels), std::move(effects));
}

Observable conditioned_observable(const Observable& b, const Observable& a) {
    return time_conditional_observable(b, a, 0.0);
}

Observable obs_evolution(const Observable& b, const Effect& a, double t) {
    require_same_dim(b.dim(), a.dim(), "obs_evolution");
    std::vector<Effect> effects;
    effects.reserve(b.size());
    for (const auto& e : b.effects()) effects.push_back(effect_evolution(e, a, t));
    return validate_observable(b.outcomes(), std::move(effects));
}

Observable obs_time_seq_product(const Observable& a, const Observable& b, double t) {
    require_same_dim(a.dim(), b.dim(), "obs_time_seq_product");
    std::vector<std::string> labels;
    std::vector<Effect> effects;
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) {
            labels.push_back(product_label(a.outcomes()[x], b.outcomes()[y]));
            effects.push_back(time_seq_product(a[x], b[y], t));
        }
    }
    return validate_observable(std::move(labels), std::move(effects));
}

Observable time_conditional_observable(const Observable& b, const Observable& a, double t) {
    require_same_dim(a.dim(), b.dim(), "time_conditional_observable");
    const Index dim = b.dim();
    std::vector<Effect> effects;
    effects.reserve(b.size());
    for (const auto& by : b.effects()) {
        ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
        for (const auto& ax : a.effects()) sum += time_seq_product(ax, by, t).matrix();
        effects.push_back(validate_effect(sum));
    }
    return validate_observable(b.outcomes(), std::move(effects));
}

Observable convex_combination(const std::vector<double>& weights,
                              const std::vector<Observable>& observables) {
    if (weights.size() != observables.size() || observables.empty()) {
        throw Error(ErrorKind::WeightsNotNormalized,
                    "need one weight per observable and at least one observable");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw Error(ErrorKind::WeightsNotNormalized, "weight outside [0, 1]", w);
        }
        total += w;
    }
    if (std::abs(total - 1.0) > tol::kConvexWeights) {
        throw Error(ErrorKind::WeightsNotNormalized, "weights sum to " + std::to_string(total), total);
    }

    const Observable& first = observables.front();
    for (const auto& obs : observables) {
        if (obs.outcomes() != first.outcomes()) {
            throw Error(ErrorKind::OutcomeSetMismatch, "observables must share one outcome set");
        }
        require_same_dim(first.dim(), obs.dim(), "convex_combination");
    }

    const Index dim = first.dim();
    std::vector<Effect> effects;
    for (std::size_t y = 0; y < first.size(); ++y) {
        ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
        for (std::size_t i = 0; i < observables.size(); ++i) {
            sum += weights[i] * observables[i][y].matrix();
        }
        effects.push_back(validate_effect(sum));
    }
    return validate_observable(first.outcomes(), std::move(effects));
}

}  // namespace qeffects
