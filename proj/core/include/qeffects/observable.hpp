#pragma once

#include <string>
#include <vector>

#include "qeffects/effect.hpp"

namespace qeffects {

/// Separator used when forming product outcome labels "x⊗y".
inline constexpr const char* kProductSeparator = "\xE2\x8A\x97";

std::string product_label(const std::string& x, const std::string& y);

/// A finite family of effects summing to the identity, with unique string
/// labels kept in declaration order. Construct with validate_observable.
class Observable {
public:
    const std::vector<std::string>& outcomes() const noexcept { return outcomes_; }
    const std::vector<Effect>& effects() const noexcept { return effects_; }
    std::size_t size() const noexcept { return effects_.size(); }
    Index dim() const noexcept { return effects_.front().dim(); }
    const Effect& operator[](std::size_t i) const { return effects_.at(i); }

private:
    Observable(std::vector<std::string> outcomes, std::vector<Effect> effects)
        : outcomes_(std::move(outcomes)), effects_(std::move(effects)) {}

    friend Observable validate_observable(std::vector<std::string>, std::vector<Effect>);

    std::vector<std::string> outcomes_;
    std::vector<Effect> effects_;
};

/// Throws EmptyObservable, DuplicateOutcome, DimensionMismatch or
/// SumNotIdentity (value = ||sum - I||).
Observable validate_observable(std::vector<std::string> outcomes, std::vector<Effect> effects);
/// Also throws MemberNotEffect when a matrix fails effect validation.
Observable validate_observable(std::vector<std::string> outcomes,
                               const std::vector<ComplexMatrix>& effects);

struct OutcomeDistribution {
    std::vector<std::string> outcomes;
    std::vector<double> probabilities;
};

/// x -> tr(rho A_x).
OutcomeDistribution distribution(const Observable& a, const State& rho);

/// A o B on outcomes x⊗y, enumerated with x outer and y inner.
Observable obs_seq_product(const Observable& a, const Observable& b);

/// (B|A)_y = sum_x A_x o B_y.
Observable conditioned_observable(const Observable& b, const Observable& a);

/// B(t|a)_y = e^{-ita} B_y e^{ita}.
Observable obs_evolution(const Observable& b, const Effect& a, double t);

/// (A[t]B)_{x⊗y} = A_x[t]B_y.
Observable obs_time_seq_product(const Observable& a, const Observable& b, double t);

/// (B|A)(t|A)_y = sum_x A_x[t]B_y.
Observable time_conditional_observable(const Observable& b, const Observable& a, double t);

/// (sum_i w_i B_i)_y = sum_i w_i (B_i)_y. Throws WeightsNotNormalized or
/// OutcomeSetMismatch.
Observable convex_combination(const std::vector<double>& weights,
                              const std::vector<Observable>& observables);

}  // namespace qeffects
