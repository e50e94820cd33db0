#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qeffects/effect.hpp"

// Randomized search around the question of whether a[t]b = b[t]a at a single
// time t forces [a, b] = 0. The scan only ever reports numerical minima; it
// never certifies a counterexample.
namespace qeffects::explorer {

using Rng = std::mt19937_64;

/// Generator state for trial `index` of a scan seeded with `seed`. Depends
/// only on (seed, index), never on scheduling.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// (I + H / ||H||) / 2 with H the Hermitian part of a matrix of independent
/// standard complex Gaussians.
Effect random_effect(Index dim, Rng& rng);

/// t -> ||a[t]b - b[t]a||, with a o b and b o a precomputed.
class SymmetryGap {
public:
    SymmetryGap(const Effect& a, const Effect& b);
    double operator()(double t) const;

private:
    Effect a_;
    Effect b_;
    ComplexMatrix ab_;
    ComplexMatrix ba_;
};

/// ||a[t]b - b[t]a||.
double symmetry_gap(const Effect& a, const Effect& b, double t);

struct ScanConfig {
    int dim = 2;
    int trials = 100;
    double t_min = -12.566370614359172;  // -4 pi
    double t_max = 12.566370614359172;
    int grid_points = 512;
    int refine_iters = 60;
    std::uint64_t seed = 42;
    double commutator_floor = 1e-3;
    /// Half-width of the neighbourhood of t = 0 excluded from the punctured minimum.
    double puncture_radius = 0.1;
    /// Redraws allowed per trial when a pair falls below commutator_floor.
    int max_redraws = 64;
    /// Worker threads; 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Throws InvalidConfig.
void validate(const ScanConfig& cfg);

struct GapMinimum {
    double t_star = 0.0;
    double min_gap = 0.0;
    /// Width of the final golden-section bracket.
    double bracket = 0.0;
};

/// Uniform grid over [lo, hi] (both ends included, plus t = 0 when inside),
/// then golden-section refinement of the lowest few grid local minima.
GapMinimum minimize_gap_on(const Effect& a, const Effect& b, double lo, double hi,
                           int grid_points, int refine_iters);

/// minimize_gap_on over cfg's window. Throws CommutingPair if ||[a, b]|| is
/// below cfg.commutator_floor.
GapMinimum minimize_gap(const Effect& a, const Effect& b, const ScanConfig& cfg);

/// Minimum over the window with (-puncture_radius, puncture_radius) removed.
/// Empty when nothing of the window survives.
std::optional<GapMinimum> minimize_gap_punctured(const Effect& a, const Effect& b,
                                                 const ScanConfig& cfg);

/// min_gap below this is labelled a candidate needing independent verification.
inline constexpr double kCandidateThreshold = 1e-8;
inline constexpr const char* kCandidateLabel =
    "candidate - requires independent high-precision verification";

struct ScanRecord {
    std::size_t trial = 0;
    double commutator_norm = 0.0;
    double t_star = 0.0;
    double min_gap = 0.0;
    std::optional<GapMinimum> punctured;
    Effect a;
    Effect b;
};

struct HistogramBin {
    double lo;
    double hi;
    std::size_t count;
};

struct ScanSummary {
    std::size_t recorded = 0;
    std::size_t skipped = 0;
    /// Indices into ScanReport::records ordered by min_gap ascending (ties by trial).
    std::vector<std::size_t> order;
    std::optional<std::size_t> global_min;
    std::optional<std::size_t> global_min_punctured;
    /// Decade bins [10^k, 10^{k+1}); the first bin also absorbs everything below it.
    std::vector<HistogramBin> histogram;
    std::size_t candidates = 0;
};

struct ScanReport {
    ScanConfig config;
    /// One entry per recorded trial, ascending by trial index.
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

/// Evaluates the given pairs, dropping those with ||[a, b]|| < commutator_floor.
/// Record trial indices are positions in `pairs`.
ScanReport scan_pairs(const std::vector<std::pair<Effect, Effect>>& pairs, const ScanConfig& cfg);

/// Draws cfg.trials random noncommuting pairs and minimizes the symmetry gap
/// of each. Output is identical for identical configs regardless of
/// cfg.threads.
ScanReport conjecture_scan(const ScanConfig& cfg);

ScanSummary summarize(const std::vector<ScanRecord>& records, std::size_t skipped);

}  // namespace qeffects::explorer
