#include "qeffects/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace qeffects::explorer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double largest_abs_eigenvalue(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

constexpr double kInvPhi = 0.6180339887498949;
constexpr double kBracketTarget = 1e-10;
constexpr int kMaxGoldenIters = 200;
// grid local minima that get a golden-section pass
constexpr std::size_t kRefinedBasins = 8;

std::optional<ScanRecord> evaluate_pair(std::size_t trial, const Effect& a, const Effect& b,
                                        const ScanConfig& cfg) {
    const double cnorm = spectral_norm(commutator(a.matrix(), b.matrix()));
    if (cnorm < cfg.commutator_floor) return std::nullopt;
    const GapMinimum full = minimize_gap(a, b, cfg);
    return ScanRecord{trial, cnorm, full.t_star, full.min_gap, minimize_gap_punctured(a, b, cfg), a, b};
}

template <typename Work>
void run_indexed(std::size_t count, unsigned threads, Work&& work) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }

    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += threads) work(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

Effect random_effect(Index dim, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix g(dim, dim);
    for (Index j = 0; j < dim; ++j) {
        for (Index i = 0; i < dim; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    }
    const ComplexMatrix h = 0.5 * (g + g.adjoint());
    double scale = largest_abs_eigenvalue(h);
    if (scale == 0.0) scale = 1.0;
    const ComplexMatrix id = ComplexMatrix::Identity(dim, dim);
    return validate_effect(ComplexMatrix(0.5 * (id + h / scale)));
}

SymmetryGap::SymmetryGap(const Effect& a, const Effect& b)
    : a_(a),
      b_(b),
      ab_(a.sqrt() * b.matrix() * a.sqrt()),
      ba_(b.sqrt() * a.matrix() * b.sqrt()) {
    require_same_dim(a.dim(), b.dim(), "symmetry_gap");
}

double SymmetryGap::operator()(double t) const {
    const ComplexMatrix ua = a_.unitary(t);
    const ComplexMatrix ub = b_.unitary(t);
    ComplexMatrix diff = ua * ab_ * ua.adjoint() - ub * ba_ * ub.adjoint();
    diff = 0.5 * (diff + diff.adjoint());
    return largest_abs_eigenvalue(diff);
}

double symmetry_gap(const Effect& a, const Effect& b, double t) { return SymmetryGap(a, b)(t); }

void validate(const ScanConfig& cfg) {
    auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidConfig, what); };
    if (cfg.dim < 2 || cfg.dim > 8) fail("dim must lie in [2, 8]");
    if (cfg.trials < 0) fail("trials must be nonnegative");
    if (!(cfg.t_min < cfg.t_max)) fail("t_min must be smaller than t_max");
    if (!std::isfinite(cfg.t_min) || !std::isfinite(cfg.t_max)) fail("time window must be finite");
    if (cfg.grid_points < 8) fail("grid_points must be at least 8");
    if (cfg.refine_iters < 1) fail("refine_iters must be positive");
    if (!(cfg.commutator_floor > 0.0)) fail("commutator_floor must be positive");
    if (!(cfg.puncture_radius >= 0.0)) fail("puncture_radius must be nonnegative");
    if (cfg.max_redraws < 1) fail("max_redraws must be positive");
}

GapMinimum minimize_gap_on(const Effect& a, const Effect& b, double lo, double hi,
                           int grid_points, int refine_iters) {
    const SymmetryGap gap(a, b);
    const int n = std::max(grid_points, 2);
    const double step = (hi - lo) / (n - 1);

    // t = 0 is where the gap tends to sit in a narrow kink, so it is always a node
    std::vector<double> ts;
    ts.reserve(n + 1);
    for (int i = 0; i < n; ++i) ts.push_back(i == n - 1 ? hi : lo + step * i);
    if (lo < 0.0 && hi > 0.0) ts.insert(std::upper_bound(ts.begin(), ts.end(), 0.0), 0.0);
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    const int m = static_cast<int>(ts.size());
    std::vector<double> gs(m);
    for (int i = 0; i < m; ++i) gs[i] = gap(ts[i]);

    std::vector<int> basins;
    for (int i = 0; i < m; ++i) {
        if ((i == 0 || gs[i] <= gs[i - 1]) && (i == m - 1 || gs[i] <= gs[i + 1])) basins.push_back(i);
    }
    std::stable_sort(basins.begin(), basins.end(), [&](int l, int r) { return gs[l] < gs[r]; });
    if (basins.size() > kRefinedBasins) basins.resize(kRefinedBasins);

    GapMinimum out{ts[basins.front()], gs[basins.front()], 0.0};
    for (int best : basins) {
        double left = ts[std::max(best - 1, 0)];
        double right = ts[std::min(best + 1, m - 1)];
        double t_best = ts[best];
        double g_best = gs[best];

        double x1 = right - kInvPhi * (right - left);
        double x2 = left + kInvPhi * (right - left);
        double f1 = gap(x1);
        double f2 = gap(x2);
        for (int iter = 0; iter < kMaxGoldenIters; ++iter) {
            if (iter >= refine_iters && right - left < kBracketTarget) break;
            if (f1 < f2) {
                right = x2;
                x2 = x1;
                f2 = f1;
                x1 = right - kInvPhi * (right - left);
                f1 = gap(x1);
            } else {
                left = x1;
                x1 = x2;
                f1 = f2;
                x2 = left + kInvPhi * (right - left);
                f2 = gap(x2);
            }
        }
        for (auto [t, g] : {std::pair{x1, f1}, std::pair{x2, f2}}) {
            if (g < g_best) {
                g_best = g;
                t_best = t;
            }
        }
        if (best == basins.front() || g_best < out.min_gap) out = {t_best, g_best, right - left};
    }
    return out;
}

GapMinimum minimize_gap(const Effect& a, const Effect& b, const ScanConfig& cfg) {
    require_same_dim(a.dim(), b.dim(), "minimize_gap");
    const double cnorm = spectral_norm(commutator(a.matrix(), b.matrix()));
    if (cnorm < cfg.commutator_floor) {
        throw Error(ErrorKind::CommutingPair, "||[a, b]|| below commutator_floor", cnorm);
    }
    return minimize_gap_on(a, b, cfg.t_min, cfg.t_max, cfg.grid_points, cfg.refine_iters);
}

std::optional<GapMinimum> minimize_gap_punctured(const Effect& a, const Effect& b,
                                                 const ScanConfig& cfg) {
    const double r = cfg.puncture_radius;
    std::vector<std::pair<double, double>> pieces;
    if (cfg.t_min < -r) pieces.emplace_back(cfg.t_min, std::min(cfg.t_max, -r));
    if (cfg.t_max > r) pieces.emplace_back(std::max(cfg.t_min, r), cfg.t_max);

    const double total = cfg.t_max - cfg.t_min;
    std::optional<GapMinimum> best;
    for (auto [lo, hi] : pieces) {
        if (!(hi > lo)) continue;
        const int points = std::max(8, static_cast<int>(std::lround(cfg.grid_points * (hi - lo) / total)));
        const GapMinimum m = minimize_gap_on(a, b, lo, hi, points, cfg.refine_iters);
        if (!best || m.min_gap < best->min_gap) best = m;
    }
    return best;
}

ScanSummary summarize(const std::vector<ScanRecord>& records, std::size_t skipped) {
    ScanSummary s;
    s.recorded = records.size();
    s.skipped = skipped;

    s.order.resize(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) s.order[i] = i;
    std::stable_sort(s.order.begin(), s.order.end(), [&](std::size_t l, std::size_t r) {
        return records[l].min_gap < records[r].min_gap;
    });
    if (!s.order.empty()) s.global_min = s.order.front();

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& p = records[i].punctured;
        if (!p) continue;
        if (!s.global_min_punctured || p->min_gap < records[*s.global_min_punctured].punctured->min_gap) {
            s.global_min_punctured = i;
        }
    }

    constexpr int kLowestDecade = -16;
    constexpr int kHighestDecade = 1;
    for (int k = kLowestDecade; k < kHighestDecade; ++k) {
        s.histogram.push_back({std::pow(10.0, k), std::pow(10.0, k + 1), 0});
    }
    if (!records.empty()) s.histogram.front().lo = 0.0;
    for (const auto& r : records) {
        if (r.min_gap < kCandidateThreshold) ++s.candidates;
        const int decade = r.min_gap > 0.0 ? static_cast<int>(std::floor(std::log10(r.min_gap))) : kLowestDecade;
        const int bin = std::clamp(decade, kLowestDecade, kHighestDecade - 1) - kLowestDecade;
        ++s.histogram[static_cast<std::size_t>(bin)].count;
    }
    if (records.empty()) s.histogram.clear();
    return s;
}

ScanReport scan_pairs(const std::vector<std::pair<Effect, Effect>>& pairs, const ScanConfig& cfg) {
    validate(cfg);
    std::vector<std::optional<ScanRecord>> slots(pairs.size());
    run_indexed(pairs.size(), cfg.threads, [&](std::size_t i) {
        slots[i] = evaluate_pair(i, pairs[i].first, pairs[i].second, cfg);
    });

    ScanReport report{cfg, {}, {}};
    std::size_t skipped = 0;
    for (auto& slot : slots) {
        if (slot) report.records.push_back(std::move(*slot));
        else ++skipped;
    }
    report.summary = summarize(report.records, skipped);
    return report;
}

ScanReport conjecture_scan(const ScanConfig& cfg) {
    validate(cfg);
    const auto trials = static_cast<std::size_t>(cfg.trials);
    std::vector<std::optional<ScanRecord>> slots(trials);
    run_indexed(trials, cfg.threads, [&](std::size_t i) {
        Rng rng = trial_rng(cfg.seed, i);
        for (int attempt = 0; attempt < cfg.max_redraws; ++attempt) {
            Effect a = random_effect(cfg.dim, rng);
            Effect b = random_effect(cfg.dim, rng);
            if (auto record = evaluate_pair(i, a, b, cfg)) {
                slots[i] = std::move(record);
                return;
            }
        }
    });

    ScanReport report{cfg, {}, {}};
    std::size_t skipped = 0;
    for (auto& slot : slots) {
        if (slot) report.records.push_back(std::move(*slot));
        else ++skipped;
    }
    report.summary = summarize(report.records, skipped);
    return report;
}

}  // namespace qeffects::explorer
