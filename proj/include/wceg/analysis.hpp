#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "wceg/fixed_decimal.hpp"
#include "wceg/generator.hpp"
#include "wceg/prng.hpp"
#include "wceg/solver.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg {

// Per-colour positive price factors; a path's aggregate cost is the sum of
// its components scaled by these. Any such model is increasing in every
// component, so its optimum over all paths is attained inside the Pareto set.
struct CostModel {
    std::vector<std::int64_t> factors;  // units of 10^-scale, all > 0
    int scale = 3;

    static CostModel unit(std::size_t k, int scale = 3) {
        CostModel m;
        m.scale = scale;
        m.factors.assign(k, pow10_units(scale));
        return m;
    }

    void validate(std::size_t k) const {
        if (factors.size() != k)
            throw std::invalid_argument("cost model has wrong colour count");
        for (std::int64_t f : factors)
            if (f <= 0) throw std::invalid_argument("cost factors must be positive");
    }
};

using Aggregate = __int128;

inline Aggregate aggregate_cost(const CostModel& m, const WeightVector& w) {
    Aggregate total = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        total += static_cast<Aggregate>(m.factors[i]) * w[i];
    return total;
}

// Aggregates carry scale (model scale + weight scale); render them exactly.
inline std::string format_aggregate(Aggregate units, int combined_scale) {
    bool neg = units < 0;
    if (neg) units = -units;
    std::string digits;
    while (units > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(units % 10)));
        units /= 10;
    }
    if (digits.empty()) digits = "0";
    std::reverse(digits.begin(), digits.end());
    if (static_cast<int>(digits.size()) <= combined_scale)
        digits.insert(digits.begin(), combined_scale + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - combined_scale);
    std::string frac = digits.substr(digits.size() - combined_scale);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
    return neg ? "-" + out : out;
}

struct CostEvaluation {
    std::size_t index;      // position in the evaluated set
    Aggregate aggregate;    // units of 10^-(model scale + weight scale)
};

// Minimizer of the aggregate over a Pareto set; ties go to the
// lexicographically smallest weight vector, then the earliest entry.
inline std::optional<CostEvaluation> evaluate_cost(const std::vector<WeightVector>& set,
                                                   const CostModel& model) {
    if (set.empty()) return std::nullopt;
    model.validate(set.front().size());
    std::optional<CostEvaluation> best;
    for (std::size_t i = 0; i < set.size(); ++i) {
        Aggregate agg = aggregate_cost(model, set[i]);
        if (!best || agg < best->aggregate ||
            (agg == best->aggregate && lex_less(set[i].components(), set[best->index].components())))
            best = CostEvaluation{i, agg};
    }
    return best;
}

struct Breakpoint {
    std::int64_t num = 0;  // exact rational factor where the optimum changes
    std::int64_t den = 1;
    std::size_t index = 0;  // entry that becomes optimal above the breakpoint
    double factor() const { return static_cast<double>(num) / static_cast<double>(den); }
};

namespace detail {

inline void reduce_fraction(Aggregate& num, Aggregate& den) {
    Aggregate a = num < 0 ? -num : num, b = den;
    while (b) {
        Aggregate t = a % b;
        a = b;
        b = t;
    }
    if (a) {
        num /= a;
        den /= a;
    }
}

}  // namespace detail

// Sweep one colour's factor over (0, inf) with the other factors fixed at
// the base model. Every aggregate is linear in the swept factor, so the
// optimum follows the lower envelope of lines; breakpoints are the exact
// rational crossings that change the winner, in increasing order.
inline std::vector<Breakpoint> crossover_threshold(const std::vector<WeightVector>& set,
                                                   ColourId colour, const CostModel& base) {
    if (set.empty()) throw std::invalid_argument("crossover sweep needs a non-empty set");
    base.validate(set.front().size());
    if (colour < 0 || static_cast<std::size_t>(colour) >= set.front().size())
        throw std::invalid_argument("swept colour out of range");

    struct Line {
        Aggregate a;  // fixed part: sum of non-swept scaled components
        Aggregate b;  // coefficient of the swept factor: the colour's weight
        std::size_t index;
    };
    // one line per distinct slope: keep the lowest intercept (ties by lex vector)
    std::map<Aggregate, Line> by_slope;
    for (std::size_t i = 0; i < set.size(); ++i) {
        Aggregate a = 0;
        for (std::size_t c = 0; c < set[i].size(); ++c)
            if (c != static_cast<std::size_t>(colour))
                a += static_cast<Aggregate>(base.factors[c]) * set[i][c];
        Aggregate b = set[i][static_cast<std::size_t>(colour)];
        auto [it, inserted] = by_slope.try_emplace(b, Line{a, b, i});
        if (!inserted && (a < it->second.a ||
                          (a == it->second.a && lex_less(set[i].components(),
                                                         set[it->second.index].components()))))
            it->second = Line{a, b, i};
    }
    std::vector<Line> lines;
    lines.reserve(by_slope.size());
    for (auto& [slope, line] : by_slope) lines.push_back(line);

    // start of the envelope as the factor tends to 0+
    std::size_t cur = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].a < lines[cur].a ||
            (lines[i].a == lines[cur].a && lines[i].b < lines[cur].b))
            cur = i;
    }

    std::vector<Breakpoint> out;
    Aggregate t_num = 0, t_den = 1;  // current position of the sweep
    while (true) {
        std::optional<std::size_t> next;
        Aggregate best_num = 0, best_den = 1;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].b >= lines[cur].b) continue;  // only flatter lines can take over
            Aggregate num = lines[i].a - lines[cur].a;
            Aggregate den = lines[cur].b - lines[i].b;
            if (num <= 0) continue;  // never ahead of the current winner
            // candidate crossing num/den; want the smallest strictly past t
            if (num * t_den <= t_num * den) continue;
            if (!next || num * best_den < best_num * den ||
                (num * best_den == best_num * den && lines[i].b < lines[*next].b)) {
                next = i;
                best_num = num;
                best_den = den;
            }
        }
        if (!next) break;
        detail::reduce_fraction(best_num, best_den);
        t_num = best_num;  // sweep position stays in model units
        t_den = best_den;
        // crossings come out in model units; report a dimensionless factor
        Aggregate out_num = best_num, out_den = best_den * pow10_units(base.scale);
        detail::reduce_fraction(out_num, out_den);
        if (out_num > std::numeric_limits<std::int64_t>::max() ||
            out_den > std::numeric_limits<std::int64_t>::max())
            throw overflow_error("crossover breakpoint does not fit 64 bits");
        out.push_back(Breakpoint{static_cast<std::int64_t>(out_num),
                                 static_cast<std::int64_t>(out_den), lines[*next].index});
        cur = *next;
    }
    return out;
}

struct ExperimentRecord {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    VertexId source = 0;
    double mean_cardinality = 0.0;  // mean |M_sv| over v != source
    std::uint64_t max_cardinality = 0;
    std::uint64_t processed = 0;
    double ms = 0.0;
};

struct ExperimentOptions {
    WeightRange range{};
    int scale = 3;
    int threads = 1;
    double total_budget_ms = 0;  // 0 = unlimited; exceeded -> truncated results
};

struct ExperimentResult {
    std::vector<ExperimentRecord> records;
    bool truncated = false;
};

// One record per (n, repetition): generate a complete multigraph, solve from
// vertex 0, report Pareto cardinality statistics and processed-path counts.
// Per-instance seeds derive from (seed, n, rep), so records are reproducible
// independent of scheduling.
inline ExperimentResult run_experiment(const std::vector<int>& n_values, int k, int reps,
                                       std::uint64_t seed, const ExperimentOptions& opts = {}) {
    if (k < 1 || reps < 0) throw std::invalid_argument("invalid experiment parameters");
    struct Task {
        int n;
        int rep;
    };
    std::vector<Task> tasks;
    for (int n : n_values) {
        if (n < 2) throw std::invalid_argument("experiment requires n >= 2");
        for (int rep = 0; rep < reps; ++rep) tasks.push_back({n, rep});
    }

    ExperimentResult result;
    result.records.resize(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> out_of_budget{false};
    const auto t0 = std::chrono::steady_clock::now();

    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size()) return;
            if (opts.total_budget_ms > 0) {
                double elapsed = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0)
                                     .count();
                if (elapsed > opts.total_budget_ms) {
                    out_of_budget.store(true);
                    continue;
                }
            }
            const Task& task = tasks[i];
            std::uint64_t instance_seed =
                derive_seed(seed, static_cast<std::uint64_t>(task.n),
                            static_cast<std::uint64_t>(task.rep));
            ColouredGraph g =
                complete_multigraph(task.n, k, instance_seed, opts.range, opts.scale);
            SolveResult res = solve(g, 0);
            ExperimentRecord rec;
            rec.n = task.n;
            rec.k = k;
            rec.seed = instance_seed;
            rec.source = 0;
            std::uint64_t total = 0;
            for (VertexId v = 1; v < g.vertex_count(); ++v) {
                std::uint64_t size = res.pareto(v).size();
                total += size;
                rec.max_cardinality = std::max(rec.max_cardinality, size);
            }
            rec.mean_cardinality = static_cast<double>(total) / (task.n - 1);
            rec.processed = res.stats().processed;
            rec.ms = res.stats().ms;
            result.records[i] = rec;
            done[i] = 1;
        }
    };

    int threads = std::max(opts.threads, 1);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (out_of_budget.load()) {
        result.truncated = true;
        std::vector<ExperimentRecord> kept;
        for (std::size_t i = 0; i < tasks.size(); ++i)
            if (done[i]) kept.push_back(result.records[i]);
        result.records = std::move(kept);
    }
    return result;
}

enum class FitField { MeanCardinality, Processed };

struct PowerLawFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

// Least-squares line through (log n, log field), the field averaged per n.
// The slope is the fitted growth order.
inline PowerLawFit fit_power_law(const std::vector<ExperimentRecord>& records, FitField field) {
    std::map<int, std::pair<double, int>> per_n;  // n -> (sum, count)
    for (const ExperimentRecord& r : records) {
        double value = field == FitField::MeanCardinality ? r.mean_cardinality
                                                          : static_cast<double>(r.processed);
        if (!(value > 0.0))
            throw std::invalid_argument("power-law fit requires positive field values");
        auto& slot = per_n[r.n];
        slot.first += value;
        slot.second += 1;
    }
    if (per_n.size() < 3)
        throw std::invalid_argument("power-law fit requires at least 3 distinct n values");

    std::vector<double> xs, ys;
    for (const auto& [n, sum_count] : per_n) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(sum_count.first / sum_count.second));
    }
    const double count = static_cast<double>(xs.size());
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / count;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / count;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double pred = fit.intercept + fit.exponent * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
    }
    fit.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

}  // namespace wceg
