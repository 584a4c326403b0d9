#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wceg/graph.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg {

class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct SolveOptions {
    bool keep_ties = false;           // retain all co-weighted paths, not one representative
    std::optional<VertexId> target;   // reporting hint only; the run is always all-destinations
    std::size_t max_labels = 0;       // ceiling on labels in flight, 0 = unlimited
    std::int64_t time_budget_ms = 0;  // wall-clock ceiling, 0 = unlimited
};

struct SolveStats {
    std::uint64_t processed = 0;    // labels dequeued and finalized
    std::uint64_t relaxations = 0;  // candidate labels created, enqueued or not
    std::uint64_t evictions = 0;    // queue labels removed by dominance
    std::uint64_t peak_queue = 0;   // max live labels in the queue
    double ms = 0.0;
};

using LabelId = std::int32_t;

// Pareto-optimal paths from one source to every vertex. Labels share
// structure through parent links; paths materialize only on reconstruct().
class SolveResult {
public:
    VertexId source() const { return source_; }
    ColourId colour_count() const { return k_; }
    const SolveStats& stats() const { return stats_; }
    SolveStats& stats() { return stats_; }

    // Finalization order; pairwise incomparable vectors (equal only under keep_ties).
    const std::vector<LabelId>& pareto(VertexId v) const {
        return closed_.at(static_cast<std::size_t>(v));
    }

    WeightVector weight(LabelId id) const {
        const std::int64_t* w = weights_.data() + static_cast<std::size_t>(id) * k_;
        return WeightVector(std::vector<std::int64_t>(w, w + k_));
    }

    VertexId end_vertex(LabelId id) const { return nodes_[static_cast<std::size_t>(id)].vertex; }

    std::vector<EdgeId> reconstruct(LabelId id) const {
        std::vector<EdgeId> path;
        for (LabelId cur = id; nodes_[static_cast<std::size_t>(cur)].parent >= 0;
             cur = nodes_[static_cast<std::size_t>(cur)].parent)
            path.push_back(nodes_[static_cast<std::size_t>(cur)].via_edge);
        std::reverse(path.begin(), path.end());
        return path;
    }

    std::vector<WeightVector> weight_set(VertexId v) const {
        std::vector<WeightVector> out;
        out.reserve(pareto(v).size());
        for (LabelId id : pareto(v)) out.push_back(weight(id));
        return out;
    }

private:
    friend class Solver;
    struct Node {
        VertexId vertex;
        LabelId parent;   // -1 for the empty path
        EdgeId via_edge;  // -1 for the empty path
    };

    VertexId source_ = 0;
    ColourId k_ = 0;
    std::vector<Node> nodes_;
    std::vector<std::int64_t> weights_;  // k components per label
    std::vector<std::vector<LabelId>> closed_;
    SolveStats stats_;
};

// Label-setting search over the dominance partial order. The queue pops by
// (component sum, lexicographic components, insertion sequence); the sum is a
// linear extension of dominance because strictly smaller vectors have
// strictly smaller sums.
class Solver {
public:
    Solver(const ColouredGraph& g, VertexId source, const SolveOptions& opts)
        : g_(g), opts_(opts), n_(g.vertex_count()), k_(g.colour_count()) {
        if (source < 0 || source >= n_) throw std::invalid_argument("source vertex out of range");
        if (opts.target && (*opts.target < 0 || *opts.target >= n_))
            throw std::invalid_argument("target vertex out of range");
        result_.source_ = source;
        result_.k_ = k_;
    }

    SolveResult run() {
        const auto t0 = std::chrono::steady_clock::now();
        words_ = static_cast<std::size_t>((n_ + 63) / 64);
        open_.assign(static_cast<std::size_t>(n_), {});
        result_.closed_.assign(static_cast<std::size_t>(n_), {});

        LabelId root = allocate();
        nodes_[static_cast<std::size_t>(root)] = {result_.source_, -1, -1, State::Open, 0};
        std::fill_n(&weights_[static_cast<std::size_t>(root) * k_], k_, 0);
        sums_[static_cast<std::size_t>(root)] = 0;
        std::fill_n(&visited_[static_cast<std::size_t>(root) * words_], words_, 0);
        set_visited(root, result_.source_);
        enqueue(root);

        std::vector<std::int64_t> cand(static_cast<std::size_t>(k_));
        std::vector<std::int64_t> base(static_cast<std::size_t>(k_));
        std::uint64_t live = 1, peak = 1;

        while (!heap_.empty()) {
            Entry top = heap_.front();
            std::pop_heap(heap_.begin(), heap_.end(), EntryAfter{this});
            heap_.pop_back();
            if (nodes_[static_cast<std::size_t>(top.id)].state == State::Zombie) {
                nodes_[static_cast<std::size_t>(top.id)].state = State::Free;
                free_.push_back(top.id);  // evicted while queued; slot reusable now
                continue;
            }
            nodes_[static_cast<std::size_t>(top.id)].state = State::Closed;
            const VertexId v = nodes_[static_cast<std::size_t>(top.id)].vertex;
            detach_from_open(top.id, v);
            --live;
            result_.closed_[static_cast<std::size_t>(v)].push_back(top.id);
            ++result_.stats_.processed;
            if ((result_.stats_.processed & 0x3ff) == 0) check_budget(t0);

            // allocate() can grow the arenas, so work from copies
            const std::int64_t base_sum = sums_[static_cast<std::size_t>(top.id)];
            std::copy_n(&weights_[static_cast<std::size_t>(top.id) * k_], k_, base.data());
            for (EdgeId eid : g_.out_edges(v)) {
                const Edge& e = g_.edge(eid);
                if (test_visited(top.id, e.to)) continue;  // only simple paths
                ++result_.stats_.relaxations;
                std::copy_n(base.data(), k_, cand.data());
                cand[static_cast<std::size_t>(e.colour)] =
                    checked_add(cand[static_cast<std::size_t>(e.colour)], e.weight);
                const std::int64_t cand_sum = checked_add(base_sum, e.weight);
                if (rejected_by(result_.closed_[static_cast<std::size_t>(e.to)], cand, cand_sum) ||
                    rejected_by(open_[static_cast<std::size_t>(e.to)], cand, cand_sum))
                    continue;
                evict_dominated(e.to, cand, cand_sum, live);

                LabelId id = allocate();
                nodes_[static_cast<std::size_t>(id)] = {e.to, top.id, eid, State::Open, 0};
                std::copy_n(cand.data(), k_, &weights_[static_cast<std::size_t>(id) * k_]);
                sums_[static_cast<std::size_t>(id)] = cand_sum;
                std::copy_n(&visited_[static_cast<std::size_t>(top.id) * words_], words_,
                            &visited_[static_cast<std::size_t>(id) * words_]);
                set_visited(id, e.to);
                enqueue(id);
                ++live;
                peak = std::max(peak, live);
            }
        }

        result_.stats_.peak_queue = peak;
        result_.nodes_.resize(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            result_.nodes_[i] = {nodes_[i].vertex, nodes_[i].parent, nodes_[i].via_edge};
        result_.weights_ = std::move(weights_);
        result_.stats_.ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        return std::move(result_);
    }

private:
    enum class State : std::uint8_t { Open, Closed, Zombie, Free };

    struct Node {
        VertexId vertex;
        LabelId parent;
        EdgeId via_edge;
        State state;
        std::uint32_t open_pos;  // index into open_[vertex] while state == Open
    };

    struct Entry {
        std::int64_t sum;
        std::uint32_t seq;
        LabelId id;
    };

    // "a comes after b" for the min-heap: sum, then lex components, then seq.
    // Weights of any queued label stay frozen until its entry pops, so the
    // ordering is stable even with slot recycling.
    struct EntryAfter {
        const Solver* s;
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.sum != b.sum) return a.sum > b.sum;
            const std::int64_t* wa = &s->weights_[static_cast<std::size_t>(a.id) * s->k_];
            const std::int64_t* wb = &s->weights_[static_cast<std::size_t>(b.id) * s->k_];
            for (ColourId i = 0; i < s->k_; ++i)
                if (wa[i] != wb[i]) return wa[i] > wb[i];
            return a.seq > b.seq;
        }
    };

    LabelId allocate() {
        if (!free_.empty()) {
            LabelId id = free_.back();
            free_.pop_back();
            return id;
        }
        if (opts_.max_labels && nodes_.size() >= opts_.max_labels)
            throw resource_limit_error("label ceiling of " + std::to_string(opts_.max_labels) +
                                       " labels in flight exceeded");
        nodes_.emplace_back();
        weights_.resize(weights_.size() + static_cast<std::size_t>(k_));
        sums_.resize(nodes_.size());
        visited_.resize(nodes_.size() * words_);
        return static_cast<LabelId>(nodes_.size() - 1);
    }

    void enqueue(LabelId id) {
        auto& open = open_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(id)].vertex)];
        nodes_[static_cast<std::size_t>(id)].open_pos = static_cast<std::uint32_t>(open.size());
        open.push_back(id);
        heap_.push_back(Entry{sums_[static_cast<std::size_t>(id)], seq_++, id});
        std::push_heap(heap_.begin(), heap_.end(), EntryAfter{this});
    }

    void detach_from_open(LabelId id, VertexId v) {
        auto& open = open_[static_cast<std::size_t>(v)];
        std::uint32_t pos = nodes_[static_cast<std::size_t>(id)].open_pos;
        open[pos] = open.back();
        nodes_[static_cast<std::size_t>(open[pos])].open_pos = pos;
        open.pop_back();
    }

    // True if some stored label's vector is <= cand (Equal rejects unless keep_ties).
    bool rejected_by(const std::vector<LabelId>& stored, const std::vector<std::int64_t>& cand,
                     std::int64_t cand_sum) const {
        for (LabelId t : stored) {
            const std::int64_t s = sums_[static_cast<std::size_t>(t)];
            if (s > cand_sum) continue;
            const std::int64_t* w = &weights_[static_cast<std::size_t>(t) * k_];
            bool le = true;
            for (ColourId i = 0; i < k_; ++i) {
                if (w[i] > cand[static_cast<std::size_t>(i)]) {
                    le = false;
                    break;
                }
            }
            if (!le) continue;
            if (s < cand_sum || !opts_.keep_ties) return true;  // equal sums + leq == Equal
        }
        return false;
    }

    void evict_dominated(VertexId u, const std::vector<std::int64_t>& cand, std::int64_t cand_sum,
                         std::uint64_t& live) {
        auto& open = open_[static_cast<std::size_t>(u)];
        for (std::size_t i = open.size(); i-- > 0;) {
            LabelId t = open[i];
            if (sums_[static_cast<std::size_t>(t)] <= cand_sum) continue;  // strict > needed
            const std::int64_t* w = &weights_[static_cast<std::size_t>(t) * k_];
            bool ge = true;
            for (ColourId c = 0; c < k_; ++c) {
                if (w[c] < cand[static_cast<std::size_t>(c)]) {
                    ge = false;
                    break;
                }
            }
            if (!ge) continue;
            nodes_[static_cast<std::size_t>(t)].state = State::Zombie;  // freed when its entry pops
            detach_from_open(t, u);
            --live;
            ++result_.stats_.evictions;
        }
    }

    void check_budget(std::chrono::steady_clock::time_point t0) const {
        if (!opts_.time_budget_ms) return;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        if (ms > opts_.time_budget_ms)
            throw resource_limit_error("time budget of " + std::to_string(opts_.time_budget_ms) +
                                       " ms exceeded");
    }

    bool test_visited(LabelId id, VertexId v) const {
        return (visited_[static_cast<std::size_t>(id) * words_ +
                         static_cast<std::size_t>(v) / 64] >>
                (static_cast<std::size_t>(v) % 64)) &
               1u;
    }

    void set_visited(LabelId id, VertexId v) {
        visited_[static_cast<std::size_t>(id) * words_ + static_cast<std::size_t>(v) / 64] |=
            std::uint64_t{1} << (static_cast<std::size_t>(v) % 64);
    }

    const ColouredGraph& g_;
    SolveOptions opts_;
    VertexId n_;
    ColourId k_;
    std::size_t words_ = 1;

    std::vector<Node> nodes_;
    std::vector<std::int64_t> weights_;
    std::vector<std::int64_t> sums_;
    std::vector<std::uint64_t> visited_;
    std::vector<LabelId> free_;
    std::vector<Entry> heap_;
    std::vector<std::vector<LabelId>> open_;
    std::uint32_t seq_ = 0;

    SolveResult result_;
};

inline SolveResult solve(const ColouredGraph& g, VertexId source, const SolveOptions& opts = {}) {
    return Solver(g, source, opts).run();
}

}  // namespace wceg
