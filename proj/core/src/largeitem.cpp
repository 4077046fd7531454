#include "ftc/largeitem.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace ftc {

namespace {

bool is_large(std::uint32_t count, std::size_t cluster_size, double theta) {
    return static_cast<double>(count) >= theta * static_cast<double>(cluster_size);
}

void check_config(const LargeItemConfig& config) {
    if (!(config.theta > 0.0) || config.theta > 1.0) {
        throw std::invalid_argument("LargeItem theta must be in (0, 1]");
    }
    if (config.w < 0.0) {
        throw std::invalid_argument("LargeItem weight must be >= 0");
    }
}

// Incremental LargeItem state. Costs are maintained through per-item global
// tallies of how many clusters hold the item as small / as large:
//   Intra = #{j : small_in[j] > 0}
//   Inter = sum_j large_in[j] - #{j : large_in[j] > 0}
// A transaction move touches at most two clusters; its cost delta is
// evaluated from the status transitions of the affected items only.
class LiEngine {
public:
    LiEngine(const TransactionDataset& dataset, const LargeItemConfig& config)
        : dataset_(dataset),
          config_(config),
          assignment_(dataset.size(), -1),
          small_in_(dataset.dictionary().size(), 0),
          large_in_(dataset.dictionary().size(), 0) {}

    void load(const Clustering& clustering) {
        for (const Cluster& c : clustering.clusters) {
            const auto slot = static_cast<std::int32_t>(slots_.size());
            Slot s;
            s.alive = true;
            s.n = c.size();
            for (const auto& [item, count] : c.item_counts) {
                s.counts.emplace(item, count);
                account_status(item, count, c.size(), +1);
            }
            slots_.push_back(std::move(s));
            for (TransactionId tid : c.members) assignment_[tid] = slot;
            ++alive_;
        }
    }

    double total_cost() const {
        return config_.w * static_cast<double>(intra_) +
               (static_cast<double>(sum_large_) - static_cast<double>(large_distinct_));
    }

    std::size_t alive_clusters() const { return alive_; }
    std::int32_t slot_of(TransactionId tid) const { return assignment_[tid]; }
    std::size_t slot_count() const { return slots_.size(); }
    bool slot_alive(std::size_t s) const { return slots_[s].alive; }

    /// Cost delta of adding tid to slot (no mutation).
    double eval_add(TransactionId tid, std::size_t slot) const {
        DeltaProbe probe(*this);
        probe_add(probe, tid, slot);
        return probe.cost_delta();
    }

    /// Cost delta of making a fresh singleton cluster for tid.
    double eval_new(TransactionId tid) const {
        DeltaProbe probe(*this);
        probe_new(probe, tid);
        return probe.cost_delta();
    }

    /// Cost delta of moving tid from its current slot to `slot`.
    double eval_move(TransactionId tid, std::size_t slot) const {
        DeltaProbe probe(*this);
        probe_remove(probe, tid, static_cast<std::size_t>(assignment_[tid]));
        probe_add(probe, tid, slot);
        return probe.cost_delta();
    }

    void place_new(TransactionId tid) {
        std::size_t slot = slots_.size();
        slots_.emplace_back();
        slots_[slot].alive = true;
        ++alive_;
        apply_add(tid, slot);
    }

    void place(TransactionId tid, std::size_t slot) { apply_add(tid, slot); }

    void move(TransactionId tid, std::size_t slot) {
        apply_remove(tid, static_cast<std::size_t>(assignment_[tid]));
        apply_add(tid, slot);
    }

    Clustering export_clustering() const {
        Clustering result;
        result.n_transactions = dataset_.size();
        std::vector<std::int32_t> dense(slots_.size(), -1);
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            if (!slots_[s].alive) continue;
            dense[s] = static_cast<std::int32_t>(result.clusters.size());
            Cluster c;
            c.id = static_cast<std::uint32_t>(result.clusters.size());
            c.item_counts.assign(slots_[s].counts.begin(), slots_[s].counts.end());
            std::sort(c.item_counts.begin(), c.item_counts.end());
            for (const auto& [item, n] : c.item_counts) c.total_occurrences += n;
            result.clusters.push_back(std::move(c));
        }
        for (TransactionId tid = 0; tid < dataset_.size(); ++tid) {
            if (assignment_[tid] < 0) continue;
            result.clusters[static_cast<std::size_t>(dense[assignment_[tid]])].members.push_back(
                tid);
        }
        return result;
    }

private:
    enum class Status { absent, small, large };

    struct Slot {
        bool alive = false;
        std::size_t n = 0;
        std::unordered_map<ItemId, std::uint32_t> counts;
    };

    // Accumulates status transitions against the live tallies without
    // mutating them; items touched twice (remove + add) compose through the
    // local delta map.
    class DeltaProbe {
    public:
        explicit DeltaProbe(const LiEngine& engine) : engine_(engine) {}

        void transition(ItemId item, Status from, Status to) {
            if (from == to) return;
            auto& d = local_[item];
            if (from == Status::small || to == Status::small) {
                const long before = static_cast<long>(engine_.small_in_[item]) + d.first;
                d.first += (to == Status::small) - (from == Status::small);
                const long after = static_cast<long>(engine_.small_in_[item]) + d.first;
                if (before == 0 && after > 0) ++d_intra_;
                if (before > 0 && after == 0) --d_intra_;
            }
            if (from == Status::large || to == Status::large) {
                const long before = static_cast<long>(engine_.large_in_[item]) + d.second;
                const int step = (to == Status::large) - (from == Status::large);
                d.second += step;
                d_sum_large_ += step;
                const long after = static_cast<long>(engine_.large_in_[item]) + d.second;
                if (before == 0 && after > 0) ++d_large_distinct_;
                if (before > 0 && after == 0) --d_large_distinct_;
            }
        }

        double cost_delta() const {
            return engine_.config_.w * static_cast<double>(d_intra_) +
                   (static_cast<double>(d_sum_large_) - static_cast<double>(d_large_distinct_));
        }

    private:
        const LiEngine& engine_;
        std::unordered_map<ItemId, std::pair<int, int>> local_;  // (d small_in, d large_in)
        long d_intra_ = 0;
        long d_sum_large_ = 0;
        long d_large_distinct_ = 0;
    };

    Status status(std::uint32_t count, std::size_t n) const {
        if (count == 0) return Status::absent;
        return is_large(count, n, config_.theta) ? Status::large : Status::small;
    }

    void probe_add(DeltaProbe& probe, TransactionId tid, std::size_t slot) const {
        const Slot& s = slots_[slot];
        const auto& items = dataset_.transaction(tid).items;
        for (ItemId item : items) {
            auto it = s.counts.find(item);
            const std::uint32_t count = it == s.counts.end() ? 0 : it->second;
            probe.transition(item, status(count, s.n), status(count + 1, s.n + 1));
        }
        // growing the cluster can demote items the transaction does not carry
        for (const auto& [item, count] : s.counts) {
            if (std::binary_search(items.begin(), items.end(), item)) continue;
            probe.transition(item, status(count, s.n), status(count, s.n + 1));
        }
    }

    void probe_new(DeltaProbe& probe, TransactionId tid) const {
        for (ItemId item : dataset_.transaction(tid).items) {
            probe.transition(item, Status::absent, status(1, 1));
        }
    }

    void probe_remove(DeltaProbe& probe, TransactionId tid, std::size_t slot) const {
        const Slot& s = slots_[slot];
        const auto& items = dataset_.transaction(tid).items;
        for (ItemId item : items) {
            const std::uint32_t count = s.counts.at(item);
            probe.transition(item, status(count, s.n),
                             s.n == 1 ? Status::absent : status(count - 1, s.n - 1));
        }
        if (s.n == 1) return;
        for (const auto& [item, count] : s.counts) {
            if (std::binary_search(items.begin(), items.end(), item)) continue;
            probe.transition(item, status(count, s.n), status(count, s.n - 1));
        }
    }

    // tally bookkeeping for one (item, cluster) status
    void account_status(ItemId item, std::uint32_t count, std::size_t n, int direction) {
        switch (status(count, n)) {
            case Status::absent:
                break;
            case Status::small:
                if (direction > 0) {
                    if (small_in_[item]++ == 0) ++intra_;
                } else {
                    if (--small_in_[item] == 0) --intra_;
                }
                break;
            case Status::large:
                if (direction > 0) {
                    ++sum_large_;
                    if (large_in_[item]++ == 0) ++large_distinct_;
                } else {
                    --sum_large_;
                    if (--large_in_[item] == 0) --large_distinct_;
                }
                break;
        }
    }

    void apply_add(TransactionId tid, std::size_t slot) {
        Slot& s = slots_[slot];
        const auto& items = dataset_.transaction(tid).items;
        // retire old statuses of every item in the cluster, then re-account
        for (const auto& [item, count] : s.counts) account_status(item, count, s.n, -1);
        for (ItemId item : items) ++s.counts[item];
        ++s.n;
        for (const auto& [item, count] : s.counts) account_status(item, count, s.n, +1);
        assignment_[tid] = static_cast<std::int32_t>(slot);
    }

    void apply_remove(TransactionId tid, std::size_t slot) {
        Slot& s = slots_[slot];
        const auto& items = dataset_.transaction(tid).items;
        for (const auto& [item, count] : s.counts) account_status(item, count, s.n, -1);
        for (ItemId item : items) {
            auto it = s.counts.find(item);
            if (--it->second == 0) s.counts.erase(it);
        }
        --s.n;
        for (const auto& [item, count] : s.counts) account_status(item, count, s.n, +1);
        assignment_[tid] = -1;
        if (s.n == 0) {
            s.alive = false;
            --alive_;
        }
    }

    const TransactionDataset& dataset_;
    LargeItemConfig config_;
    std::vector<Slot> slots_;
    std::vector<std::int32_t> assignment_;
    std::vector<std::uint32_t> small_in_;
    std::vector<std::uint32_t> large_in_;
    std::size_t intra_ = 0;
    std::size_t sum_large_ = 0;
    std::size_t large_distinct_ = 0;
    std::size_t alive_ = 0;

    friend class DeltaProbe;
};

}  // namespace

std::pair<std::vector<ItemId>, std::vector<ItemId>> large_small_split(const Cluster& cluster,
                                                                      double theta) {
    if (!(theta > 0.0) || theta > 1.0) {
        throw std::invalid_argument("LargeItem theta must be in (0, 1]");
    }
    std::vector<ItemId> large;
    std::vector<ItemId> small;
    for (const auto& [item, count] : cluster.item_counts) {
        if (is_large(count, cluster.size(), theta)) {
            large.push_back(item);
        } else {
            small.push_back(item);
        }
    }
    return {std::move(large), std::move(small)};
}

CostBreakdown cost(const Clustering& clustering, const LargeItemConfig& config) {
    check_config(config);
    std::unordered_set<ItemId> small_union;
    std::unordered_set<ItemId> large_union;
    std::size_t sum_large = 0;
    for (const Cluster& c : clustering.clusters) {
        auto [large, small] = large_small_split(c, config.theta);
        sum_large += large.size();
        large_union.insert(large.begin(), large.end());
        small_union.insert(small.begin(), small.end());
    }
    CostBreakdown breakdown;
    breakdown.intra = small_union.size();
    breakdown.inter = sum_large - large_union.size();
    breakdown.total =
        config.w * static_cast<double>(breakdown.intra) + static_cast<double>(breakdown.inter);
    return breakdown;
}

Clustering li_allocate(const TransactionDataset& dataset, const LargeItemConfig& config) {
    check_config(config);
    if (dataset.size() == 0) {
        throw std::invalid_argument("li_allocate: empty dataset");
    }
    LiEngine engine(dataset, config);
    for (TransactionId tid = 0; tid < dataset.size(); ++tid) {
        double best_delta = std::numeric_limits<double>::infinity();
        std::int32_t best_slot = -1;
        for (std::size_t s = 0; s < engine.slot_count(); ++s) {
            if (!engine.slot_alive(s)) continue;
            const double delta = engine.eval_add(tid, s);
            if (delta < best_delta) {
                best_delta = delta;
                best_slot = static_cast<std::int32_t>(s);
            }
        }
        // an existing cluster wins cost ties against a fresh one
        if (best_slot < 0 || engine.eval_new(tid) < best_delta) {
            engine.place_new(tid);
        } else {
            engine.place(tid, static_cast<std::size_t>(best_slot));
        }
    }
    return engine.export_clustering();
}

LiRefineResult li_refine(const Clustering& clustering, const TransactionDataset& dataset,
                         const LargeItemConfig& config) {
    check_config(config);
    validate_partition(clustering);
    if (clustering.n_transactions != dataset.size()) {
        throw std::invalid_argument("li_refine: clustering does not match dataset");
    }

    LiEngine engine(dataset, config);
    engine.load(clustering);

    LiRefineResult result;
    result.cost_trace.push_back(engine.total_cost());
    while (result.passes < config.max_refine_passes) {
        ++result.passes;
        bool moved = false;
        for (TransactionId tid = 0; tid < dataset.size(); ++tid) {
            const auto current = static_cast<std::size_t>(engine.slot_of(tid));
            double best_delta = 0.0;  // staying put
            std::int32_t best_slot = -1;
            for (std::size_t s = 0; s < engine.slot_count(); ++s) {
                if (s == current || !engine.slot_alive(s)) continue;
                const double delta = engine.eval_move(tid, s);
                if (delta < best_delta) {
                    best_delta = delta;
                    best_slot = static_cast<std::int32_t>(s);
                }
            }
            if (best_slot >= 0) {
                engine.move(tid, static_cast<std::size_t>(best_slot));
                moved = true;
            }
        }
        result.cost_trace.push_back(engine.total_cost());
        if (!moved) {
            result.converged = true;
            break;
        }
    }
    result.clustering = engine.export_clustering();
    return result;
}

}  // namespace ftc
