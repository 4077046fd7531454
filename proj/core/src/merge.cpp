#include "ftc/merge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace ftc {

double item_weight(const Cluster& cluster, ItemId item) {
    if (cluster.total_occurrences == 0) return 0.0;
    return static_cast<double>(cluster.count_of(item)) /
           static_cast<double>(cluster.total_occurrences);
}

double cluster_similarity(const Cluster& ci, const Cluster& cj) {
    // Merge-walk over the two sorted count maps; numerators stay integral.
    std::uint64_t shared_i = 0;
    std::uint64_t shared_j = 0;
    auto a = ci.item_counts.begin();
    auto b = cj.item_counts.begin();
    while (a != ci.item_counts.end() && b != cj.item_counts.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            shared_i += a->second;
            shared_j += b->second;
            ++a;
            ++b;
        }
    }
    if (shared_i == 0) return 0.0;
    return (static_cast<double>(shared_i) / static_cast<double>(ci.total_occurrences)) *
           (static_cast<double>(shared_j) / static_cast<double>(cj.total_occurrences));
}

bool SimilarityList::empty() const {
    return std::none_of(best.begin(), best.end(), [](const auto& e) { return e.has_value(); });
}

std::size_t SimilarityList::entry_count() const {
    return static_cast<std::size_t>(
        std::count_if(best.begin(), best.end(), [](const auto& e) { return e.has_value(); }));
}

namespace {

// Best neighbor of cluster i over all j != i; the strict > keeps the
// smallest j on similarity ties because j is scanned in ascending order.
std::optional<SimilarityList::Entry> best_neighbor(const Clustering& clustering, std::size_t i,
                                                   double alpha) {
    std::optional<SimilarityList::Entry> best;
    for (std::size_t j = 0; j < clustering.clusters.size(); ++j) {
        if (j == i) continue;
        double sim = cluster_similarity(clustering.clusters[i], clustering.clusters[j]);
        if (!best || sim > best->sim) {
            best = SimilarityList::Entry{static_cast<std::uint32_t>(j), sim};
        }
    }
    if (best && best->sim > alpha) return best;
    return std::nullopt;
}

}  // namespace

SimilarityList max_similarity_list(const Clustering& clustering, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("alpha must be in [0, 1]");
    }
    const std::size_t k = clustering.clusters.size();
    SimilarityList result;
    result.best.resize(k);

    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), k);
    if (k < 256 || workers < 2) {
        for (std::size_t i = 0; i < k; ++i) {
            result.best[i] = best_neighbor(clustering, i, alpha);
        }
        return result;
    }

    // Each row is independent, so results do not depend on scheduling.
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < k; i += workers) {
                result.best[i] = best_neighbor(clustering, i, alpha);
            }
        });
    }
    for (auto& t : pool) t.join();
    return result;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[b] = a; else parent_[a] = b;
    }

private:
    std::vector<std::uint32_t> parent_;
};

}  // namespace

MergeGroups group_similar(const SimilarityList& simlist, std::size_t n_clusters) {
    UnionFind uf(n_clusters);
    for (std::size_t i = 0; i < simlist.best.size(); ++i) {
        if (i >= n_clusters) {
            throw std::invalid_argument("similarity list references unknown cluster id");
        }
        if (simlist.best[i]) {
            if (simlist.best[i]->neighbor >= n_clusters) {
                throw std::invalid_argument("similarity list references unknown cluster id");
            }
            uf.unite(static_cast<std::uint32_t>(i), simlist.best[i]->neighbor);
        }
    }
    std::vector<std::vector<std::uint32_t>> by_root(n_clusters);
    for (std::uint32_t id = 0; id < n_clusters; ++id) {
        by_root[uf.find(id)].push_back(id);
    }
    MergeGroups groups;
    for (auto& members : by_root) {
        if (!members.empty()) groups.groups.push_back(std::move(members));
    }
    return groups;
}

Clustering merge_groups(const Clustering& clustering, const MergeGroups& groups) {
    std::vector<bool> seen(clustering.clusters.size(), false);
    Clustering result;
    result.n_transactions = clustering.n_transactions;
    result.clusters.reserve(groups.groups.size());

    for (const auto& group : groups.groups) {
        Cluster merged;
        merged.id = static_cast<std::uint32_t>(result.clusters.size());
        std::vector<std::pair<ItemId, std::uint32_t>> counts;
        for (std::uint32_t cid : group) {
            if (cid >= clustering.clusters.size() || seen[cid]) {
                throw std::invalid_argument("merge groups do not partition the cluster ids");
            }
            seen[cid] = true;
            const Cluster& part = clustering.clusters[cid];
            merged.members.insert(merged.members.end(), part.members.begin(), part.members.end());
            // element-wise sum of two sorted count maps
            std::vector<std::pair<ItemId, std::uint32_t>> summed;
            summed.reserve(counts.size() + part.item_counts.size());
            auto a = counts.begin();
            auto b = part.item_counts.begin();
            while (a != counts.end() || b != part.item_counts.end()) {
                if (b == part.item_counts.end() || (a != counts.end() && a->first < b->first)) {
                    summed.push_back(*a++);
                } else if (a == counts.end() || b->first < a->first) {
                    summed.push_back(*b++);
                } else {
                    summed.push_back({a->first, a->second + b->second});
                    ++a;
                    ++b;
                }
            }
            counts = std::move(summed);
        }
        std::sort(merged.members.begin(), merged.members.end());
        merged.item_counts = std::move(counts);
        for (const auto& [item, n] : merged.item_counts) merged.total_occurrences += n;
        result.clusters.push_back(std::move(merged));
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("merge groups do not cover every cluster id");
    }
    return result;
}

RefineResult refine(const Clustering& clustering, double alpha) {
    RefineResult result;
    result.clustering = clustering;
    for (;;) {
        ++result.passes;
        const std::size_t before = result.clustering.clusters.size();
        SimilarityList simlist = max_similarity_list(result.clustering, alpha);
        if (simlist.empty()) break;
        MergeGroups groups = group_similar(simlist, before);
        result.clustering = merge_groups(result.clustering, groups);
        if (result.clustering.clusters.size() == before) break;
    }
    return result;
}

}  // namespace ftc
