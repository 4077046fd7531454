#include "ftc/ftree.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace ftc {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

FTree FTree::build(const TransactionDataset& dataset, const FrequencyTable& freqs) {
    ItemOrder order(freqs, dataset.dictionary());

    FTree tree;
    tree.n_transactions_ = dataset.size();
    tree.rank_.resize(order.size());
    for (ItemId id = 0; id < order.size(); ++id) tree.rank_[id] = order.rank(id);

    tree.nodes_.emplace_back();  // root

    // Single pass; one transaction in flight at a time.
    for (const Transaction& t : dataset.transactions()) {
        std::vector<ItemId> sorted = sort_items(t, order);
        std::uint32_t current = 0;
        for (ItemId item : sorted) {
            const std::uint32_t item_rank = tree.rank_[item];
            auto& children = tree.nodes_[current].children;
            auto it = std::lower_bound(children.begin(), children.end(), item_rank,
                                       [&](std::uint32_t child, std::uint32_t key) {
                                           return tree.rank_[tree.nodes_[child].item] < key;
                                       });
            if (it == children.end() || tree.nodes_[*it].item != item) {
                Node node;
                node.item = item;
                node.parent = static_cast<std::int32_t>(current);
                const auto index = static_cast<std::uint32_t>(tree.nodes_.size());
                std::size_t pos = static_cast<std::size_t>(it - children.begin());
                tree.nodes_.push_back(std::move(node));
                tree.nodes_[current].children.insert(tree.nodes_[current].children.begin() + pos,
                                                     index);
                current = index;
            } else {
                current = *it;
            }
            ++tree.nodes_[current].count;
        }
        tree.nodes_[current].terminating.push_back(t.id);
        tree.max_depth_ = std::max(tree.max_depth_, sorted.size());
    }
    return tree;
}

Clustering FTree::extract_clusters(std::size_t depth) const {
    if (depth < 1 || depth > max_depth_) {
        throw std::invalid_argument("extract_clusters: depth out of range");
    }

    Clustering result;
    result.n_transactions = n_transactions_;

    // cluster member list + the terminating nodes contributing to it
    struct Pending {
        std::vector<TransactionId> members;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> sources;  // (node, multiplicity)
    };
    std::vector<Pending> pending;

    // Iterative preorder DFS in child (item-rank) order.
    struct Frame {
        std::uint32_t node;
        std::size_t depth;
        std::int32_t cluster;  // index into pending, -1 above the cut
    };
    std::vector<Frame> stack;
    for (auto it = nodes_[0].children.rbegin(); it != nodes_[0].children.rend(); ++it) {
        stack.push_back({*it, 1, -1});
    }
    while (!stack.empty()) {
        Frame frame = stack.back();
        stack.pop_back();
        const Node& node = nodes_[frame.node];

        std::int32_t cluster = frame.cluster;
        if (cluster < 0) {
            // Above or at the cut: a node at the cut depth roots a subtree
            // cluster; a shallower terminator forms its own cluster.
            if (frame.depth == depth) {
                cluster = static_cast<std::int32_t>(pending.size());
                pending.emplace_back();
            } else if (!node.terminating.empty()) {
                auto& own = pending.emplace_back();
                own.members = node.terminating;
                own.sources.push_back({frame.node,
                                       static_cast<std::uint32_t>(node.terminating.size())});
            }
        }
        if (cluster >= 0 && !node.terminating.empty()) {
            auto& p = pending[cluster];
            p.members.insert(p.members.end(), node.terminating.begin(), node.terminating.end());
            p.sources.push_back({frame.node,
                                 static_cast<std::uint32_t>(node.terminating.size())});
        }
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
            stack.push_back({*it, frame.depth + 1, cluster});
        }
    }

    result.clusters.reserve(pending.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        Cluster c;
        c.id = static_cast<std::uint32_t>(i);
        c.members = std::move(pending[i].members);
        std::sort(c.members.begin(), c.members.end());

        // A terminating transaction's item set is exactly its root path.
        std::unordered_map<ItemId, std::uint32_t> counts;
        for (const auto& [node_index, multiplicity] : pending[i].sources) {
            std::int32_t walker = static_cast<std::int32_t>(node_index);
            while (walker > 0) {
                counts[nodes_[walker].item] += multiplicity;
                walker = nodes_[walker].parent;
            }
        }
        c.item_counts.assign(counts.begin(), counts.end());
        std::sort(c.item_counts.begin(), c.item_counts.end());
        for (const auto& [item, n] : c.item_counts) c.total_occurrences += n;
        result.clusters.push_back(std::move(c));
    }
    return result;
}

void FTree::dump(std::ostream& out, const ItemDictionary& dictionary) const {
    struct Frame {
        std::uint32_t node;
        std::size_t depth;
    };
    std::vector<Frame> stack;
    for (auto it = nodes_[0].children.rbegin(); it != nodes_[0].children.rend(); ++it) {
        stack.push_back({*it, 1});
    }
    out << "(root)\n";
    while (!stack.empty()) {
        Frame frame = stack.back();
        stack.pop_back();
        const Node& node = nodes_[frame.node];
        for (std::size_t i = 0; i < frame.depth; ++i) out << "  ";
        const Item& item = dictionary.item(node.item);
        out << item.value << ":" << node.count;
        if (!node.terminating.empty()) {
            out << " [";
            for (std::size_t i = 0; i < node.terminating.size(); ++i) {
                if (i) out << ",";
                out << node.terminating[i];
            }
            out << "]";
        }
        out << "\n";
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
            stack.push_back({*it, frame.depth + 1});
        }
    }
}

std::size_t cut_depth(double theta, std::size_t max_depth) {
    if (!(theta > 0.0) || theta > 1.0) {
        throw std::invalid_argument("theta must be in (0, 1]");
    }
    if (max_depth < 1) {
        throw std::invalid_argument("max_depth must be >= 1");
    }
    auto level = static_cast<std::size_t>(std::floor(theta * static_cast<double>(max_depth) + 0.5));
    return std::clamp<std::size_t>(level, 1, max_depth);
}

AllocationResult allocate(const TransactionDataset& dataset, double theta) {
    if (dataset.size() == 0) {
        throw std::invalid_argument("allocate: empty dataset");
    }
    AllocationResult result;

    auto t0 = std::chrono::steady_clock::now();
    FrequencyTable freqs = compute_frequencies(dataset);
    result.first_scan_ms = elapsed_ms(t0);

    auto t1 = std::chrono::steady_clock::now();
    FTree tree = FTree::build(dataset, freqs);
    result.build_ms = elapsed_ms(t1);

    result.max_depth = tree.max_depth();
    result.node_count = tree.node_count();
    result.cut_depth = cut_depth(theta, tree.max_depth());

    auto t2 = std::chrono::steady_clock::now();
    result.clustering = tree.extract_clusters(result.cut_depth);
    result.extract_ms = elapsed_ms(t2);
    return result;
}

}  // namespace ftc
