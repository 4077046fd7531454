#ifndef FTC_DATASET_HPP
#define FTC_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ftc {

using ItemId = std::uint32_t;
using TransactionId = std::uint32_t;
using LabelId = std::uint32_t;

/// An item is a (source column, categorical value) pair; the same value
/// string in two different columns is two different items.
struct Item {
    std::uint32_t attribute = 0;
    std::string value;

    friend bool operator==(const Item&, const Item&) = default;
};

/// Dense Item <-> ItemId bijection. Ids are assigned by first appearance.
class ItemDictionary {
public:
    ItemId intern(std::uint32_t attribute, std::string_view value);
    std::optional<ItemId> find(std::uint32_t attribute, std::string_view value) const;
    const Item& item(ItemId id) const { return items_.at(id); }
    std::size_t size() const { return items_.size(); }

private:
    static std::string key(std::uint32_t attribute, std::string_view value);

    std::vector<Item> items_;
    std::unordered_map<std::string, ItemId> index_;
};

/// One record: a non-empty set of items (kept sorted by ItemId) plus an
/// optional class label. Labels are metadata only; they never cluster.
struct Transaction {
    TransactionId id = 0;
    std::vector<ItemId> items;
    std::optional<LabelId> label;
};

class TransactionDataset {
public:
    std::size_t size() const { return transactions_.size(); }
    const std::vector<Transaction>& transactions() const { return transactions_; }
    const Transaction& transaction(TransactionId id) const { return transactions_.at(id); }

    const ItemDictionary& dictionary() const { return dictionary_; }
    ItemDictionary& dictionary() { return dictionary_; }

    const std::vector<std::string>& label_domain() const { return label_names_; }
    const std::string& label_name(LabelId id) const { return label_names_.at(id); }
    bool has_labels() const;

    LabelId intern_label(std::string_view token);

    /// Appends a transaction; items are sorted and deduplicated. Throws on
    /// an empty item set.
    void add_transaction(std::vector<ItemId> items, std::optional<LabelId> label = std::nullopt);

private:
    std::vector<Transaction> transactions_;
    ItemDictionary dictionary_;
    std::vector<std::string> label_names_;
    std::unordered_map<std::string, LabelId> label_index_;
};

/// Raised on unreadable files, malformed records, and empty inputs.
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// How to read a delimited file into transactions. label_column counts from
/// the start when >= 0 and from the end when negative (-1 = last column).
struct IngestFormat {
    char delimiter = ',';
    bool header = false;
    std::optional<int> label_column;
    std::vector<int> ignored_columns;
    std::vector<std::string> ignorable_values;  // cells to drop, e.g. "?"
};

/// UCI agaricus-lepiota layout: column 0 is the e/p label, the rest are items.
IngestFormat mushroom_format();
/// UCI zoo layout: column 0 (animal name) ignored, last column is the type label.
IngestFormat zoo_format();

TransactionDataset ingest(const std::filesystem::path& path, const IngestFormat& format);

/// Builds a dataset from in-memory baskets (every item gets attribute 0).
TransactionDataset from_baskets(const std::vector<std::vector<std::string>>& baskets,
                                const std::vector<std::string>& labels = {});

/// Dataset-wide item supports, indexed by ItemId. Items are sets within a
/// transaction, so support = number of transactions containing the item.
struct FrequencyTable {
    std::vector<std::uint32_t> support;

    std::uint32_t of(ItemId id) const { return support.at(id); }
    std::size_t size() const { return support.size(); }
};

FrequencyTable compute_frequencies(const TransactionDataset& dataset);

/// Total order on items: support descending, then (attribute, value)
/// ascending. The tie-break is content-determined, so the order (and every
/// partition derived from it) is invariant under transaction permutation.
class ItemOrder {
public:
    ItemOrder(const FrequencyTable& freqs, const ItemDictionary& dictionary);

    std::uint32_t rank(ItemId id) const;
    bool before(ItemId a, ItemId b) const { return rank(a) < rank(b); }
    std::size_t size() const { return rank_.size(); }

private:
    std::vector<std::uint32_t> rank_;
};

/// The transaction's item set sorted by the global order.
std::vector<ItemId> sort_items(const Transaction& transaction, const ItemOrder& order);

}  // namespace ftc

#endif  // FTC_DATASET_HPP
