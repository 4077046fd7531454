#include "ftc/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ftc {

std::string ItemDictionary::key(std::uint32_t attribute, std::string_view value) {
    std::string k = std::to_string(attribute);
    k.push_back('\x1f');
    k.append(value);
    return k;
}

ItemId ItemDictionary::intern(std::uint32_t attribute, std::string_view value) {
    auto [it, inserted] = index_.try_emplace(key(attribute, value),
                                             static_cast<ItemId>(items_.size()));
    if (inserted) {
        items_.push_back(Item{attribute, std::string(value)});
    }
    return it->second;
}

std::optional<ItemId> ItemDictionary::find(std::uint32_t attribute, std::string_view value) const {
    auto it = index_.find(key(attribute, value));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool TransactionDataset::has_labels() const {
    if (transactions_.empty()) return false;
    return std::all_of(transactions_.begin(), transactions_.end(),
                       [](const Transaction& t) { return t.label.has_value(); });
}

LabelId TransactionDataset::intern_label(std::string_view token) {
    auto [it, inserted] = label_index_.try_emplace(std::string(token),
                                                   static_cast<LabelId>(label_names_.size()));
    if (inserted) {
        label_names_.emplace_back(token);
    }
    return it->second;
}

void TransactionDataset::add_transaction(std::vector<ItemId> items, std::optional<LabelId> label) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    if (items.empty()) {
        throw IngestError("empty transaction");
    }
    Transaction t;
    t.id = static_cast<TransactionId>(transactions_.size());
    t.items = std::move(items);
    t.label = label;
    transactions_.push_back(std::move(t));
}

IngestFormat mushroom_format() {
    IngestFormat f;
    f.delimiter = ',';
    f.label_column = 0;
    return f;
}

IngestFormat zoo_format() {
    IngestFormat f;
    f.delimiter = ',';
    f.label_column = -1;
    f.ignored_columns = {0};
    return f;
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, delimiter)) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == delimiter) {
        cells.emplace_back();
    }
    return cells;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

TransactionDataset ingest(const std::filesystem::path& path, const IngestFormat& format) {
    std::ifstream in(path);
    if (!in) {
        throw IngestError("cannot open input file: " + path.string());
    }

    TransactionDataset dataset;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_columns = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        if (format.header && !saw_header) {
            saw_header = true;
            continue;
        }

        std::vector<std::string> cells = split_line(line, format.delimiter);
        if (expected_columns == 0) {
            expected_columns = cells.size();
        } else if (cells.size() != expected_columns) {
            throw IngestError("line " + std::to_string(line_no) + ": expected " +
                              std::to_string(expected_columns) + " columns, got " +
                              std::to_string(cells.size()));
        }

        int label_col = -1;
        if (format.label_column) {
            label_col = *format.label_column;
            if (label_col < 0) label_col += static_cast<int>(cells.size());
            if (label_col < 0 || label_col >= static_cast<int>(cells.size())) {
                throw IngestError("label column out of range on line " + std::to_string(line_no));
            }
        }

        std::optional<LabelId> label;
        std::vector<ItemId> items;
        items.reserve(cells.size());
        for (int col = 0; col < static_cast<int>(cells.size()); ++col) {
            if (std::find(format.ignored_columns.begin(), format.ignored_columns.end(), col) !=
                format.ignored_columns.end()) {
                continue;
            }
            if (col == label_col) {
                label = dataset.intern_label(cells[col]);
                continue;
            }
            if (std::find(format.ignorable_values.begin(), format.ignorable_values.end(),
                          cells[col]) != format.ignorable_values.end()) {
                continue;
            }
            items.push_back(dataset.dictionary().intern(static_cast<std::uint32_t>(col),
                                                        cells[col]));
        }
        if (items.empty()) {
            throw IngestError("line " + std::to_string(line_no) + ": record has no usable items");
        }
        dataset.add_transaction(std::move(items), label);
    }

    if (dataset.size() == 0) {
        throw IngestError("empty dataset: " + path.string());
    }
    return dataset;
}

TransactionDataset from_baskets(const std::vector<std::vector<std::string>>& baskets,
                                const std::vector<std::string>& labels) {
    if (!labels.empty() && labels.size() != baskets.size()) {
        throw std::invalid_argument("from_baskets: label count does not match basket count");
    }
    TransactionDataset dataset;
    for (std::size_t i = 0; i < baskets.size(); ++i) {
        std::vector<ItemId> items;
        items.reserve(baskets[i].size());
        for (const std::string& token : baskets[i]) {
            items.push_back(dataset.dictionary().intern(0, token));
        }
        std::optional<LabelId> label;
        if (!labels.empty()) label = dataset.intern_label(labels[i]);
        dataset.add_transaction(std::move(items), label);
    }
    if (dataset.size() == 0) {
        throw IngestError("empty dataset");
    }
    return dataset;
}

FrequencyTable compute_frequencies(const TransactionDataset& dataset) {
    if (dataset.size() == 0) {
        throw std::invalid_argument("compute_frequencies: empty dataset");
    }
    FrequencyTable table;
    table.support.assign(dataset.dictionary().size(), 0);
    for (const Transaction& t : dataset.transactions()) {
        for (ItemId id : t.items) {
            ++table.support[id];
        }
    }
    return table;
}

ItemOrder::ItemOrder(const FrequencyTable& freqs, const ItemDictionary& dictionary) {
    if (freqs.size() != dictionary.size()) {
        throw std::invalid_argument("ItemOrder: frequency table does not match dictionary");
    }
    std::vector<ItemId> ids(freqs.size());
    std::iota(ids.begin(), ids.end(), 0u);
    std::sort(ids.begin(), ids.end(), [&](ItemId a, ItemId b) {
        if (freqs.support[a] != freqs.support[b]) return freqs.support[a] > freqs.support[b];
        const Item& ia = dictionary.item(a);
        const Item& ib = dictionary.item(b);
        if (ia.attribute != ib.attribute) return ia.attribute < ib.attribute;
        return ia.value < ib.value;
    });
    rank_.assign(ids.size(), 0);
    for (std::uint32_t pos = 0; pos < ids.size(); ++pos) {
        rank_[ids[pos]] = pos;
    }
}

std::uint32_t ItemOrder::rank(ItemId id) const {
    if (id >= rank_.size()) {
        throw std::invalid_argument("item missing from frequency table");
    }
    return rank_[id];
}

std::vector<ItemId> sort_items(const Transaction& transaction, const ItemOrder& order) {
    std::vector<ItemId> sorted = transaction.items;
    for (ItemId id : sorted) order.rank(id);  // range check before sorting
    std::sort(sorted.begin(), sorted.end(),
              [&](ItemId a, ItemId b) { return order.rank(a) < order.rank(b); });
    return sorted;
}

}  // namespace ftc
