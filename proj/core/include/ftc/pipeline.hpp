#ifndef FTC_PIPELINE_HPP
#define FTC_PIPELINE_HPP

#include "ftc/dataset.hpp"
#include "ftc/ftree.hpp"
#include "ftc/largeitem.hpp"
#include "ftc/report.hpp"

namespace ftc {

/// Allocation (frequency scan, tree build, cut extraction) followed by
/// overlap-probability refinement.
RunReport run_ftree(const TransactionDataset& dataset, const FTreeConfig& config);

/// Cost-driven allocation followed by cost-driven refinement.
RunReport run_largeitem(const TransactionDataset& dataset, const LargeItemConfig& config);

}  // namespace ftc

#endif  // FTC_PIPELINE_HPP
