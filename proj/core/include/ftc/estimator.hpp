#ifndef FTC_ESTIMATOR_HPP
#define FTC_ESTIMATOR_HPP

#include <cstdint>

#include "ftc/dataset.hpp"
#include "ftc/report.hpp"

namespace ftc {

struct EstimatorConfig {
    double theta = 0.8;
    double step = 0.1;             // sweep step over [0, 1]
    double sample_fraction = 1.0;  // (0, 1]; < 1 draws a label-stratified sample
    std::uint64_t seed = 0;
};

/// Label-stratified sample without replacement: per label group (in label-id
/// order), max(1, round(fraction * group size)) ids are drawn with a
/// Fisher-Yates partial shuffle seeded as given, then re-indexed densely in
/// their original relative order. fraction = 1 returns the input unchanged.
TransactionDataset stratified_sample(const TransactionDataset& dataset, double fraction,
                                     std::uint64_t seed);

/// Sweeps alpha from 1.0 down to 0.0 in `step` increments over one shared
/// allocation of the (sampled) dataset and picks the minimum alpha whose
/// refinement reaches 100% purity; if none does, the best-purity alpha with
/// ties to the larger alpha.
AlphaReport estimate_alpha(const TransactionDataset& dataset, const EstimatorConfig& config);

/// Full FCSO run: estimate alpha (on the sample when configured), then
/// allocate + refine the complete dataset with the chosen alpha.
RunReport run_fcso(const TransactionDataset& dataset, const EstimatorConfig& config);

}  // namespace ftc

#endif  // FTC_ESTIMATOR_HPP
