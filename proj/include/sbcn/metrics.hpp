#ifndef SBCN_METRICS_HPP
#define SBCN_METRICS_HPP

#include <string>
#include <vector>

#include "sbcn/dag.hpp"

namespace sbcn {

/// Arc-level confusion over all ordered non-diagonal pairs: positives are the
/// arcs of the ground truth, compared by direction (no skeleton collapsing).
struct ConfusionCounts {
    long long tp = 0, fp = 0, tn = 0, fn = 0;
};

ConfusionCounts confusion(const Dag& truth, const Dag& inferred);

// (TP+TN)/(TP+TN+FP+FN), TP/(TP+FN), TN/(FP+TN). A zero denominator counts as
// a vacuously perfect 1.0 (e.g. sensitivity of an arc-free ground truth).
double accuracy(const ConfusionCounts& c);
double sensitivity(const ConfusionCounts& c);
double specificity(const ConfusionCounts& c);

/// One benchmark-instance evaluation row, as emitted in the results CSV.
struct InstanceMetrics {
    std::string instance_id;
    double noise = 0.0;
    std::string regularizer;
    std::string constraint_mode;
    ConfusionCounts counts;
    double accuracy = 0.0;
    double sensitivity = 0.0;
    double specificity = 0.0;
    double score = 0.0;
    double wall_time_s = 0.0;
};

/// Per-noise-level mean and sample standard deviation of the three metrics.
struct MetricAggregate {
    double noise = 0.0;
    int instances = 0;
    double accuracy_mean = 0.0, accuracy_sd = 0.0;
    double sensitivity_mean = 0.0, sensitivity_sd = 0.0;
    double specificity_mean = 0.0, specificity_sd = 0.0;
};

/// Groups by noise level (ascending). Throws on empty input.
std::vector<MetricAggregate> aggregate(const std::vector<InstanceMetrics>& rows);

std::string instance_metrics_csv_header();
std::string to_csv_row(const InstanceMetrics& m);
std::string aggregate_csv(const std::vector<MetricAggregate>& rows);

} // namespace sbcn

#endif
