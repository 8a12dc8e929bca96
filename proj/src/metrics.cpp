#include "sbcn/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace sbcn {

namespace {

double ratio(long long num, long long den) {
    return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double sample_sd(const std::vector<double>& xs, double mean) {
    if (xs.size() < 2) return 0.0;
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

} // namespace

ConfusionCounts confusion(const Dag& truth, const Dag& inferred) {
    if (truth.node_count() != inferred.node_count())
        throw std::invalid_argument("confusion: dimension mismatch");
    ConfusionCounts c;
    const int k = truth.node_count();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const bool in_truth = truth.arc(i, j);
            const bool in_inferred = inferred.arc(i, j);
            if (in_truth && in_inferred)
                ++c.tp;
            else if (!in_truth && in_inferred)
                ++c.fp;
            else if (in_truth && !in_inferred)
                ++c.fn;
            else
                ++c.tn;
        }
    return c;
}

double accuracy(const ConfusionCounts& c) { return ratio(c.tp + c.tn, c.tp + c.tn + c.fp + c.fn); }
double sensitivity(const ConfusionCounts& c) { return ratio(c.tp, c.tp + c.fn); }
double specificity(const ConfusionCounts& c) { return ratio(c.tn, c.fp + c.tn); }

std::vector<MetricAggregate> aggregate(const std::vector<InstanceMetrics>& rows) {
    if (rows.empty()) throw std::invalid_argument("aggregate: empty input");

    std::map<double, std::vector<const InstanceMetrics*>> by_noise;
    for (const auto& row : rows) by_noise[row.noise].push_back(&row);

    std::vector<MetricAggregate> out;
    out.reserve(by_noise.size());
    for (const auto& [noise, group] : by_noise) {
        MetricAggregate agg;
        agg.noise = noise;
        agg.instances = static_cast<int>(group.size());
        std::vector<double> acc, sens, spec;
        for (const auto* row : group) {
            acc.push_back(row->accuracy);
            sens.push_back(row->sensitivity);
            spec.push_back(row->specificity);
        }
        for (double a : acc) agg.accuracy_mean += a;
        for (double s : sens) agg.sensitivity_mean += s;
        for (double s : spec) agg.specificity_mean += s;
        agg.accuracy_mean /= agg.instances;
        agg.sensitivity_mean /= agg.instances;
        agg.specificity_mean /= agg.instances;
        agg.accuracy_sd = sample_sd(acc, agg.accuracy_mean);
        agg.sensitivity_sd = sample_sd(sens, agg.sensitivity_mean);
        agg.specificity_sd = sample_sd(spec, agg.specificity_mean);
        out.push_back(agg);
    }
    return out;
}

std::string instance_metrics_csv_header() {
    return "instance_id,noise,regularizer,constraint_mode,tp,fp,tn,fn,"
           "accuracy,sensitivity,specificity,score,wall_time_s";
}

std::string to_csv_row(const InstanceMetrics& m) {
    std::string s = m.instance_id;
    s += ',' + fmt(m.noise) + ',' + m.regularizer + ',' + m.constraint_mode;
    s += ',' + std::to_string(m.counts.tp) + ',' + std::to_string(m.counts.fp);
    s += ',' + std::to_string(m.counts.tn) + ',' + std::to_string(m.counts.fn);
    s += ',' + fmt(m.accuracy) + ',' + fmt(m.sensitivity) + ',' + fmt(m.specificity);
    s += ',' + fmt(m.score) + ',' + fmt(m.wall_time_s);
    return s;
}

std::string aggregate_csv(const std::vector<MetricAggregate>& rows) {
    std::string s =
        "noise,instances,accuracy_mean,accuracy_sd,sensitivity_mean,sensitivity_sd,"
        "specificity_mean,specificity_sd\n";
    for (const auto& r : rows) {
        s += fmt(r.noise) + ',' + std::to_string(r.instances);
        s += ',' + fmt(r.accuracy_mean) + ',' + fmt(r.accuracy_sd);
        s += ',' + fmt(r.sensitivity_mean) + ',' + fmt(r.sensitivity_sd);
        s += ',' + fmt(r.specificity_mean) + ',' + fmt(r.specificity_sd);
        s += '\n';
    }
    return s;
}

} // namespace sbcn
