#ifndef MARKUP_METRICS_HPP
#define MARKUP_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace markup {

struct ClassMetrics {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    uint64_t support = 0;
};

struct EvaluationReport {
    std::vector<ClassMetrics> per_class;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    std::vector<std::vector<uint64_t>> confusion;  // [gold][predicted]
    std::string model_id;
    std::string dataset_id;
    uint64_t seed = 0;
};

// Precision/recall/F1 per class with the 0/0 = 0 convention; macro metrics
// are unweighted means. Throws on length mismatch or labels outside the
// class list.
EvaluationReport evaluate(const std::vector<int>& predictions, const std::vector<int>& gold,
                          const std::vector<std::string>& classes);
EvaluationReport evaluate(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& gold,
                          const std::vector<std::string>& classes);

double macro_f1(const std::vector<int>& predictions, const std::vector<int>& gold,
                size_t n_classes);

struct TTestResult {
    double t = 0.0;
    double p = 1.0;       // two-sided
    bool degenerate = false;  // all differences zero
    bool infinite_t = false;  // zero variance, nonzero mean
};

// Paired two-sided t-test on a - b; the p value comes from numerically
// integrating the t density (df = n - 1) to 1e-10.
TTestResult paired_ttest(const std::vector<double>& scores_a, const std::vector<double>& scores_b);

// Upper tail P(T > t) of the t-distribution, adaptive Simpson integration.
double student_t_upper_tail(double t, int df);

std::string report_to_json(const EvaluationReport& report);
EvaluationReport report_from_json(const std::string& text);

// Aligned-column text table: one row per class plus the macro-average row.
std::string report_to_table(const EvaluationReport& report);

}  // namespace markup

#endif
