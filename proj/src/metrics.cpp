#include "markup/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace markup {

EvaluationReport evaluate(const std::vector<int>& predictions, const std::vector<int>& gold,
                          const std::vector<std::string>& classes) {
    if (predictions.size() != gold.size())
        throw std::runtime_error("predictions and gold labels differ in length");
    size_t k = classes.size();
    EvaluationReport r;
    r.confusion.assign(k, std::vector<uint64_t>(k, 0));
    for (size_t i = 0; i < gold.size(); ++i) {
        if (gold[i] < 0 || size_t(gold[i]) >= k || predictions[i] < 0 ||
            size_t(predictions[i]) >= k)
            throw std::runtime_error("label outside the class list");
        ++r.confusion[gold[i]][predictions[i]];
    }
    for (size_t c = 0; c < k; ++c) {
        uint64_t tp = r.confusion[c][c];
        uint64_t fp = 0, fn = 0, support = 0;
        for (size_t o = 0; o < k; ++o) {
            if (o != c) {
                fp += r.confusion[o][c];
                fn += r.confusion[c][o];
            }
            support += r.confusion[c][o];
        }
        ClassMetrics m;
        m.label = classes[c];
        m.support = support;
        m.precision = tp + fp > 0 ? double(tp) / double(tp + fp) : 0.0;
        m.recall = tp + fn > 0 ? double(tp) / double(tp + fn) : 0.0;
        m.f1 = m.precision + m.recall > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        r.macro_precision += m.precision;
        r.macro_recall += m.recall;
        r.macro_f1 += m.f1;
        r.per_class.push_back(std::move(m));
    }
    if (k > 0) {
        r.macro_precision /= double(k);
        r.macro_recall /= double(k);
        r.macro_f1 /= double(k);
    }
    return r;
}

EvaluationReport evaluate(const std::vector<std::string>& predictions,
                          const std::vector<std::string>& gold,
                          const std::vector<std::string>& classes) {
    std::map<std::string, int> index;
    for (size_t i = 0; i < classes.size(); ++i) index[classes[i]] = int(i);
    auto lookup = [&](const std::string& label) {
        auto it = index.find(label);
        if (it == index.end()) throw std::runtime_error("label outside the class list: " + label);
        return it->second;
    };
    std::vector<int> p, g;
    for (const auto& s : predictions) p.push_back(lookup(s));
    for (const auto& s : gold) g.push_back(lookup(s));
    return evaluate(p, g, classes);
}

double macro_f1(const std::vector<int>& predictions, const std::vector<int>& gold,
                size_t n_classes) {
    std::vector<std::string> classes(n_classes);
    for (size_t i = 0; i < n_classes; ++i) classes[i] = std::to_string(i);
    return evaluate(predictions, gold, classes).macro_f1;
}

namespace {

// t density with df degrees of freedom
double t_pdf(double x, int df) {
    double v = double(df);
    double log_c = std::lgamma((v + 1.0) / 2.0) - std::lgamma(v / 2.0) -
                   0.5 * std::log(v * M_PI);
    return std::exp(log_c - (v + 1.0) / 2.0 * std::log1p(x * x / v));
}

double simpson(double a, double b, int df) {
    double m = 0.5 * (a + b);
    return (b - a) / 6.0 * (t_pdf(a, df) + 4.0 * t_pdf(m, df) + t_pdf(b, df));
}

double adaptive(double a, double b, double whole, double eps, int df, int depth) {
    double m = 0.5 * (a + b);
    double left = simpson(a, m, df);
    double right = simpson(m, b, df);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(a, m, left, eps / 2.0, df, depth - 1) +
           adaptive(m, b, right, eps / 2.0, df, depth - 1);
}

}  // namespace

double student_t_upper_tail(double t, int df) {
    if (df < 1) throw std::runtime_error("t-distribution needs df >= 1");
    if (t < 0.0) return 1.0 - student_t_upper_tail(-t, df);
    // integrate the density over [0, t]; the tail is 1/2 minus that mass
    if (t == 0.0) return 0.5;
    double mass = adaptive(0.0, t, simpson(0.0, t, df), 1e-10, df, 60);
    double tail = 0.5 - mass;
    return std::max(tail, 0.0);
}

TTestResult paired_ttest(const std::vector<double>& scores_a,
                         const std::vector<double>& scores_b) {
    if (scores_a.size() != scores_b.size())
        throw std::runtime_error("paired t-test requires equal-length score lists");
    size_t n = scores_a.size();
    if (n < 2) throw std::runtime_error("paired t-test requires n >= 2");
    std::vector<double> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = scores_a[i] - scores_b[i];
    double mean = 0.0;
    for (double x : d) mean += x;
    mean /= double(n);
    double ss = 0.0;
    for (double x : d) ss += (x - mean) * (x - mean);
    double sd = std::sqrt(ss / double(n - 1));

    TTestResult r;
    if (sd == 0.0) {
        if (mean == 0.0) {
            r.degenerate = true;
            r.p = 1.0;
            return r;
        }
        r.infinite_t = true;
        r.t = mean > 0.0 ? INFINITY : -INFINITY;
        r.p = 0.0;
        return r;
    }
    r.t = mean / (sd / std::sqrt(double(n)));
    r.p = 2.0 * student_t_upper_tail(std::fabs(r.t), int(n) - 1);
    r.p = std::min(r.p, 1.0);
    return r;
}

std::string report_to_json(const EvaluationReport& report) {
    nlohmann::json j;
    nlohmann::json per_class = nlohmann::json::array();
    for (const auto& m : report.per_class) {
        per_class.push_back({{"label", m.label},
                             {"precision", m.precision},
                             {"recall", m.recall},
                             {"f1", m.f1},
                             {"support", m.support}});
    }
    j["per_class"] = std::move(per_class);
    j["macro"] = {{"precision", report.macro_precision},
                  {"recall", report.macro_recall},
                  {"f1", report.macro_f1}};
    j["confusion"] = report.confusion;
    j["provenance"] = {{"model_id", report.model_id},
                       {"dataset_id", report.dataset_id},
                       {"seed", report.seed}};
    return j.dump(2);
}

EvaluationReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    EvaluationReport r;
    for (const auto& m : j.at("per_class")) {
        r.per_class.push_back({m.at("label").get<std::string>(),
                               m.at("precision").get<double>(), m.at("recall").get<double>(),
                               m.at("f1").get<double>(), m.at("support").get<uint64_t>()});
    }
    r.macro_precision = j.at("macro").at("precision").get<double>();
    r.macro_recall = j.at("macro").at("recall").get<double>();
    r.macro_f1 = j.at("macro").at("f1").get<double>();
    r.confusion = j.at("confusion").get<std::vector<std::vector<uint64_t>>>();
    r.model_id = j.at("provenance").at("model_id").get<std::string>();
    r.dataset_id = j.at("provenance").at("dataset_id").get<std::string>();
    r.seed = j.at("provenance").at("seed").get<uint64_t>();
    return r;
}

std::string report_to_table(const EvaluationReport& report) {
    std::ostringstream out;
    size_t width = 12;
    for (const auto& m : report.per_class) width = std::max(width, m.label.size() + 2);
    auto row = [&](const std::string& label, double p, double r, double f1,
                   const std::string& support) {
        out << label;
        for (size_t i = label.size(); i < width; ++i) out << ' ';
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%10.2f %10.2f %10.2f %10s\n", p * 100.0, r * 100.0,
                      f1 * 100.0, support.c_str());
        out << buf;
    };
    out << "Class";
    for (size_t i = 5; i < width; ++i) out << ' ';
    out << " Precision     Recall         F1    Support\n";
    for (const auto& m : report.per_class)
        row(m.label, m.precision, m.recall, m.f1, std::to_string(m.support));
    row("macro avg", report.macro_precision, report.macro_recall, report.macro_f1, "-");
    return out.str();
}

}  // namespace markup
