#include <algorithm>
#include <cmath>
#include <numeric>

#include "inspire/arena/arena.hpp"

namespace inspire::arena {

namespace {

double mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = mean(x), my = mean(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return sxy / std::sqrt(sxx * syy);
}

// Average ranks (ties share the mean of their positions).
std::vector<double> average_ranks(const std::vector<double>& v) {
    size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

// Tie-corrected tau-b by pair counting.
std::optional<double> kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
    size_t n = x.size();
    long concordant = 0, discordant = 0, ties_x = 0, ties_y = 0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            double dx = x[i] - x[j], dy = y[i] - y[j];
            if (dx == 0 && dy == 0) {
                ++ties_x;
                ++ties_y;
            } else if (dx == 0) {
                ++ties_x;
            } else if (dy == 0) {
                ++ties_y;
            } else if ((dx > 0) == (dy > 0)) {
                ++concordant;
            } else {
                ++discordant;
            }
        }
    }
    long n0 = static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;
    double denom = std::sqrt(static_cast<double>(n0 - ties_x)) *
                   std::sqrt(static_cast<double>(n0 - ties_y));
    if (denom == 0.0) return std::nullopt;
    return static_cast<double>(concordant - discordant) / denom;
}

}  // namespace

CorrelationReport correlate(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw ValidationError("correlate needs equal-length vectors");
    if (x.size() < 3) throw ValidationError("correlate needs at least 3 samples");

    CorrelationReport report;
    report.n = static_cast<int>(x.size());
    report.pearson = pearson(x, y);
    if (!report.pearson) report.notes.push_back("pearson undefined: zero variance");
    report.spearman = pearson(average_ranks(x), average_ranks(y));
    if (!report.spearman) report.notes.push_back("spearman undefined: all values tied");
    report.kendall = kendall_tau_b(x, y);
    if (!report.kendall) report.notes.push_back("kendall undefined: all pairs tied");
    return report;
}

std::optional<double> predicted_pro_share(double s_pro, double s_con) {
    double sum = s_pro + s_con;
    if (sum == 0.0) return std::nullopt;
    return 100.0 * s_pro / sum;
}

double rmse_winner(const std::vector<double>& predicted, const std::vector<double>& human) {
    if (predicted.size() != human.size())
        throw ValidationError("rmse_winner needs equal-length vectors");
    if (predicted.empty()) throw ValidationError("rmse_winner needs at least one sample");
    double sum = 0.0;
    for (size_t i = 0; i < predicted.size(); ++i) {
        double d = predicted[i] - human[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(predicted.size()));
}

}  // namespace inspire::arena
