#include "qkin/qmath.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qkin {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(what) + ": argument must be finite");
    }
}

}  // namespace

QIndex::QIndex(double q, bool exploratory) : q_(q), exploratory_(exploratory) {
    if (!std::isfinite(q)) {
        throw std::domain_error("QIndex: q must be finite");
    }
    if (!exploratory_ && (q < 0.0 || q > 2.0)) {
        throw std::domain_error("QIndex: q = " + std::to_string(q) +
                                " outside the admissible interval [0, 2]");
    }
}

QIndex::QIndex(double q) : QIndex(q, false) {}

QIndex QIndex::exploratory(double q) { return QIndex(q, true); }

QIndex QIndex::dual_index() const { return QIndex(dual(), exploratory_); }

bool QIndex::is_classical() const { return std::abs(q_ - 1.0) < kClassicalBranchWidth; }

double ln_q(double x, const QIndex& q) {
    require_finite(x, "ln_q");
    if (x <= 0.0) {
        throw std::domain_error("ln_q: x must be positive, got " + std::to_string(x));
    }
    if (q.is_classical()) {
        return std::log(x);
    }
    const double omq = 1.0 - q.value();
    return (std::pow(x, omq) - 1.0) / omq;
}

double exp_q(double x, const QIndex& q) {
    require_finite(x, "exp_q");
    if (q.is_classical()) {
        return std::exp(x);
    }
    const double omq = 1.0 - q.value();
    // fma keeps the base to one rounding; the inverse-pair identity with
    // ln_q is tested at the ulp level.
    const double base = std::fma(omq, x, 1.0);
    if (base <= 0.0) {
        return q.value() < 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::pow(base, 1.0 / omq);
}

double q_product(double x, double y, const QIndex& q) {
    require_finite(x, "q_product");
    require_finite(y, "q_product");
    if (x <= 0.0 || y <= 0.0) {
        throw std::domain_error("q_product: arguments must be positive");
    }
    if (q.is_classical()) {
        return x * y;
    }
    const double omq = 1.0 - q.value();
    const double bracket = std::pow(x, omq) + std::pow(y, omq) - 1.0;
    if (bracket <= 0.0) {
        return 0.0;
    }
    return std::pow(bracket, 1.0 / omq);
}

double q_difference(double x, double y, const QIndex& q) {
    require_finite(x, "q_difference");
    require_finite(y, "q_difference");
    const double denom = std::fma(1.0 - q.value(), y, 1.0);
    if (denom == 0.0) {
        throw std::domain_error("q_difference: 1 + (1-q)y vanishes at y = " +
                                std::to_string(y));
    }
    return (x - y) / denom;
}

double weighted_qlog(double f, const QIndex& q) {
    require_finite(f, "weighted_qlog");
    if (f <= 0.0) {
        throw std::domain_error("weighted_qlog: f must be positive");
    }
    return ln_q(f, q.dual_index());
}

}  // namespace qkin
