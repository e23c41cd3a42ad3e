#ifndef QKIN_QMATH_HPP
#define QKIN_QMATH_HPP

namespace qkin {

/// Width of the classical window around q = 1. Inside it every q-deformed
/// function dispatches to its exact classical branch; the general formulas
/// divide by (1-q) and lose all significant digits below this scale.
inline constexpr double kClassicalBranchWidth = 1e-12;

/// Entropic index q with its dual q* = 2 - q.
///
/// Regular construction enforces the admissible interval [0, 2];
/// `exploratory` lifts the restriction for the validity-domain scanners,
/// which deliberately probe outside it.
class QIndex {
public:
    explicit QIndex(double q);

    static QIndex exploratory(double q);

    double value() const { return q_; }

    /// Dual index q* = 2 - q, always recomputed.
    double dual() const { return 2.0 - q_; }

    /// QIndex at the dual value, preserving the exploratory tag.
    QIndex dual_index() const;

    bool is_classical() const;

private:
    QIndex(double q, bool exploratory);

    double q_;
    bool exploratory_;
};

/// q-logarithm: (x^(1-q) - 1)/(1-q), natural log on the classical branch.
/// Strictly increasing in x. Throws std::domain_error for x <= 0 or
/// non-finite x.
double ln_q(double x, const QIndex& q);

/// q-exponential, the inverse of ln_q on its positive branch:
/// [1 + (1-q)x]^(1/(1-q)).
///
/// The degenerate base 1 + (1-q)x <= 0 follows the Tsallis cutoff
/// convention: 0 for q < 1, +infinity for q > 1. Throws std::domain_error
/// for non-finite x.
double exp_q(double x, const QIndex& q);

/// q-product: [x^(1-q) + y^(1-q) - 1]^(1/(1-q)) on its positive branch,
/// 0 past the cutoff. Commutative; ln_q maps it to an ordinary sum.
double q_product(double x, double y, const QIndex& q);

/// q-difference: (x - y)/(1 + (1-q)y). Throws std::domain_error when the
/// denominator vanishes.
double q_difference(double x, double y, const QIndex& q);

/// f^(q-1) * ln_q(f), evaluated through the duality identity as
/// ln_{q*}(f) with q* = 2 - q, which avoids the cancellation of the
/// literal product form.
double weighted_qlog(double f, const QIndex& q);

}  // namespace qkin

#endif
