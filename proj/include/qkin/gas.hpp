#ifndef QKIN_GAS_HPP
#define QKIN_GAS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace qkin {

enum class StatisticsKind { Bose, Fermi };

/// Quantum statistics of the gas. The sign enters every blocking /
/// enhancement factor as g + sign * n: +1 Bose, -1 Fermi.
struct Statistics {
    StatisticsKind kind = StatisticsKind::Bose;

    double sign() const { return kind == StatisticsKind::Bose ? 1.0 : -1.0; }
    bool is_fermi() const { return kind == StatisticsKind::Fermi; }

    static Statistics bose() { return {StatisticsKind::Bose}; }
    static Statistics fermi() { return {StatisticsKind::Fermi}; }

    const char* name() const { return is_fermi() ? "fermi" : "bose"; }

    friend bool operator==(const Statistics& a, const Statistics& b) {
        return a.kind == b.kind;
    }
};

/// One group of g neighboring elementary states at energy eps holding a
/// continuous mean occupation n.
struct LevelGroup {
    double degeneracy = 1.0;  // g > 0
    double energy = 0.0;      // eps >= 0
    double occupation = 0.0;  // n >= 0; n <= g under Fermi statistics
};

/// Spatially homogeneous gas: an ordered list of level groups plus the
/// statistics. Immutable snapshot; evolution produces new states.
class GasState {
public:
    GasState(std::vector<LevelGroup> levels, Statistics statistics);

    const std::vector<LevelGroup>& levels() const { return levels_; }
    const LevelGroup& level(std::size_t k) const { return levels_[k]; }
    Statistics statistics() const { return statistics_; }
    std::size_t size() const { return levels_.size(); }

    /// Same lattice and statistics with replaced occupations (validated).
    GasState with_occupations(std::vector<double> occupations) const;

    std::vector<double> occupations() const;

private:
    std::vector<LevelGroup> levels_;
    Statistics statistics_;
};

/// n / (g + sign * n), the variable in which the equilibrium conditions
/// factorize. Throws std::domain_error if g + sign * n <= 0.
double occupancy_ratio(const LevelGroup& level, Statistics statistics);

struct Moments {
    double particle_number = 0.0;
    double energy = 0.0;
};

/// Conserved moments N = sum n, E = sum n*eps (compensated summation).
Moments moments(const GasState& state);

/// Energy-lattice specification: level k sits at energy k * delta_epsilon
/// with degeneracy degeneracies[k].
struct LatticeSpec {
    std::size_t count = 0;
    double delta_epsilon = 1.0;
    std::vector<double> degeneracies;  // size == count

    std::vector<long long> lattice_indices() const;
    static LatticeSpec uniform(std::size_t count, double delta_epsilon, double degeneracy);
};

/// Deterministic seeded random state with strictly interior occupations
/// (margin * g away from both boundaries) rescaled to sum n = n_target.
/// Throws std::invalid_argument when n_target is not feasible inside the
/// margins.
GasState random_state(const LatticeSpec& lattice, double n_target, std::uint64_t seed,
                      Statistics statistics, double margin = 1e-3);

}  // namespace qkin

#endif
