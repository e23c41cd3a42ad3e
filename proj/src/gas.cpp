#include "qkin/gas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "qkin/rng.hpp"
#include "qkin/summation.hpp"

namespace qkin {

namespace {

void validate_level(const LevelGroup& lv, Statistics stats, std::size_t k) {
    const std::string where = "level " + std::to_string(k);
    if (!(lv.degeneracy > 0.0) || !std::isfinite(lv.degeneracy)) {
        throw std::domain_error(where + ": degeneracy must be positive and finite");
    }
    if (!(lv.energy >= 0.0) || !std::isfinite(lv.energy)) {
        throw std::domain_error(where + ": energy must be nonnegative and finite");
    }
    if (!(lv.occupation >= 0.0) || !std::isfinite(lv.occupation)) {
        throw std::domain_error(where + ": occupation must be nonnegative and finite");
    }
    if (stats.is_fermi() && lv.occupation > lv.degeneracy) {
        throw std::domain_error(where + ": occupation " + std::to_string(lv.occupation) +
                                " exceeds degeneracy " + std::to_string(lv.degeneracy) +
                                " under Fermi statistics");
    }
}

}  // namespace

GasState::GasState(std::vector<LevelGroup> levels, Statistics statistics)
    : levels_(std::move(levels)), statistics_(statistics) {
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        validate_level(levels_[k], statistics_, k);
    }
}

GasState GasState::with_occupations(std::vector<double> occupations) const {
    if (occupations.size() != levels_.size()) {
        throw std::invalid_argument("with_occupations: size mismatch");
    }
    std::vector<LevelGroup> next = levels_;
    for (std::size_t k = 0; k < next.size(); ++k) {
        next[k].occupation = occupations[k];
    }
    return GasState(std::move(next), statistics_);
}

std::vector<double> GasState::occupations() const {
    std::vector<double> out;
    out.reserve(levels_.size());
    for (const auto& lv : levels_) out.push_back(lv.occupation);
    return out;
}

double occupancy_ratio(const LevelGroup& level, Statistics statistics) {
    const double blocked = level.degeneracy + statistics.sign() * level.occupation;
    if (!(blocked > 0.0)) {
        throw std::domain_error("occupancy_ratio: g + s*n must be positive, got " +
                                std::to_string(blocked));
    }
    return level.occupation / blocked;
}

Moments moments(const GasState& state) {
    CompensatedSum n_sum;
    CompensatedSum e_sum;
    for (const auto& lv : state.levels()) {
        n_sum.add(lv.occupation);
        e_sum.add(lv.occupation * lv.energy);
    }
    return {n_sum.value(), e_sum.value()};
}

std::vector<long long> LatticeSpec::lattice_indices() const {
    std::vector<long long> ks(count);
    for (std::size_t k = 0; k < count; ++k) ks[k] = static_cast<long long>(k);
    return ks;
}

LatticeSpec LatticeSpec::uniform(std::size_t count, double delta_epsilon, double degeneracy) {
    LatticeSpec spec;
    spec.count = count;
    spec.delta_epsilon = delta_epsilon;
    spec.degeneracies.assign(count, degeneracy);
    return spec;
}

GasState random_state(const LatticeSpec& lattice, double n_target, std::uint64_t seed,
                      Statistics statistics, double margin) {
    if (lattice.count == 0 || lattice.degeneracies.size() != lattice.count) {
        throw std::invalid_argument("random_state: malformed lattice spec");
    }
    if (!(margin > 0.0) || margin >= 0.5) {
        throw std::invalid_argument("random_state: margin must lie in (0, 0.5)");
    }
    if (!(n_target > 0.0)) {
        throw std::invalid_argument("random_state: n_target must be positive");
    }

    const std::size_t L = lattice.count;
    std::vector<double> lo(L), hi(L), n(L);
    double hi_sum = 0.0, lo_sum = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        const double g = lattice.degeneracies[k];
        lo[k] = margin * g;
        // Bose occupations are unbounded above; cap the draw box at a few g
        // so that the rescaling below has room in both directions.
        hi[k] = statistics.is_fermi() ? (1.0 - margin) * g : 4.0 * g;
        lo_sum += lo[k];
        hi_sum += hi[k];
    }
    if (statistics.is_fermi() && n_target >= hi_sum) {
        throw std::invalid_argument(
            "random_state: n_target = " + std::to_string(n_target) +
            " infeasible; interior Fermi states require n_target < " + std::to_string(hi_sum));
    }
    if (n_target <= lo_sum) {
        throw std::invalid_argument("random_state: n_target below the interior margin floor " +
                                    std::to_string(lo_sum));
    }

    for (std::size_t k = 0; k < L; ++k) {
        const double u = seeded_unit(seed, static_cast<std::uint64_t>(k));
        n[k] = lo[k] + u * (hi[k] - lo[k]);
    }

    // Two-sided water filling: scale the free levels onto the target sum,
    // clamping any level that leaves its box and repeating on the rest.
    std::vector<bool> clamped(L, false);
    for (std::size_t pass = 0; pass <= 2 * L; ++pass) {
        double fixed = 0.0, free_sum = 0.0;
        for (std::size_t k = 0; k < L; ++k) {
            (clamped[k] ? fixed : free_sum) += n[k];
        }
        if (free_sum <= 0.0) {
            throw std::invalid_argument("random_state: target not reachable inside margins");
        }
        const double scale = (n_target - fixed) / free_sum;
        if (!(scale > 0.0)) {
            throw std::invalid_argument("random_state: target not reachable inside margins");
        }
        bool newly_clamped = false;
        for (std::size_t k = 0; k < L; ++k) {
            if (clamped[k]) continue;
            double v = n[k] * scale;
            if (v < lo[k]) {
                v = lo[k];
                clamped[k] = newly_clamped = true;
            } else if (v > hi[k]) {
                v = hi[k];
                clamped[k] = newly_clamped = true;
            }
            n[k] = v;
        }
        if (!newly_clamped) break;
    }

    std::vector<LevelGroup> levels(L);
    for (std::size_t k = 0; k < L; ++k) {
        levels[k].degeneracy = lattice.degeneracies[k];
        levels[k].energy = static_cast<double>(k) * lattice.delta_epsilon;
        levels[k].occupation = n[k];
    }
    return GasState(std::move(levels), statistics);
}

}  // namespace qkin
