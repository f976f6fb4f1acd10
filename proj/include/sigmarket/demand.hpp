#pragma once
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sigmarket {

/** One point of the content provider's private-signal support: a label, its
 * probability, and the demand each ISP would see at zero prices.
 */
struct SignalOutcome {
    std::string label;
    double probability = 0.0;
    double baseline_demand = 0.0;  ///< demand per unit time, must be > 0
};

/** Finite distribution of the private demand signal.
 *
 * Invariants (checked by validate()):
 * - probabilities sum to 1 within 1e-12 absolute
 * - every probability >= 0, every baseline demand > 0
 * - at least one outcome, labels unique
 */
struct SignalDistribution {
    std::vector<SignalOutcome> outcomes;

    std::size_t size() const { return outcomes.size(); }
    double probability(std::size_t i) const { return outcomes[i].probability; }
    double demand(std::size_t i) const { return outcomes[i].baseline_demand; }
    const std::string& label(std::size_t i) const { return outcomes[i].label; }

    /// Expectation of f(signal index) under the distribution.
    template <typename F>
    double expect(F&& f) const {
        double acc = 0.0;
        for (std::size_t i = 0; i < outcomes.size(); ++i)
            acc += outcomes[i].probability * f(i);
        return acc;
    }

    /// All invariant violations, empty when valid.
    std::vector<std::string> violations() const;
    /// Throws std::invalid_argument listing every violation.
    void validate() const;

    bool operator==(const SignalDistribution&) const = default;
};

/** Market constants shared by all ISPs.
 *
 * Invariants: n >= 2, alpha > 0, beta > 0, p_a >= 0, and alpha > (n-1)*beta
 * (the slope condition that makes the linear price game well behaved).
 */
struct MarketParams {
    int n = 2;          ///< number of ISPs
    double alpha = 0;   ///< own-price sensitivity (demand per currency unit)
    double beta = 0;    ///< cross-price sensitivity (demand per currency unit)
    double p_a = 0;     ///< advertising revenue per unit demand (currency)

    std::vector<std::string> violations() const;
    void validate() const;

    bool operator==(const MarketParams&) const = default;
};

/// First and second moments of the baseline demand D(theta).
struct Moments {
    double mean = 0;
    double second_moment = 0;
    double variance = 0;
};

/// Exact weighted moments of the baseline demand.
Moments moments(const SignalDistribution& dist);

/** Demand of one ISP under the linear model:
 * baseline_demand(theta) - alpha * p_i + beta * sum of the other prices.
 * The value may be negative; callers decide whether that is acceptable.
 *
 * \throws std::invalid_argument on an out-of-range ISP or signal index, a
 * price vector of the wrong length, or a negative price.
 */
double linear_demand(std::size_t isp, std::size_t theta_idx, std::span<const double> prices,
                     const MarketParams& params, const SignalDistribution& dist);

/** A caller-supplied demand model: maps (signal index, full price vector) to
 * the per-ISP demand vector. Bounds declare the price domain per ISP.
 */
struct DemandOracle {
    using Fn = std::function<std::vector<double>(std::size_t theta_idx,
                                                 const std::vector<double>& prices)>;
    Fn demand;
    std::vector<std::pair<double, double>> price_bounds;  ///< per-ISP [lo, hi]

    double lo(std::size_t i) const { return price_bounds[i].first; }
    double hi(std::size_t i) const { return price_bounds[i].second; }
};

/// Wraps the linear model as a DemandOracle with bounds [0, p_max] per ISP.
DemandOracle make_linear_oracle(const MarketParams& params, const SignalDistribution& dist,
                                double p_max);

/// Result of probing one structural assumption.
struct AssumptionCheck {
    bool holds = true;
    std::string detail;
    std::vector<double> worst_point;  ///< grid point of the worst violation (empty if none)
    double worst_value = 0.0;         ///< most negative margin seen
};

/** Report of the three structural checks: demand slopes, supermodularity and
 * the dominant-diagonal condition. `analytic` is set when the linear model
 * was checked in closed form rather than by sampling.
 */
struct AssumptionReport {
    bool analytic = false;
    AssumptionCheck monotonicity;
    AssumptionCheck supermodularity;
    AssumptionCheck dominant_diagonal;

    bool all_hold() const {
        return monotonicity.holds && supermodularity.holds && dominant_diagonal.holds;
    }
};

/** Checks the linear model analytically: slopes are -alpha and +beta by
 * construction, cross-partials vanish, and the dominant-diagonal condition
 * reduces to alpha > (n-1)*beta.
 */
AssumptionReport check_assumptions(const MarketParams& params);

/** Checks a generic demand oracle by central finite differences
 * (step 1e-6 * max(1, |p|)) at every supplied grid point and signal.
 *
 * \throws std::invalid_argument if the grid is empty or a point has the
 * wrong dimension.
 */
AssumptionReport check_assumptions(const MarketParams& params, const DemandOracle& oracle,
                                   const SignalDistribution& dist,
                                   const std::vector<std::vector<double>>& price_grid);

}  // namespace sigmarket
