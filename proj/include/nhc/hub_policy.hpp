#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace nhc {

/// Power-law exponent fitted to a degree tail by maximum likelihood.
struct PowerLawFit {
    double gamma = 0.0;
    std::uint64_t kMin = 1;
    std::uint64_t sampleSize = 0;
};

/**
 * Fits gamma for P(k) ~ k^(-gamma) over all degrees >= kMin, using the
 * discrete-data estimator with the kMin - 0.5 offset:
 *
 *   gamma = 1 + n / sum(ln(k_i / (kMin - 0.5)))
 *
 * Requires at least two tail entries with at least two distinct values;
 * throws std::invalid_argument (degenerate tail) otherwise. Exponents
 * outside [2, 3] are accepted with a warning on stderr.
 */
PowerLawFit estimateGamma(const std::vector<std::uint64_t>& degrees, std::uint64_t kMin);

/**
 * Largest degree threshold x whose tail mass D(x) still reaches the
 * requested hub fraction h, so that the expected share of hubs is >= h.
 *
 * By default D(x) is the empirical complementary CDF of the observed
 * degrees. With useFittedPmf the power-law pmf normalized over
 * k = fit.kMin .. nodeCount is summed instead.
 */
std::uint64_t dminFromFraction(const std::vector<std::uint64_t>& degrees, double h,
                               const PowerLawFit& fit, bool useFittedPmf = false,
                               std::uint64_t nodeCount = 0);

/// Hub rule: every node with degree >= dMin is a hub.
struct FixedThreshold {
    std::uint64_t dMin = 1;
};

/// Hub rule: the n highest-degree nodes are hubs; degree ties are all included.
struct TopN {
    std::uint64_t n = 1;
};

/// Hub rule: threshold derived from a power-law fit so that a fraction h of
/// nodes qualifies. Resolved against a degree sequence on request, not per
/// mutation.
struct Fraction {
    double h = 0.1;
    std::uint64_t kMin = 1;
    bool useFittedPmf = false;
};

using HubPolicy = std::variant<FixedThreshold, TopN, Fraction>;

/**
 * A policy resolved against a degree sequence: hub membership becomes a pure
 * degree threshold check. FixedThreshold needs no context; TopN and Fraction
 * compute their threshold from the sequence once and keep it until resolved
 * again.
 */
class ResolvedHubPolicy {
public:
    /// Resolves the policy. TopN and Fraction require a non-empty degree sequence.
    static ResolvedHubPolicy resolve(const HubPolicy& policy, const std::vector<std::uint64_t>& degrees);

    bool isHub(std::uint64_t degree) const { return degree >= dMin_; }

    std::uint64_t dMin() const { return dMin_; }

private:
    explicit ResolvedHubPolicy(std::uint64_t dMin) : dMin_(dMin) {}

    std::uint64_t dMin_;
};

} // namespace nhc
