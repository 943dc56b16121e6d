#include "nhc/hub_policy.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <unordered_set>

namespace nhc {

PowerLawFit estimateGamma(const std::vector<std::uint64_t>& degrees, std::uint64_t kMin) {
    if (kMin < 1) {
        throw std::invalid_argument("kMin must be >= 1");
    }
    double logSum = 0.0;
    std::uint64_t tailSize = 0;
    std::unordered_set<std::uint64_t> distinct;
    const double offset = static_cast<double>(kMin) - 0.5;
    for (std::uint64_t k : degrees) {
        if (k >= kMin) {
            logSum += std::log(static_cast<double>(k) / offset);
            ++tailSize;
            distinct.insert(k);
        }
    }
    if (tailSize < 2) {
        throw std::invalid_argument("degree tail too small to fit a power law (need >= 2 entries >= kMin)");
    }
    if (distinct.size() < 2) {
        throw std::invalid_argument("degenerate tail: all tail degrees equal, exponent unbounded");
    }
    PowerLawFit fit;
    fit.gamma = 1.0 + static_cast<double>(tailSize) / logSum;
    fit.kMin = kMin;
    fit.sampleSize = tailSize;
    if (!std::isfinite(fit.gamma)) {
        throw std::invalid_argument("degenerate tail: exponent estimate not finite");
    }
    if (fit.gamma < 2.0 || fit.gamma > 3.0) {
        std::cerr << "warning: fitted power-law exponent " << fit.gamma
                  << " outside the typical range [2, 3]\n";
    }
    return fit;
}

std::uint64_t dminFromFraction(const std::vector<std::uint64_t>& degrees, double h,
                               const PowerLawFit& fit, bool useFittedPmf,
                               std::uint64_t nodeCount) {
    if (!(h > 0.0) || h > 1.0) {
        throw std::invalid_argument("hub fraction h must be in (0, 1]");
    }
    if (degrees.empty()) {
        throw std::invalid_argument("empty degree sequence");
    }
    const std::uint64_t minObserved = *std::min_element(degrees.begin(), degrees.end());

    if (!useFittedPmf) {
        // Empirical complementary CDF: largest observed degree x with
        // |{k_i >= x}| / n >= h.
        std::vector<std::uint64_t> sorted(degrees);
        std::sort(sorted.begin(), sorted.end());
        const double n = static_cast<double>(sorted.size());
        std::uint64_t best = minObserved;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const double tail = n - static_cast<double>(i);
            if (tail / n >= h) {
                best = sorted[i];
            } else {
                break;
            }
        }
        return best;
    }

    // Fitted pmf, normalized over k = kMin .. nodeCount.
    if (nodeCount == 0) {
        nodeCount = degrees.size();
    }
    if (fit.kMin > nodeCount) {
        throw std::invalid_argument("fit.kMin exceeds node count");
    }
    std::vector<double> pmf;
    pmf.reserve(nodeCount - fit.kMin + 1);
    double z = 0.0;
    for (std::uint64_t k = fit.kMin; k <= nodeCount; ++k) {
        const double p = std::pow(static_cast<double>(k), -fit.gamma);
        pmf.push_back(p);
        z += p;
    }
    // Tail mass D(x), scanned from the largest candidate downward.
    double tailMass = 0.0;
    for (std::uint64_t k = nodeCount; k >= fit.kMin; --k) {
        tailMass += pmf[k - fit.kMin] / z;
        if (tailMass >= h) {
            return k;
        }
        if (k == fit.kMin) {
            break;
        }
    }
    std::cerr << "warning: requested hub fraction " << h
              << " exceeds the fitted tail mass; every node becomes a hub\n";
    return minObserved;
}

ResolvedHubPolicy ResolvedHubPolicy::resolve(const HubPolicy& policy,
                                             const std::vector<std::uint64_t>& degrees) {
    if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) {
        if (fixed->dMin < 1) {
            throw std::invalid_argument("dMin must be >= 1");
        }
        return ResolvedHubPolicy(fixed->dMin);
    }
    if (const auto* topN = std::get_if<TopN>(&policy)) {
        if (topN->n < 1) {
            throw std::invalid_argument("top-n must be >= 1");
        }
        if (degrees.empty()) {
            throw std::invalid_argument("top-n policy needs a non-empty degree sequence");
        }
        std::vector<std::uint64_t> sorted(degrees);
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const std::size_t idx = std::min<std::size_t>(topN->n, sorted.size()) - 1;
        // Threshold at the n-th largest degree; equal degrees all qualify.
        return ResolvedHubPolicy(std::max<std::uint64_t>(sorted[idx], 1));
    }
    const auto& fraction = std::get<Fraction>(policy);
    PowerLawFit fit = estimateGamma(degrees, fraction.kMin);
    const std::uint64_t dMin = dminFromFraction(degrees, fraction.h, fit, fraction.useFittedPmf,
                                                degrees.size());
    return ResolvedHubPolicy(std::max<std::uint64_t>(dMin, 1));
}

} // namespace nhc
