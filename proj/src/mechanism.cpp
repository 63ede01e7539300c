#include "wptrelay/mechanism.hpp"

#include <algorithm>
#include <limits>

#include "wptrelay/errors.hpp"

namespace wptrelay {

namespace {

void validate(const AuctionInput& in) {
    const std::size_t n = in.bids.size();
    if (in.models.size() != n || in.wpt_gains.size() != n) {
        throw MechanismError("auction input: bids/models/wpt_gains size mismatch");
    }
    if (!(in.p_max > 0.0) || !(in.p_s > 0.0)) {
        throw MechanismError("auction input: powers must be positive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(in.bids[i] > in.models[i].p_si())) {
            throw MechanismError("auction input: bid at or below support edge");
        }
        if (!(in.wpt_gains[i] > 0.0)) {
            throw MechanismError("auction input: nonpositive wpt gain");
        }
    }
}

AuctionOutcome source_outcome(const AuctionInput& in) {
    AuctionOutcome out;
    out.winner = std::nullopt;
    out.payment = 0.0;
    out.direct_feasible = in.p_s <= in.p_max;
    out.comm_success = out.direct_feasible;
    out.source_tx_power = out.comm_success ? in.p_s : 0.0;
    return out;
}

AuctionOutcome relay_outcome(const AuctionInput& in, std::size_t winner,
                             double payment) {
    AuctionOutcome out;
    out.winner = winner;
    out.payment = payment;
    out.source_tx_power = payment;
    out.comm_success = true;
    out.direct_feasible = in.p_s <= in.p_max;
    const double gain = in.wpt_gains[winner];
    out.harvested = gain * (payment - in.models[winner].p_si());
    out.surplus = gain * (payment - in.bids[winner]);
    return out;
}

std::size_t argmin(const std::vector<double>& xs) {
    return static_cast<std::size_t>(
        std::min_element(xs.begin(), xs.end()) - xs.begin());
}

} // namespace

AuctionOutcome run_myerson(const AuctionInput& in, const BisectionSpec& spec) {
    validate(in);
    if (in.bids.empty()) {
        return source_outcome(in);
    }

    std::vector<double> virt(in.bids.size());
    for (std::size_t i = 0; i < in.bids.size(); ++i) {
        virt[i] = virtual_valuation(in.models[i], in.bids[i]);
    }
    const std::size_t best = argmin(virt);
    const double v0 = in.v0();
    if (virt[best] > v0) {
        return source_outcome(in);
    }

    // Critical threshold: the winner keeps winning as long as its virtual
    // valuation stays below v0 and below every rival's.
    double threshold = v0;
    for (std::size_t j = 0; j < virt.size(); ++j) {
        if (j != best) {
            threshold = std::min(threshold, virt[j]);
        }
    }
    double payment = inverse_virtual_valuation(in.models[best], threshold, spec);
    // c(s) >= s puts the exact root in [winning bid, threshold]; clamping
    // strips bisection round-off without moving the mathematical value.
    payment = std::clamp(payment, in.bids[best], threshold);
    return relay_outcome(in, best, payment);
}

AuctionOutcome run_vickrey(const AuctionInput& in) {
    validate(in);
    if (in.bids.empty()) {
        return source_outcome(in);
    }
    const std::size_t best = argmin(in.bids);
    const double v0 = in.v0();
    if (!(in.bids[best] < v0)) {
        return source_outcome(in);
    }
    double runner_up = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < in.bids.size(); ++j) {
        if (j != best) {
            runner_up = std::min(runner_up, in.bids[j]);
        }
    }
    const double payment = std::min(runner_up, v0);  // v0 itself when n == 1
    return relay_outcome(in, best, payment);
}

AuctionOutcome run_perfect_info(const AuctionInput& in) {
    validate(in);
    if (in.bids.empty()) {
        return source_outcome(in);
    }
    const std::size_t best = argmin(in.bids);
    if (in.bids[best] > in.v0()) {
        return source_outcome(in);
    }
    return relay_outcome(in, best, in.bids[best]);
}

double perfect_info_bound(const std::vector<double>& valuations) {
    if (valuations.empty()) {
        throw EmptyError("perfect_info_bound: no candidates");
    }
    return *std::min_element(valuations.begin(), valuations.end());
}

double utility(double candidate_valuation, const AuctionOutcome& outcome,
               std::size_t candidate_index) noexcept {
    if (outcome.winner && *outcome.winner == candidate_index) {
        return outcome.payment - candidate_valuation;
    }
    return 0.0;
}

} // namespace wptrelay
