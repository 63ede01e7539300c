#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wptrelay/numerics.hpp"
#include "wptrelay/valuation.hpp"

namespace wptrelay {

/// Everything a coordination mechanism is allowed to see, plus the per-link
/// WPT gains needed to account for harvested energy afterwards.
///
/// Selection and pricing read only p_max, p_s, bids and models; wpt_gains
/// (alpha * a_r * h_si per candidate, known to the source anyway) is used
/// exclusively to fill the energy fields of the outcome.
struct AuctionInput {
    double p_max = 0.0;
    double p_s = 0.0;                    // direct-link power, may exceed p_max
    std::vector<double> bids;            // one per candidate, in watts
    std::vector<ValuationModel> models;  // the source's belief per candidate
    std::vector<double> wpt_gains;

    /// The buyer's own valuation min{p_max, p_s}.
    double v0() const noexcept { return p_max < p_s ? p_max : p_s; }
};

/// Result of one auction round.
///
/// payment is the transfer x(v): the total source transmit power when a
/// candidate wins, 0 otherwise. source_tx_power is the power actually
/// radiated, which differs from the transfer when the source wins but cannot
/// afford the direct link. surplus assumes bids were truthful (the winner's
/// retransmission power is inferred from its bid).
struct AuctionOutcome {
    std::optional<std::size_t> winner;  // nullopt: the source keeps the contract
    double payment = 0.0;
    double source_tx_power = 0.0;
    bool comm_success = false;
    double harvested = 0.0;
    double surplus = 0.0;
    bool direct_feasible = false;  // p_s <= p_max, i.e. v0 came from p_s
};

/// Buyer-optimal reverse auction: assigns to the lowest virtual valuation if
/// it beats v0 and pays the critical bid (the highest report that still
/// wins), found by inverting the winner's virtual valuation.
AuctionOutcome run_myerson(const AuctionInput& input, const BisectionSpec& spec);

/// Second-price baseline with a v0 reserve: the lowest bid wins if it beats
/// v0 and is paid the runner-up bid capped at v0 (v0 itself when alone).
AuctionOutcome run_vickrey(const AuctionInput& input);

/// Full-information benchmark: the cheapest candidate at its exact breakeven
/// price, when that beats v0. Bids are taken as true valuations.
AuctionOutcome run_perfect_info(const AuctionInput& input);

/// min over valuations; the payment a fully informed source would make.
double perfect_info_bound(const std::vector<double>& valuations);

/// Ex-post payoff of one candidate: payment minus valuation if it won, else 0.
double utility(double candidate_valuation, const AuctionOutcome& outcome,
               std::size_t candidate_index) noexcept;

} // namespace wptrelay
