#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osfib/core.hpp"
#include "osfib/rng.hpp"

// Round samplers for the stochastic environment, plus the two experiment
// instance families and the second-price-auction application.
//
// Auction arms are reserve prices sorted ascending, so playing arm i (the
// i-th lowest reserve) reveals the revenue of every reserve j >= i: the
// seller sees all bids at or above the posted reserve, which determine the
// revenue at every higher reserve as well.

namespace osfib {

struct RoundSample {
    std::vector<double> rewards;            // one entry per arm, in [0,1]
    std::optional<std::vector<double>> bids; // auction family only
};

// All suboptimal arms share `base`; the arm at `best` gets base + delta.
InstanceSpec make_uniform_gap_instance(int k, int best, double base, double delta);

// Suboptimal means iid uniform(lo,hi) drawn from `seed` in arm order
// (skipping `best`); the best arm's mean is 0.6 + lambda.
InstanceSpec make_random_mean_instance(int k, int best, double lambda, double lo, double hi,
                                       std::uint64_t seed);

// Auction with the given reserves (arms, ascending) and iid uniform bidders.
// Arm means are the closed-form expected revenues, so regret accounting
// works for the correlated family too.
InstanceSpec make_auction_instance(std::vector<double> reserves, int bidders,
                                   std::string label = {});

// Expected second-price-with-reserve revenue per reserve, iid uniform bidders.
std::vector<double> auction_reserve_means(const AuctionSpec& spec);

// One environment round. Bernoulli: one uniform draw per arm, in arm order.
// Auction: one uniform valuation draw per bidder, then revenues are computed
// from the shared bid vector.
RoundSample sample_round(const InstanceSpec& inst, RngStream& stream);

// Revenue for every reserve given the full bid vector: the second-highest
// qualifying bid if two or more bids meet the reserve, the reserve itself if
// exactly one does, and zero otherwise.
std::vector<double> auction_round(const AuctionSpec& spec, const std::vector<double>& bids);

// Revenue restricted to reserves played..K, computed from only the bids at
// or above the played reserve. Matches auction_round on those indices.
std::vector<double> censored_revenue(const AuctionSpec& spec, int played,
                                     const std::vector<double>& bids_at_or_above);

} // namespace osfib
