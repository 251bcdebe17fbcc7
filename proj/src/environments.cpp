#include "osfib/environments.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace osfib {

InstanceSpec make_uniform_gap_instance(int k, int best, double base, double delta) {
    if (k < 1) throw InvalidInstanceError("uniform-gap: K must be >= 1");
    if (best < 1 || best > k) throw InvalidInstanceError("uniform-gap: best arm out of range");
    if (delta < 0.0) throw InvalidInstanceError("uniform-gap: delta must be >= 0");
    if (base < 0.0 || base + delta > 1.0) {
        throw InvalidInstanceError("uniform-gap: means must stay in [0,1]");
    }
    std::vector<double> means(static_cast<std::size_t>(k), base);
    means[static_cast<std::size_t>(best - 1)] = base + delta;
    return make_custom_instance(std::move(means), Family::bernoulli,
                                "uniform-gap k=" + std::to_string(k) + " best=" +
                                    std::to_string(best) + " delta=" + std::to_string(delta));
}

InstanceSpec make_random_mean_instance(int k, int best, double lambda, double lo, double hi,
                                       std::uint64_t seed) {
    if (k < 1) throw InvalidInstanceError("random-mean: K must be >= 1");
    if (best < 1 || best > k) throw InvalidInstanceError("random-mean: best arm out of range");
    if (!(lo < hi) || hi > 0.6) {
        throw InvalidInstanceError("random-mean: need lo < hi <= 0.6");
    }
    if (lo < 0.0 || lambda < 0.0 || 0.6 + lambda > 1.0) {
        throw InvalidInstanceError("random-mean: means must stay in [0,1]");
    }
    RngStream stream(seed, 0, StreamLane::instance);
    std::vector<double> means(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        if (i == best) continue;
        means[static_cast<std::size_t>(i - 1)] = stream.uniform(lo, hi);
    }
    means[static_cast<std::size_t>(best - 1)] = 0.6 + lambda;
    return make_custom_instance(std::move(means), Family::bernoulli,
                                "random-mean k=" + std::to_string(k) + " best=" +
                                    std::to_string(best) + " lambda=" + std::to_string(lambda));
}

std::vector<double> auction_reserve_means(const AuctionSpec& spec) {
    // With n iid uniform valuations and reserve r:
    //   E[revenue] = r * n r^(n-1) (1-r)          (exactly one bid >= r)
    //              + n(n-1) * [(1-r^n)/n - (1-r^(n+1))/(n+1)]
    //                                             (second value, given >= r)
    const double n = spec.bidders;
    std::vector<double> means;
    means.reserve(spec.reserves.size());
    for (double r : spec.reserves) {
        const double single = n * std::pow(r, n - 1) * (1.0 - r) * r;
        const double second =
            n * (n - 1) *
            ((1.0 - std::pow(r, n)) / n - (1.0 - std::pow(r, n + 1)) / (n + 1));
        means.push_back(single + second);
    }
    return means;
}

InstanceSpec make_auction_instance(std::vector<double> reserves, int bidders, std::string label) {
    if (reserves.empty()) throw InvalidInstanceError("auction: need at least one reserve");
    if (bidders < 1) throw InvalidInstanceError("auction: need at least one bidder");
    for (std::size_t i = 0; i < reserves.size(); ++i) {
        if (reserves[i] < 0.0 || reserves[i] > 1.0) {
            throw InvalidInstanceError("auction: reserve outside [0,1]");
        }
        if (i > 0 && !(reserves[i - 1] < reserves[i])) {
            throw InvalidInstanceError("auction: reserves must be strictly increasing");
        }
    }
    AuctionSpec spec;
    spec.reserves = std::move(reserves);
    spec.bidders = bidders;
    InstanceSpec inst = make_custom_instance(auction_reserve_means(spec), Family::auction,
                                             std::move(label));
    inst.auction = std::move(spec);
    return inst;
}

RoundSample sample_round(const InstanceSpec& inst, RngStream& stream) {
    RoundSample sample;
    if (inst.family == Family::bernoulli) {
        sample.rewards.reserve(inst.means.size());
        for (double mu : inst.means) {
            sample.rewards.push_back(stream.uniform() < mu ? 1.0 : 0.0);
        }
        return sample;
    }
    // auction and custom_correlated: rewards are coupled through shared bids
    if (!inst.auction) {
        throw InvalidInstanceError("sample_round: auction family without auction spec");
    }
    std::vector<double> bids(static_cast<std::size_t>(inst.auction->bidders));
    for (double& b : bids) b = stream.uniform();
    sample.rewards = auction_round(*inst.auction, bids);
    sample.bids = std::move(bids);
    return sample;
}

namespace {

double revenue_at_reserve(double reserve, const std::vector<double>& sorted_desc) {
    const auto qualifying = std::count_if(sorted_desc.begin(), sorted_desc.end(),
                                          [reserve](double b) { return b >= reserve; });
    if (qualifying >= 2) return sorted_desc[1]; // second-highest bid meets the reserve
    if (qualifying == 1) return reserve;        // lone qualifier pays the reserve
    return 0.0;
}

} // namespace

std::vector<double> auction_round(const AuctionSpec& spec, const std::vector<double>& bids) {
    for (double b : bids) {
        if (b < 0.0 || b > 1.0) throw InvalidBidError("auction_round: bid outside [0,1]");
    }
    std::vector<double> sorted(bids);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<double> rewards;
    rewards.reserve(spec.reserves.size());
    for (double r : spec.reserves) {
        rewards.push_back(revenue_at_reserve(r, sorted));
    }
    return rewards;
}

std::vector<double> censored_revenue(const AuctionSpec& spec, int played,
                                     const std::vector<double>& bids_at_or_above) {
    const int k = static_cast<int>(spec.reserves.size());
    if (played < 1 || played > k) throw InvalidArmError("censored_revenue: reserve index out of range");
    for (double b : bids_at_or_above) {
        if (b < 0.0 || b > 1.0) throw InvalidBidError("censored_revenue: bid outside [0,1]");
    }
    std::vector<double> sorted(bids_at_or_above);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<double> rewards;
    rewards.reserve(static_cast<std::size_t>(k - played + 1));
    for (int j = played; j <= k; ++j) {
        rewards.push_back(revenue_at_reserve(spec.reserves[static_cast<std::size_t>(j - 1)], sorted));
    }
    return rewards;
}

} // namespace osfib
