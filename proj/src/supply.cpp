#include "filabm/supply.hpp"
#include "filabm/errors.hpp"

#include <cmath>
#include <sstream>

namespace filabm {

SupplyParams::SupplyParams()
    : lambda(std::log(2.0) / (6.0 * 365.0)), g(std::log(2.0) / 365.0) {}

void SupplyParams::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError("supply params: " + msg); };
    if (std::fabs(simple_fraction + baseline_fraction - 1.0) > 1e-12)
        fail("simple_fraction + baseline_fraction must equal 1");
    if (!(lambda > 0.0) || !(g > 0.0) || !(b0 > 0.0))
        fail("lambda, g and b0 must be positive");
    if (max_supply <= 0.0) fail("max_supply must be positive");
    for (double f : {simple_fraction, baseline_fraction, reward_vest_fraction,
                     consensus_pledge_fraction})
        if (f < 0.0 || f > 1.0) fail("fractions must lie in [0, 1]");
    if (reward_vest_days < 1) fail("reward_vest_days must be >= 1");
    if (storage_pledge_days_multiplier < 0.0) fail("storage pledge multiplier must be >= 0");
    if (gas_burn_rate_beta < 0.0) fail("gas_burn_rate_beta must be >= 0");
    double vest_total = 0.0;
    for (const auto& v : vesting_schedules) {
        if (v.total_amount < 0.0) fail("vesting total_amount must be >= 0");
        if (v.duration_days < 1) fail("vesting duration_days must be >= 1");
        vest_total += v.total_amount;
    }
    if (vest_total > 0.9e9)
        fail("vesting schedules exceed the 0.9B FIL cap");
}

double simple_minting_cumulative(Day d, const SupplyParams& p) {
    if (d < 0) throw ModelError("simple_minting_cumulative: negative day");
    return p.simple_supply_cap() * (1.0 - std::exp(-p.lambda * static_cast<double>(d)));
}

double baseline_function(Day d, const SupplyParams& p) {
    if (d < 0) throw ModelError("baseline_function: negative day");
    return p.b0 * std::exp(p.g * static_cast<double>(d));
}

void accumulate_capped_rbp(SupplyState& state, double rbp_today, const SupplyParams& p) {
    if (rbp_today < 0.0) throw ModelError("accumulate_capped_rbp: negative RBP");
    state.capped_rbp_cumsum += std::min(baseline_function(state.day, p), rbp_today);
}

double effective_network_time(double capped_rbp_cumsum, const SupplyParams& p) {
    if (capped_rbp_cumsum < 0.0)
        throw ModelError("effective_network_time: negative capped RBP");
    return std::log1p(p.g * capped_rbp_cumsum / p.b0) / p.g;
}

double baseline_minting_cumulative(double capped_rbp_cumsum, const SupplyParams& p) {
    if (capped_rbp_cumsum < 0.0)
        throw ModelError("baseline_minting_cumulative: negative capped RBP");
    const double base = p.g * capped_rbp_cumsum / p.b0 + 1.0;
    return p.baseline_supply_cap() * (1.0 - std::pow(base, -p.lambda / p.g));
}

double capped_rbp_from_baseline_minting(double baseline_minted, const SupplyParams& p) {
    const double cap = p.baseline_supply_cap();
    if (baseline_minted < 0.0 || baseline_minted >= cap)
        throw ModelError("capped_rbp_from_baseline_minting: value outside [0, cap)");
    const double theta = -std::log1p(-baseline_minted / cap) / p.lambda;
    return p.b0 / p.g * std::expm1(p.g * theta);
}

double vesting_cumulative(Day d, const std::vector<VestingSchedule>& schedules) {
    if (d < 0) throw ModelError("vesting_cumulative: negative day");
    double total = 0.0;
    for (const auto& s : schedules) {
        const double progress =
            static_cast<double>(d - s.start_day) / static_cast<double>(s.duration_days);
        total += std::clamp(progress, 0.0, 1.0) * s.total_amount;
    }
    return total;
}

void lock_daily_reward(SupplyState& state, double delta_minted, const SupplyParams& p) {
    if (delta_minted < 0.0) throw ModelError("lock_daily_reward: negative mint");
    const double locked = p.reward_vest_fraction * delta_minted;
    if (locked <= 0.0) return;
    state.locked_reward += locked;
    const double per_day = locked / static_cast<double>(p.reward_vest_days);
    for (Day t = 1; t <= p.reward_vest_days; ++t)
        state.pending_reward_releases[state.day + t] += per_day;
}

double storage_pledge_delta(double delta_minted, double delta_qap, double qap_total,
                            const SupplyParams& p) {
    const double aggregate = std::max(p.storage_pledge_days_multiplier * delta_minted, 0.0);
    if (p.storage_pledge_mode == StoragePledgeMode::PaperLiteral) return aggregate;
    if (delta_qap == 0.0) return 0.0;
    if (delta_qap < 0.0) throw ModelError("storage_pledge_delta: negative delta_qap");
    if (qap_total <= 0.0)
        throw ModelError("storage_pledge_delta: zero network QAP with positive onboarding");
    return aggregate * (delta_qap / qap_total);
}

double consensus_pledge_delta(double circulating, double delta_qap, double qap_total,
                              double baseline, const SupplyParams& p) {
    if (circulating < 0.0 || delta_qap < 0.0 || qap_total < 0.0 || baseline < 0.0)
        throw ModelError("consensus_pledge_delta: negative input");
    if (delta_qap == 0.0) return 0.0;
    const double denom = std::max(qap_total, baseline);
    if (denom <= 0.0)
        throw ModelError("consensus_pledge_delta: zero QAP and zero baseline");
    return std::max(p.consensus_pledge_fraction * circulating * delta_qap / denom, 0.0);
}

void lock_collateral(SupplyState& state, double new_collateral, Day release_day) {
    if (new_collateral < 0.0) throw ModelError("lock_collateral: negative amount");
    if (new_collateral == 0.0) return;
    if (release_day <= state.day)
        throw ModelError("lock_collateral: release_day must be after the current day");
    state.locked_collateral += new_collateral;
    state.pending_collateral_releases[release_day] += new_collateral;
}

void release_collateral_early(SupplyState& state, double amount, Day scheduled_release_day) {
    if (amount < 0.0) throw ModelError("release_collateral_early: negative amount");
    if (amount == 0.0) return;
    auto it = state.pending_collateral_releases.find(scheduled_release_day);
    if (it == state.pending_collateral_releases.end() || it->second + 1e-9 < amount)
        throw ModelError("release_collateral_early: no matching scheduled collateral");
    it->second -= amount;
    if (it->second <= 0.0) state.pending_collateral_releases.erase(it);
    state.locked_collateral -= amount;
    if (state.locked_collateral < 0.0) state.locked_collateral = 0.0;
}

std::pair<double, double> process_releases(SupplyState& state) {
    double reward_released = 0.0;
    double collateral_released = 0.0;
    for (auto it = state.pending_reward_releases.begin();
         it != state.pending_reward_releases.end() && it->first <= state.day;
         it = state.pending_reward_releases.erase(it))
        reward_released += it->second;
    for (auto it = state.pending_collateral_releases.begin();
         it != state.pending_collateral_releases.end() && it->first <= state.day;
         it = state.pending_collateral_releases.erase(it))
        collateral_released += it->second;
    state.locked_reward -= reward_released;
    state.locked_collateral -= collateral_released;
    // guard against accumulated rounding in long release chains
    if (state.locked_reward < 0.0 && state.locked_reward > -1e-6) state.locked_reward = 0.0;
    if (state.locked_collateral < 0.0 && state.locked_collateral > -1e-6)
        state.locked_collateral = 0.0;
    return {reward_released, collateral_released};
}

void burn_step(SupplyState& state, double termination_fees, const SupplyParams& p) {
    if (termination_fees < 0.0) throw ModelError("burn_step: negative termination fees");
    state.burnt_term_cum += termination_fees;
    state.burnt_gas_cum = p.gas_burn_rate_beta * static_cast<double>(state.day);
}

double circulating_supply_step(SupplyState& state) {
    const double s =
        state.minted_cum + state.vested_cum - state.locked_total() - state.burnt_cum();
    if (s < 0.0) {
        std::ostringstream os;
        os << "circulating supply went negative on day " << state.day << ": minted="
           << state.minted_cum << " vested=" << state.vested_cum << " locked="
           << state.locked_total() << " burnt=" << state.burnt_cum() << " -> " << s;
        throw ModelError(os.str());
    }
    state.circulating = s;
    return s;
}

} // namespace filabm
