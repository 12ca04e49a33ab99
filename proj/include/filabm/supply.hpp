#pragma once

#include "filabm/units.hpp"

#include <map>
#include <string>
#include <vector>

namespace filabm {

/// Linear vesting schedule for one recipient.
struct VestingSchedule {
    std::string recipient_id;
    double total_amount = 0.0; // FIL
    Day start_day = 0;
    Day duration_days = 1;
};

enum class StoragePledgeMode {
    /// Storage pledge scaled by the onboarder's share of network QAP.
    ShareScaled,
    /// Literal aggregate form: 20x the entire day's minted rewards.
    PaperLiteral,
};

/// Token-flow constants. Defaults are the Filecoin mainnet values.
struct SupplyParams {
    double max_supply = 1.1e9;                      // FIL
    double simple_fraction = 0.30;
    double baseline_fraction = 0.70;
    double lambda = 0.0;                            // per-day decay, ln2 / (6*365)
    double g = 0.0;                                 // per-day baseline growth, ln2 / 365
    double b0 = 2.888888888 * kEiB;                 // initial baseline storage, bytes
    double reward_vest_fraction = 0.75;
    Day reward_vest_days = 180;
    double storage_pledge_days_multiplier = 20.0;
    double consensus_pledge_fraction = 0.30;
    double gas_burn_rate_beta = 0.0;                // FIL/day
    StoragePledgeMode storage_pledge_mode = StoragePledgeMode::ShareScaled;
    std::vector<VestingSchedule> vesting_schedules;

    SupplyParams();

    double simple_supply_cap() const { return simple_fraction * max_supply; }
    double baseline_supply_cap() const { return baseline_fraction * max_supply; }

    /// Throws ConfigError if any invariant is violated (fractions must sum
    /// to 1, rates positive, vesting total within the 0.9B cap).
    void validate() const;
};

/// Daily snapshot of the token pools. Mutated only by the engine's step.
struct SupplyState {
    Day day = 0;
    double minted_cum = 0.0;        // M_d
    double capped_rbp_cumsum = 0.0; // byte-days
    double vested_cum = 0.0;        // V_d
    double vested_offset = 0.0;     // reconciliation for seeded starts
    double locked_reward = 0.0;     // L^R_d
    double locked_collateral = 0.0; // L^S_d
    double burnt_term_cum = 0.0;    // B^T_d
    double burnt_gas_cum = 0.0;     // B^G_d
    double circulating = 0.0;       // S_d

    // release_day -> amount due that day
    std::map<Day, double> pending_reward_releases;
    std::map<Day, double> pending_collateral_releases;

    double locked_total() const { return locked_reward + locked_collateral; }
    double burnt_cum() const { return burnt_term_cum + burnt_gas_cum; }
};

/// Cumulative simple minting M^S_d: exponential decay with a 6-year half-life.
double simple_minting_cumulative(Day d, const SupplyParams& p);

/// Baseline storage target b_d = b0 * e^(g*d), bytes.
double baseline_function(Day d, const SupplyParams& p);

/// Adds min(b_day, rbp_today) to the cumulative capped RBP for state.day.
void accumulate_capped_rbp(SupplyState& state, double rbp_today, const SupplyParams& p);

/// Cumulative baseline minting M^B from cumulative capped RBP (closed form).
double baseline_minting_cumulative(double capped_rbp_cumsum, const SupplyParams& p);

/// Effective network time theta = (1/g) * ln(g * capped / b0 + 1), days.
double effective_network_time(double capped_rbp_cumsum, const SupplyParams& p);

/// Total vested by day d across all recipient schedules (piecewise linear).
double vesting_cumulative(Day d, const std::vector<VestingSchedule>& schedules);

/// Locks reward_vest_fraction of the day's minted rewards and schedules the
/// locked amount for release in equal daily tranches starting the next day.
void lock_daily_reward(SupplyState& state, double delta_minted, const SupplyParams& p);

/// Storage-pledge lock for newly onboarded QAP. In ShareScaled mode the
/// aggregate 20x daily-mint term is scaled by delta_qap / qap_total; in
/// PaperLiteral mode it is returned unscaled.
double storage_pledge_delta(double delta_minted, double delta_qap, double qap_total,
                            const SupplyParams& p);

/// Consensus-pledge lock: fraction of circulating supply times the onboarded
/// QAP share, with the baseline as a denominator floor.
double consensus_pledge_delta(double circulating, double delta_qap, double qap_total,
                              double baseline, const SupplyParams& p);

/// Locks collateral and schedules its full release at release_day.
void lock_collateral(SupplyState& state, double new_collateral, Day release_day);

/// Removes collateral from the lock pool ahead of its scheduled release
/// (terminations). The amount is deducted from the release schedule.
void release_collateral_early(SupplyState& state, double amount, Day scheduled_release_day);

/// Applies all pending reward/collateral releases due on or before state.day.
/// Returns the released (reward, collateral) amounts.
std::pair<double, double> process_releases(SupplyState& state);

/// Adds the day's termination fees to B^T and refreshes B^G = beta * day.
void burn_step(SupplyState& state, double termination_fees, const SupplyParams& p);

/// Recomputes S = M + V - L - B and stores it. Throws ModelError if negative.
double circulating_supply_step(SupplyState& state);

/// Inverts baseline_minting_cumulative: the capped-RBP cumsum that yields the
/// given cumulative baseline minting. Used when seeding from historical data.
double capped_rbp_from_baseline_minting(double baseline_minted, const SupplyParams& p);

} // namespace filabm
