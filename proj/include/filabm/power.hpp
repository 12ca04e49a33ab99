#pragma once

#include "filabm/units.hpp"

#include <map>
#include <string>
#include <vector>

namespace filabm {

enum class PowerKind { CC, FilPlus };

/// Aggregate power tranche: power is modeled in homogeneous aggregate terms,
/// not per sector. A tranche is one agent's onboarded (or renewed) amount
/// with a shared expiry day.
struct PowerTranche {
    std::string owner;
    double rb_amount = 0.0; // bytes
    PowerKind kind = PowerKind::CC;
    Day onboard_day = 0;
    Day expiry_day = 0;
    double pledge = 0.0;    // FIL locked against this tranche
};

/// Per-agent power expiring on a given day, reported by expire_step.
struct ExpiredPower {
    double cc = 0.0;     // bytes
    double deal = 0.0;   // bytes
    double pledge = 0.0; // FIL released back to the owner
};

/// QAP of a CC/FIL+ split: cc + 10 * deal.
double quality_adjusted_power(double rbp_cc, double rbp_deal);

/// Network power ledger with scheduled expirations and per-agent attribution.
/// Single writer per simulation run; decisions are applied in agent-id order.
class NetworkPower {
public:
    Day day = 0;

    double rbp_cc() const { return rbp_cc_; }
    double rbp_deal() const { return rbp_deal_; }
    double rbp_total() const { return rbp_cc_ + rbp_deal_; }
    double qap() const { return qap_; }

    const std::map<std::string, double>& per_agent_qap() const { return per_agent_qap_; }
    double agent_qap(const std::string& owner) const;

    /// Power that expired during the most recent expire_step, by owner.
    const std::map<std::string, ExpiredPower>& expired_today() const { return expired_today_; }

    /// Owner's CC power that expired today and has not yet been renewed.
    double renewable_cc(const std::string& owner) const;

    std::size_t active_tranche_count() const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Creates CC and FIL+ tranches expiring at day + duration.
    /// Returns the QAP increment (for pledge computation).
    double onboard(const std::string& owner, double rb_amount, double fil_plus_fraction,
                   Day duration);

    /// Extends CC power that expired today by duration, clamping to the
    /// available amount (a warning is recorded when clamping).
    /// Returns the QAP increment; renewals re-post pledge at full weight.
    double renew(const std::string& owner, double rb_amount, Day duration);

    /// Removes tranches expiring on `day` and reports the removed amounts per
    /// owner. Must be called once per day before agent decisions.
    const std::map<std::string, ExpiredPower>& expire_step(Day day);

    /// Removes up to rb_amount of the owner's CC power, earliest expiry
    /// first (terminations). Returns per-tranche (pledge, scheduled release
    /// day, removed bytes) for the engine to settle collateral.
    struct TerminatedSlice {
        double pledge = 0.0;
        Day release_day = 0;
        double rb_amount = 0.0;
    };
    std::vector<TerminatedSlice> terminate_cc(const std::string& owner, double rb_amount);

    /// Tranches created by onboard/renew on the given day. The engine fills
    /// in pledges after aggregation, hence mutable access.
    std::vector<PowerTranche*> tranches_created_on(Day d);

private:
    void add_tranche(PowerTranche t);
    void remove_power(const PowerTranche& t);

    double rbp_cc_ = 0.0;
    double rbp_deal_ = 0.0;
    double qap_ = 0.0;
    std::map<Day, std::vector<PowerTranche>> tranches_by_expiry_;
    std::map<std::string, double> per_agent_qap_;
    std::map<std::string, ExpiredPower> expired_today_;
    std::map<std::string, double> renewable_cc_;
    std::vector<std::string> warnings_;
};

} // namespace filabm
