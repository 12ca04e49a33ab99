#include "filabm/power.hpp"
#include "filabm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace filabm {

double quality_adjusted_power(double rbp_cc, double rbp_deal) {
    if (rbp_cc < 0.0 || rbp_deal < 0.0)
        throw ModelError("quality_adjusted_power: negative power");
    return rbp_cc + kFilPlusMultiplier * rbp_deal;
}

double NetworkPower::agent_qap(const std::string& owner) const {
    auto it = per_agent_qap_.find(owner);
    return it == per_agent_qap_.end() ? 0.0 : it->second;
}

double NetworkPower::renewable_cc(const std::string& owner) const {
    auto it = renewable_cc_.find(owner);
    return it == renewable_cc_.end() ? 0.0 : it->second;
}

std::size_t NetworkPower::active_tranche_count() const {
    std::size_t n = 0;
    for (const auto& [d, ts] : tranches_by_expiry_) n += ts.size();
    return n;
}

void NetworkPower::add_tranche(PowerTranche t) {
    const double q = t.kind == PowerKind::CC ? t.rb_amount : kFilPlusMultiplier * t.rb_amount;
    if (t.kind == PowerKind::CC)
        rbp_cc_ += t.rb_amount;
    else
        rbp_deal_ += t.rb_amount;
    qap_ += q;
    per_agent_qap_[t.owner] += q;
    tranches_by_expiry_[t.expiry_day].push_back(std::move(t));
}

void NetworkPower::remove_power(const PowerTranche& t) {
    const double q = t.kind == PowerKind::CC ? t.rb_amount : kFilPlusMultiplier * t.rb_amount;
    if (t.kind == PowerKind::CC)
        rbp_cc_ -= t.rb_amount;
    else
        rbp_deal_ -= t.rb_amount;
    qap_ -= q;
    per_agent_qap_[t.owner] -= q;
    rbp_cc_ = std::max(rbp_cc_, 0.0);
    rbp_deal_ = std::max(rbp_deal_, 0.0);
    qap_ = std::max(qap_, 0.0);
    if (per_agent_qap_[t.owner] < 0.0) per_agent_qap_[t.owner] = 0.0;
}

double NetworkPower::onboard(const std::string& owner, double rb_amount,
                             double fil_plus_fraction, Day duration) {
    if (rb_amount < 0.0) throw ModelError("onboard: negative amount");
    if (rb_amount == 0.0) return 0.0;
    if (duration < 1) throw ModelError("onboard: duration must be >= 1");
    if (fil_plus_fraction < 0.0 || fil_plus_fraction > 1.0)
        throw ModelError("onboard: fil_plus_fraction outside [0, 1]");
    const double deal = rb_amount * fil_plus_fraction;
    const double cc = rb_amount - deal;
    if (cc > 0.0)
        add_tranche({owner, cc, PowerKind::CC, day, day + duration, 0.0});
    if (deal > 0.0)
        add_tranche({owner, deal, PowerKind::FilPlus, day, day + duration, 0.0});
    return quality_adjusted_power(cc, deal);
}

double NetworkPower::renew(const std::string& owner, double rb_amount, Day duration) {
    if (rb_amount < 0.0) throw ModelError("renew: negative amount");
    if (rb_amount == 0.0) return 0.0;
    if (duration < 1) throw ModelError("renew: duration must be >= 1");
    double available = renewable_cc(owner);
    if (rb_amount > available + 1e-9 * std::max(1.0, available)) {
        std::ostringstream os;
        os << "day " << day << ": agent " << owner << " renewal " << rb_amount
           << " B exceeds expiring CC " << available << " B; clamped";
        warnings_.push_back(os.str());
        rb_amount = available;
    }
    rb_amount = std::min(rb_amount, available);
    if (rb_amount <= 0.0) return 0.0;
    renewable_cc_[owner] = available - rb_amount;
    add_tranche({owner, rb_amount, PowerKind::CC, day, day + duration, 0.0});
    return rb_amount; // CC multiplier is 1x
}

const std::map<std::string, ExpiredPower>& NetworkPower::expire_step(Day d) {
    day = d;
    expired_today_.clear();
    renewable_cc_.clear();
    auto it = tranches_by_expiry_.find(d);
    if (it != tranches_by_expiry_.end()) {
        for (const auto& t : it->second) {
            remove_power(t);
            auto& e = expired_today_[t.owner];
            if (t.kind == PowerKind::CC) {
                e.cc += t.rb_amount;
                renewable_cc_[t.owner] += t.rb_amount;
            } else {
                e.deal += t.rb_amount;
            }
        }
        tranches_by_expiry_.erase(it);
    }
    return expired_today_;
}

std::vector<NetworkPower::TerminatedSlice>
NetworkPower::terminate_cc(const std::string& owner, double rb_amount) {
    std::vector<TerminatedSlice> slices;
    if (rb_amount < 0.0) throw ModelError("terminate_cc: negative amount");
    double remaining = rb_amount;
    for (auto it = tranches_by_expiry_.begin();
         it != tranches_by_expiry_.end() && remaining > 0.0;) {
        auto& ts = it->second;
        for (auto jt = ts.begin(); jt != ts.end() && remaining > 0.0;) {
            if (jt->owner != owner || jt->kind != PowerKind::CC) {
                ++jt;
                continue;
            }
            const double take = std::min(remaining, jt->rb_amount);
            const double pledge_share = jt->rb_amount > 0.0 ? jt->pledge * take / jt->rb_amount : 0.0;
            slices.push_back({pledge_share, jt->expiry_day, take});
            remove_power({jt->owner, take, jt->kind, jt->onboard_day, jt->expiry_day, 0.0});
            jt->rb_amount -= take;
            jt->pledge -= pledge_share;
            remaining -= take;
            if (jt->rb_amount <= 0.0)
                jt = ts.erase(jt);
            else
                ++jt;
        }
        if (ts.empty())
            it = tranches_by_expiry_.erase(it);
        else
            ++it;
    }
    return slices;
}

void NetworkPower::attach_pledge(const std::string& owner, Day expiry_day, double pledge) {
    auto it = tranches_by_expiry_.find(expiry_day);
    if (it == tranches_by_expiry_.end())
        throw ModelError("attach_pledge: no tranche at that expiry");
    for (auto& t : it->second) {
        if (t.owner == owner && t.onboard_day == day) {
            t.pledge += pledge;
            return;
        }
    }
    throw ModelError("attach_pledge: no tranche created today for " + owner);
}

std::vector<const PowerTranche*> NetworkPower::tranches_created_on(Day d) const {
    std::vector<const PowerTranche*> out;
    for (const auto& [expiry, ts] : tranches_by_expiry_)
        for (const auto& t : ts)
            if (t.onboard_day == d) out.push_back(&t);
    return out;
}

} // namespace filabm
