#include "aiot/energy.hpp"

#include <algorithm>

namespace aiot {

double conversion_efficiency(double p_in_dbm, EfficiencyMode mode) {
    const double rising = (p_in_dbm + 41.0) / 100.0;
    const double falling = (-2.0 * p_in_dbm + 11.0) / 100.0;
    double eff;
    if (mode == EfficiencyMode::as_printed) {
        eff = (p_in_dbm >= -10.0) ? rising : falling;
    } else {
        eff = (p_in_dbm >= -10.0) ? falling : rising;
    }
    return std::clamp(eff, 0.0, 1.0);
}

double harvest_power(double p_in_dbm, EfficiencyMode mode) {
    return dbm_to_watts(p_in_dbm) * conversion_efficiency(p_in_dbm, mode);
}

EnergyStorage integrate_slot(EnergyStorage storage, double draw_w, double harvest_w, double dt_s) {
    storage.e_es = std::clamp(storage.e_es + (harvest_w - draw_w) * dt_s, 0.0, storage.e_max);
    return storage;
}

double em_on_duration(const EnergyStorage& storage, double p_rx_w) {
    return (storage.e_up - storage.e_low) / p_rx_w;
}

} // namespace aiot
