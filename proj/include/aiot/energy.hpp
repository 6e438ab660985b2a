#pragma once

#include <cmath>

namespace aiot {

// Capacitor state. All energies in joules. Invariant: 0 <= e_es <= e_max and
// e_low < e_up <= e_max.
struct EnergyStorage {
    double e_es = 0.0;
    double e_max = 0.0;
    double e_up = 0.0;
    double e_low = 0.0;
};

// Per-state power consumption in watts. The off state draws nothing.
struct PowerProfile {
    double p_rx = 0.0;
    double p_tx = 0.0;
    double p_sl = 0.0;
    double p_lpwur = 0.0;
};

// Orientation of the piecewise RF-to-storage conversion efficiency curve.
// `peak_at_minus_10` (default) rises up to -10 dBm and falls beyond it;
// `as_printed` applies the same two branches with the opposite split.
enum class EfficiencyMode {
    as_printed,
    peak_at_minus_10,
};

inline double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

double conversion_efficiency(double p_in_dbm, EfficiencyMode mode = EfficiencyMode::peak_at_minus_10);

// Harvesting rate in watts for an incident power of p_in dBm.
double harvest_power(double p_in_dbm, EfficiencyMode mode = EfficiencyMode::peak_at_minus_10);

// One-slot energy update: e' = clamp(e + (harvest - draw) * dt, 0, e_max).
EnergyStorage integrate_slot(EnergyStorage storage, double draw_w, double harvest_w, double dt_s);

// Maximum continuous monitoring duration in seconds, (e_up - e_low) / p_rx.
double em_on_duration(const EnergyStorage& storage, double p_rx_w);

} // namespace aiot
