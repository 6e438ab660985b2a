#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aiot/rng.hpp"

namespace aiot {

enum class PathLossModel {
    inf_dh_nlos,
    free_space,
    fixed_table,
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Indoor factory layout: a rectangular hall with a grid of base stations, one
// of which is the active reader. Devices are dropped uniformly over the hall
// and kept only if their incident power clears the sensitivity threshold.
struct LayoutConfig {
    double hall_x_m = 120.0;
    double hall_y_m = 60.0;
    int bs_rows = 3;
    int bs_cols = 6;
    double bs_spacing_m = 20.0;
    int active_bs_index = 8; // row-major; 8 is a central grid point
    bool nearest_bs_mode = false;
    double tx_power_dbm = 33.0;
    double carrier_ghz = 0.9;
    PathLossModel pathloss = PathLossModel::inf_dh_nlos;
    std::vector<std::pair<double, double>> pathloss_table; // (distance_m, loss_db), for fixed_table
    double sensitivity_dbm = -36.0;
};

// Per-message-type loss probabilities, all default 0 (error-free links).
struct MessageErrorConfig {
    double paging = 0.0;
    double msg1 = 0.0;
    double msg2 = 0.0;
    double msg3 = 0.0;
    double lpwur_miss = 0.0; // extra preamble-miss probability of the wake-up receiver
};

struct Placement {
    std::vector<Vec2> positions;
    std::vector<double> p_in_dbm;
};

struct PlacementInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Vec2> bs_positions(const LayoutConfig& layout);

double path_loss_db(double distance_m, PathLossModel model, double carrier_ghz,
                    const std::vector<std::pair<double, double>>* table = nullptr);

// Incident power at `pos` from the active (or nearest) base station.
double incident_power_dbm(const Vec2& pos, const LayoutConfig& layout);

// Uniform drop over the hall with rejection of devices below sensitivity.
Placement place_devices(int n, const LayoutConfig& layout, Rng& rng);

// Direct-injection placement: p_in drawn (with replacement) from a sample
// list, still filtered by sensitivity. Positions are drawn for logging only.
Placement place_devices_from_samples(int n, const std::vector<double>& samples,
                                     const LayoutConfig& layout, Rng& rng);

// Newline-separated p_in samples in dBm.
std::vector<double> load_pin_samples(const std::string& path);

} // namespace aiot
