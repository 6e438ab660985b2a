#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aiot/channel.hpp"
#include "aiot/energy.hpp"

namespace aiot {

enum class Mechanism {
    em,  // energy-based monitoring: on/off driven purely by storage thresholds
    dcm, // duty-cycled monitoring: on timer before acquisition, sleep/on after
};

const char* to_string(Mechanism m);

// Fully resolved run configuration. Energies in joules, powers in watts,
// durations in seconds or slots as named.
struct Scenario {
    std::string name = "custom";
    int device_type = 1;
    int n_devices = 600;
    Mechanism mechanism = Mechanism::em;
    int n_g = 1; // wake-up group count; 1 = no grouping
    bool lp_wur = false;
    std::uint64_t rng_seed = 1;

    double warmup_s = 30.0;
    double max_sim_time_s = 60.0;
    double slot_s = 0.5e-3;

    double e_max_j = 500e-9;
    double e_up_j = 500e-9;
    double e_low_j = 250e-9;
    PowerProfile power{1e-6, 1e-6, 0.1e-6, 1e-6};
    EfficiencyMode efficiency_mode = EfficiencyMode::peak_at_minus_10;

    int paging_slots = 2;
    int t_pg_slots = 24;
    int msg1_slots = 1;
    int msg2_slots = 1;
    int msg3_slots = 6;
    int t_on_dcm_slots = 4;
    int t_on_timer_slots = 36;
    int ao_time = 4;
    int ao_freq = 2;

    double q0 = 1.0;
    double q_min = 1.0 / 64.0;
    double completion_quantile = 0.99;

    LayoutConfig layout;
    MessageErrorConfig errors;
    std::string pin_file; // optional direct injection of p_in samples

    bool record_state_changes = false;
    bool record_energy_samples = false;

    int ao_count() const { return ao_time * ao_freq; }
    std::int64_t warmup_slots() const { return static_cast<std::int64_t>(warmup_s / slot_s + 0.5); }
    std::int64_t max_inventory_slots() const {
        return static_cast<std::int64_t>(max_sim_time_s / slot_s + 0.5);
    }

    // Human-readable constraint violations; empty means valid.
    std::vector<std::string> validate() const;
};

Scenario device1_preset();
Scenario device2_preset();

// Resolves "device1"/"device2" preset names; empty optional behavior is a
// thrown runtime_error for unknown names.
Scenario preset_by_name(const std::string& name);
bool is_preset_name(const std::string& name);

} // namespace aiot
