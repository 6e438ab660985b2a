#include "aiot/params.hpp"

#include <sstream>

namespace aiot {

const char* to_string(Mechanism m) { return m == Mechanism::em ? "em" : "dcm"; }

namespace {

void check(std::vector<std::string>& out, bool ok, const std::string& msg) {
    if (!ok) out.push_back(msg);
}

} // namespace

std::vector<std::string> Scenario::validate() const {
    std::vector<std::string> v;
    check(v, device_type == 1 || device_type == 2, "device_type: must be 1 or 2");
    check(v, n_devices >= 1, "n_devices: must be >= 1");
    check(v, n_g >= 1, "n_g: must be >= 1");
    check(v, warmup_s >= 0.0, "warmup_s: must be >= 0");
    check(v, max_sim_time_s > 0.0, "max_sim_time_s: must be > 0");
    check(v, slot_s > 0.0, "slot_ms: must be > 0");
    check(v, e_max_j > 0.0, "energy_storage_nj: must be > 0");
    check(v, e_low_j < e_up_j, "e_low_nj: turn-off threshold must be below the turn-on threshold e_up_nj");
    check(v, e_up_j <= e_max_j, "e_up_nj: turn-on threshold must not exceed energy_storage_nj");
    check(v, e_low_j >= 0.0, "e_low_nj: must be >= 0");
    check(v, power.p_rx > 0.0, "p_rx_uw: must be > 0");
    check(v, power.p_tx >= 0.0, "p_tx_uw: must be >= 0");
    check(v, power.p_sl >= 0.0, "p_sl_uw: must be >= 0");
    check(v, power.p_lpwur >= 0.0, "p_lpwur_uw: must be >= 0");
    check(v, power.p_sl < power.p_rx, "p_sl_uw: sleep power must be below reception power p_rx_uw");
    check(v, paging_slots >= 1, "paging_slots: must be >= 1");
    check(v, t_pg_slots >= 1, "t_pg_slots: must be >= 1");
    check(v, msg1_slots >= 1, "msg1_slots: must be >= 1");
    check(v, msg2_slots >= 1, "msg2_slots: must be >= 1");
    check(v, msg3_slots >= 1, "msg3_slots: must be >= 1");
    check(v, ao_time >= 1, "ao_time: must be >= 1");
    check(v, ao_freq >= 1, "ao_freq: must be >= 1");
    check(v, t_on_timer_slots >= t_pg_slots,
          "t_on_timer_slots: pre-acquisition on timer must be >= t_pg_slots so a paging "
          "falls inside every on window");
    check(v, t_on_dcm_slots >= paging_slots,
          "t_on_dcm_slots: post-acquisition on window must cover a full paging");
    check(v, t_on_dcm_slots <= static_cast<long long>(n_g) * t_pg_slots,
          "t_on_dcm_slots: on window must fit inside the n_g * t_pg_slots wake period");
    check(v, paging_slots + ao_time * msg1_slots <= t_pg_slots,
          "t_pg_slots: paging plus the access-occasion block must fit in one period");
    check(v, q0 > 0.0 && q0 <= 1.0, "q0: must be in (0, 1]");
    check(v, q_min > 0.0 && q_min <= 1.0, "q_min: must be in (0, 1]");
    check(v, q_min <= q0, "q_min: must be <= q0");
    check(v, completion_quantile > 0.0 && completion_quantile <= 1.0,
          "completion_quantile: must be in (0, 1]");
    check(v, layout.hall_x_m > 0.0 && layout.hall_y_m > 0.0, "hall dimensions must be positive");
    check(v, layout.bs_rows >= 1 && layout.bs_cols >= 1, "base-station grid must be non-empty");
    const int bs_count = layout.bs_rows * layout.bs_cols;
    check(v, layout.active_bs_index >= 0 && layout.active_bs_index < bs_count,
          "active_bs_index: out of range for the base-station grid");
    auto prob_ok = [](double p) { return p >= 0.0 && p <= 1.0; };
    check(v, prob_ok(errors.paging), "loss_paging: must be in [0, 1]");
    check(v, prob_ok(errors.msg1), "loss_msg1: must be in [0, 1]");
    check(v, prob_ok(errors.msg2), "loss_msg2: must be in [0, 1]");
    check(v, prob_ok(errors.msg3), "loss_msg3: must be in [0, 1]");
    check(v, prob_ok(errors.lpwur_miss), "lpwur_miss: must be in [0, 1]");
    return v;
}

Scenario device1_preset() {
    Scenario s;
    s.name = "device1";
    s.device_type = 1;
    s.n_devices = 600;
    s.mechanism = Mechanism::em;
    s.n_g = 4;
    s.lp_wur = false;
    s.warmup_s = 30.0;
    s.max_sim_time_s = 60.0;
    s.slot_s = 0.5e-3;
    s.e_max_j = 500e-9;
    s.e_up_j = 500e-9;
    s.e_low_j = 250e-9;
    s.power = PowerProfile{1e-6, 1e-6, 0.1e-6, 1e-6};
    s.paging_slots = 2;
    s.t_pg_slots = 24;
    s.msg1_slots = 1;
    s.msg2_slots = 1;
    s.msg3_slots = 6;
    s.t_on_dcm_slots = 4;
    s.t_on_timer_slots = 36;
    s.ao_time = 4;
    s.ao_freq = 2;
    return s;
}

Scenario device2_preset() {
    Scenario s = device1_preset();
    s.name = "device2";
    s.device_type = 2;
    s.e_max_j = 5000e-9;
    s.e_up_j = 5000e-9;
    s.e_low_j = 2500e-9;
    s.power = PowerProfile{50e-6, 200e-6, 0.1e-6, 1e-6};
    s.t_pg_slots = 28;
    s.t_on_dcm_slots = 2;
    s.t_on_timer_slots = 52;
    s.ao_freq = 4;
    // The slowest chargers need ~200 s to refill from empty under EM; give the
    // run enough headroom to observe completion.
    s.max_sim_time_s = 300.0;
    return s;
}

bool is_preset_name(const std::string& name) { return name == "device1" || name == "device2"; }

Scenario preset_by_name(const std::string& name) {
    if (name == "device1") return device1_preset();
    if (name == "device2") return device2_preset();
    throw std::runtime_error("unknown preset: " + name + " (expected device1 or device2)");
}

} // namespace aiot
