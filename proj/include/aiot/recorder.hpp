#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace aiot {

enum class EventKind {
    paging_sent,
    msg1_tx,
    msg1_collision,
    msg2_sent,
    msg3_delivered,
    state_change,
    energy_sample,
};

const char* to_string(EventKind k);

// One simulation event. p1..p3 are kind-specific:
//   paging_sent:    p1=round_index, p2=access_probability
//   msg1_tx:        p1=time_occasion, p2=channel, p3=random_id
//   msg1_collision: p1=time_occasion, p2=channel, p3=transmitter_count
//   msg2_sent:      p1=random_id, p2=grant_start_slot, p3=grant_channel
//   msg3_delivered: (none)
//   state_change:   p1=from_state, p2=to_state
//   energy_sample:  p1=e_es_joules
struct EventRecord {
    std::int64_t slot = 0;
    std::int32_t device_id = -1; // -1 for reader-side events
    EventKind kind = EventKind::paging_sent;
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
};

struct SeriesPoint {
    std::int64_t slot = 0; // absolute slot index
    double fraction = 0.0;
};

// Collects the per-run event log and the inventoried-fraction time series.
class Recorder {
public:
    Recorder(bool record_state_changes, bool record_energy_samples)
        : record_state_changes_(record_state_changes),
          record_energy_samples_(record_energy_samples) {}

    void event(std::int64_t slot, std::int32_t device_id, EventKind kind, double p1 = 0.0,
               double p2 = 0.0, double p3 = 0.0) {
        if (kind == EventKind::state_change && !record_state_changes_) return;
        if (kind == EventKind::energy_sample && !record_energy_samples_) return;
        events_.push_back({slot, device_id, kind, p1, p2, p3});
    }

    void sample(std::int64_t slot, double fraction) {
        if (!series_.empty() && series_.back().slot == slot) {
            series_.back().fraction = fraction;
            return;
        }
        series_.push_back({slot, fraction});
    }

    const std::vector<EventRecord>& events() const { return events_; }
    const std::vector<SeriesPoint>& series() const { return series_; }

private:
    bool record_state_changes_;
    bool record_energy_samples_;
    std::vector<EventRecord> events_;
    std::vector<SeriesPoint> series_;
};

// First time (seconds from `origin_slot`) at which the series reaches
// fraction >= x; empty if never. Throws std::invalid_argument outside (0, 1].
std::optional<double> completion_quantile(const std::vector<SeriesPoint>& series, double x,
                                          std::int64_t origin_slot, double slot_s);

} // namespace aiot
