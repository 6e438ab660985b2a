#include "aiot/recorder.hpp"

#include <stdexcept>

namespace aiot {

const char* to_string(EventKind k) {
    switch (k) {
    case EventKind::paging_sent: return "paging_sent";
    case EventKind::msg1_tx: return "msg1_tx";
    case EventKind::msg1_collision: return "msg1_collision";
    case EventKind::msg2_sent: return "msg2_sent";
    case EventKind::msg3_delivered: return "msg3_delivered";
    case EventKind::state_change: return "state_change";
    case EventKind::energy_sample: return "energy_sample";
    }
    return "unknown";
}

std::optional<double> completion_quantile(const std::vector<SeriesPoint>& series, double x,
                                          std::int64_t origin_slot, double slot_s) {
    if (!(x > 0.0) || x > 1.0) {
        throw std::invalid_argument("completion quantile must be in (0, 1]");
    }
    for (const auto& p : series) {
        if (p.fraction >= x) {
            return static_cast<double>(p.slot - origin_slot) * slot_s;
        }
    }
    return std::nullopt;
}

} // namespace aiot
