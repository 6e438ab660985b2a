#pragma once

#include <cstdint>

namespace aiot {

// Reader-to-device paging. Carries everything a device needs to join the
// round: the access probability and the Msg1 access-occasion grid.
struct PagingMsg {
    std::int64_t start_slot = 0;
    int round_index = 0;
    double access_probability = 1.0;
    int ao_time = 1;
    int ao_freq = 1;
    int n_g = 1;
    int duration_slots = 2;
};

// A device's Msg1 transmission on access occasion (time_occasion, channel).
struct Msg1Tx {
    int device_index = -1;
    int time_occasion = 0;
    int channel = 0;
    std::uint16_t random_id = 0;
};

// Msg2 echoes the random id of a successfully decoded Msg1 and grants the
// Msg3 resource on the same frequency channel.
struct Msg2 {
    std::uint16_t random_id = 0;
    std::int64_t grant_start_slot = 0;
    int grant_channel = 0;
    int grant_slots = 6;
};

enum class AOOutcomeKind { idle, success, collision };

struct AOOutcome {
    AOOutcomeKind kind = AOOutcomeKind::idle;
    std::uint16_t random_id = 0; // valid for success only
};

// What the reader puts on the reader-to-device link in one slot. The link is
// serial: at most one of these per slot.
struct R2DActivity {
    enum class Kind { paging, msg2 };
    Kind kind = Kind::paging;
    PagingMsg paging;
    Msg2 msg2;
    int slot_in_message = 0; // 0-based position within the message duration
    bool last_slot = false;
};

} // namespace aiot
