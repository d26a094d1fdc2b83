#pragma once

// Publisher retransmission and subscriber freshness state machines. All
// transitions are pure (state, input) -> (state', outputs); instances are
// single-owner and never shared mutably.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iecsim/goose_codec.hpp"

namespace iecsim::goose {

using Nanos = std::int64_t;  // durations and timestamps, integer nanoseconds

struct Ratio {
    std::uint32_t num = 1;
    std::uint32_t den = 1;

    bool operator==(const Ratio&) const = default;
};

struct RetransmissionProfile {
    Nanos t0 = 6'500'000;            // first retransmission interval
    Ratio multiplier{2, 1};          // interval growth per retransmission, > 1
    Nanos tmax = 350'000'000;        // stable-state interval cap
    Ratio tatl_factor{2, 1};         // TATL = factor x current interval...
    std::optional<std::uint32_t> tatl_fixed_ms;  // ...unless overridden

    // Throws ConfigError unless 0 < t0 <= tmax, multiplier > 1 and the
    // TATL rule yields a positive lifetime.
    void validate() const;
};

struct GooseIdentity {
    std::string gocb_ref;
    std::string go_id;
    std::string data_set;
    std::uint32_t conf_rev = 1;
};

struct PublisherState {
    RetransmissionProfile profile;
    GooseIdentity identity;
    std::vector<codec::DataValue> dataset;  // fixes the dataset arity
    std::uint32_t st_num = 0;               // 0 = nothing published yet
    std::uint32_t sq_num = 0;
    Nanos current_interval = 0;
};

struct PublishResult {
    PublisherState state;
    codec::GoosePdu pdu;
    Nanos next_timer;  // delay until the next retransmission
};

// New event: stNum advances, sqNum resets to 0, the interval restarts at
// t0. new_data must match the configured dataset arity (ConfigError).
PublishResult publish_event(PublisherState state, std::vector<codec::DataValue> new_data,
                            Nanos now);

// Retransmission timer: sqNum advances, the interval grows geometrically
// up to tmax, data is unchanged. Requires a prior publication (ConfigError).
PublishResult on_timer(PublisherState state, Nanos now);

enum class ReceiveVerdict { NewEvent, Retransmission, Duplicate, OutOfOrder, StaleEvent };

const char* to_string(ReceiveVerdict v);

enum class FreshnessStatus { NeverSeen, Fresh, Expired };

struct SubscriberEntry {
    std::uint32_t last_st_num = 0;
    std::uint32_t last_sq_num = 0;
    Nanos last_arrival = 0;
    std::uint32_t last_tatl_ms = 0;
    FreshnessStatus status = FreshnessStatus::NeverSeen;
};

struct SubscriberState {
    std::map<std::string, SubscriberEntry> by_go_id;
};

struct ReceiveResult {
    SubscriberState state;
    ReceiveVerdict verdict;
    std::uint32_t gap = 0;  // skipped retransmissions, OutOfOrder only
};

// Classifies a decoded PDU against the per-goId history. Arrival time and
// TATL are recorded for every verdict except StaleEvent.
ReceiveResult on_receive(SubscriberState state, const codec::GoosePdu& pdu, Nanos now);

struct Expiry {
    std::string go_id;
    Nanos expired_since;  // now - lastArrival - TATL, > 0
};

// Entries whose age strictly exceeds their declared TATL; their status
// flips to Expired in the returned state. Never-seen entries are skipped.
std::pair<SubscriberState, std::vector<Expiry>> check_expiry(SubscriberState state, Nanos now);

}  // namespace iecsim::goose
