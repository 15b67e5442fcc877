#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autopsy/ints.hpp"

namespace autopsy::netsim {

// Discrete simulation time. A stamp is fresh while now - stamp < delta_t.
struct Clock {
  std::int64_t now = 0;
  std::int64_t delta_t = 2;

  void advance(std::int64_t ticks);
  bool fresh(std::int64_t stamp) const { return now - stamp < delta_t; }
};

enum class Action { send, deliver, intercept, inject, compute, verdict };
enum class Verdict {
  honest_success,
  honest_failure,
  attack_success,
  attack_failure,
  procedure_inapplicable,
};

std::string_view to_string(Action a);
std::string_view to_string(Verdict v);

// Ordered named values; binary entries are stored hex-encoded.
using Detail = std::vector<std::pair<std::string, std::string>>;

struct Event {
  std::uint64_t step;
  std::string actor;
  Action action;
  Detail detail;
};

struct Transcript {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<Event> events;
  std::optional<Verdict> verdict;

  void log(std::string_view actor, Action action, Detail detail);
  void finish(Verdict v);

  // One JSON object per event, then the verdict object as the final line.
  void write_json_lines(std::ostream& os) const;
};

// Channel payloads are ordered named byte fields, so every message logs
// itself without per-protocol glue.
using Fields = std::vector<std::pair<std::string, Bytes>>;

struct Message {
  std::uint64_t id;
  std::string from;
  std::string to;
  Fields payload;
};

// Lossless FIFO channel under full adversary control: queued messages can be
// pulled out (intercept) and arbitrary payloads pushed in (inject). Each
// transmission advances the clock by one tick.
class Channel {
 public:
  Channel(Clock& clock, Transcript& transcript) : clock_(clock), transcript_(transcript) {}

  std::uint64_t send(std::string_view from, std::string_view to, Fields payload);

  // Oldest queued message addressed to `to`, or nullopt.
  std::optional<Message> deliver(std::string_view to);

  // Removes the message from the honest queue. Unknown id ->
  // std::invalid_argument.
  Fields intercept(std::uint64_t msg_id);

  // Indistinguishable to the receiver from an honest send.
  std::uint64_t inject(std::string_view to, Fields payload);

  std::size_t pending() const { return queue_.size(); }

 private:
  Clock& clock_;
  Transcript& transcript_;
  std::deque<Message> queue_;
  std::uint64_t next_id_ = 0;

  std::uint64_t enqueue(std::string_view from, std::string_view to, Fields payload, Action action,
                        std::string_view actor);
};

Detail fields_detail(const Fields& payload);

}  // namespace autopsy::netsim
