#include "autopsy/netsim.hpp"

#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "autopsy/wire.hpp"

namespace autopsy::netsim {

using ordered_json = nlohmann::ordered_json;

void Clock::advance(std::int64_t ticks) {
  if (ticks < 0) throw std::invalid_argument("clock cannot move backwards");
  now += ticks;
}

std::string_view to_string(Action a) {
  switch (a) {
    case Action::send: return "send";
    case Action::deliver: return "deliver";
    case Action::intercept: return "intercept";
    case Action::inject: return "inject";
    case Action::compute: return "compute";
    case Action::verdict: return "verdict";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::honest_success: return "honest-success";
    case Verdict::honest_failure: return "honest-failure";
    case Verdict::attack_success: return "attack-success";
    case Verdict::attack_failure: return "attack-failure";
    case Verdict::procedure_inapplicable: return "procedure-inapplicable";
  }
  return "?";
}

void Transcript::log(std::string_view actor, Action action, Detail detail) {
  events.push_back(Event{events.size(), std::string(actor), action, std::move(detail)});
}

void Transcript::finish(Verdict v) {
  if (verdict.has_value()) throw std::logic_error("transcript already has a verdict");
  verdict = v;
}

void Transcript::write_json_lines(std::ostream& os) const {
  for (const Event& e : events) {
    ordered_json j;
    j["step"] = e.step;
    j["actor"] = e.actor;
    j["action"] = to_string(e.action);
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : e.detail) d[k] = v;
    j["detail"] = std::move(d);
    os << j.dump() << '\n';
  }
  ordered_json v;
  v["scenario"] = scenario;
  v["seed"] = seed;
  v["verdict"] = verdict ? to_string(*verdict) : "none";
  os << v.dump() << '\n';
}

Detail fields_detail(const Fields& payload) {
  Detail d;
  d.reserve(payload.size());
  for (const auto& [name, value] : payload) {
    d.emplace_back(name, wire::hex(value));
  }
  return d;
}

std::uint64_t Channel::enqueue(std::string_view from, std::string_view to, Fields payload,
                               Action action, std::string_view actor) {
  const std::uint64_t id = next_id_++;
  Detail d{{"msg", std::to_string(id)}, {"from", std::string(from)}, {"to", std::string(to)}};
  for (auto& [k, v] : fields_detail(payload)) d.emplace_back(std::move(k), std::move(v));
  transcript_.log(actor, action, std::move(d));
  queue_.push_back(Message{id, std::string(from), std::string(to), std::move(payload)});
  clock_.advance(1);  // one tick per transmission
  return id;
}

std::uint64_t Channel::send(std::string_view from, std::string_view to, Fields payload) {
  return enqueue(from, to, std::move(payload), Action::send, from);
}

std::uint64_t Channel::inject(std::string_view to, Fields payload) {
  return enqueue("adversary", to, std::move(payload), Action::inject, "adversary");
}

std::optional<Message> Channel::deliver(std::string_view to) {
  for (auto it = queue_.begin(); it != queue_.end(); ++it) {
    if (it->to == to) {
      Message m = std::move(*it);
      queue_.erase(it);
      Detail d{{"msg", std::to_string(m.id)}, {"to", m.to}};
      transcript_.log(to, Action::deliver, std::move(d));
      return m;
    }
  }
  return std::nullopt;
}

Fields Channel::intercept(std::uint64_t msg_id) {
  for (auto it = queue_.begin(); it != queue_.end(); ++it) {
    if (it->id == msg_id) {
      Fields payload = std::move(it->payload);
      queue_.erase(it);
      transcript_.log("adversary", Action::intercept, {{"msg", std::to_string(msg_id)}});
      return payload;
    }
  }
  throw std::invalid_argument("intercept: unknown message id");
}

}  // namespace autopsy::netsim
