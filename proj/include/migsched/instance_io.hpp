#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "migsched/schedule.hpp"

namespace migsched {

/// Text format: first line `m <int>`, then one processing time per line as
/// an integer, decimal or `num/den`. Blank lines and `#` comments are skipped.
Instance read_instance(std::istream& in);
Instance load_instance(const std::string& path);
void write_instance(std::ostream& out, const Instance& instance);
void save_instance(const std::string& path, const Instance& instance);

/// One JSON object per line:
///   {"op":"assign","job":i,"to":j}
///   {"op":"migrate","job":i,"from":j,"to":k}
std::string event_to_json(const Event& event);
Event event_from_json(const std::string& line);
void write_events(std::ostream& out, std::span<const Event> events);
std::vector<Event> read_events(std::istream& in);

}  // namespace migsched
