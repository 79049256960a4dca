#include "migsched/instance_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace migsched {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Instance read_instance(std::istream& in) {
  Instance instance;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = strip(line);
    if (s.empty()) continue;
    try {
      if (!have_header) {
        std::istringstream header(s);
        std::string tag;
        long long m = 0;
        if (!(header >> tag >> m) || tag != "m" || m < 2) {
          throw std::invalid_argument("expected header 'm <int>' with m >= 2");
        }
        instance.m = static_cast<std::size_t>(m);
        have_header = true;
        continue;
      }
      Rational p = parse_rational(s);
      if (p < 0) throw std::invalid_argument("negative processing time");
      instance.jobs.push_back({instance.jobs.size() + 1, p});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("instance line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw std::invalid_argument("instance is missing the 'm <int>' header");
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << "m " << instance.m << '\n';
  for (const Job& job : instance.jobs) {
    if (job.p.get_den() == 1) {
      out << job.p.get_num().get_str() << '\n';
    } else {
      out << to_fraction(job.p) << '\n';
    }
  }
}

void save_instance(const std::string& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path);
  write_instance(out, instance);
}

std::string event_to_json(const Event& event) {
  nlohmann::ordered_json j;
  if (event.kind == Event::Kind::assign) {
    j["op"] = "assign";
    j["job"] = event.job;
    j["to"] = event.to;
  } else {
    j["op"] = "migrate";
    j["job"] = event.job;
    j["from"] = event.from;
    j["to"] = event.to;
  }
  return j.dump();
}

Event event_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  Event event;
  std::string op = j.at("op").get<std::string>();
  event.job = j.at("job").get<std::size_t>();
  event.to = j.at("to").get<std::size_t>();
  if (op == "assign") {
    event.kind = Event::Kind::assign;
  } else if (op == "migrate") {
    event.kind = Event::Kind::migrate;
    event.from = j.at("from").get<std::size_t>();
  } else {
    throw std::invalid_argument("unknown event op '" + op + "'");
  }
  return event;
}

void write_events(std::ostream& out, std::span<const Event> events) {
  for (const Event& event : events) out << event_to_json(event) << '\n';
}

std::vector<Event> read_events(std::istream& in) {
  std::vector<Event> events;
  std::string line;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    events.push_back(event_from_json(line));
  }
  return events;
}

}  // namespace migsched
