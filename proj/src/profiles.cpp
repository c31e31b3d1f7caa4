#include "hodec/profiles.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace hodec {

std::string_view service_name(ServiceType service) {
  switch (service) {
    case ServiceType::Voice: return "voice";
    case ServiceType::Video: return "video";
    case ServiceType::Data: return "data";
  }
  return "?";
}

std::string_view network_name(NetworkKind network) {
  switch (network) {
    case NetworkKind::Macrocell: return "macro";
    case NetworkKind::Femtocell: return "femto";
  }
  return "?";
}

ServiceType parse_service(std::string_view token) {
  if (token == "voice") return ServiceType::Voice;
  if (token == "video") return ServiceType::Video;
  if (token == "data") return ServiceType::Data;
  throw ParseError("unknown service '" + std::string(token) + "', expected voice|video|data");
}

NetworkKind parse_network(std::string_view token) {
  if (token == "macro") return NetworkKind::Macrocell;
  if (token == "femto") return NetworkKind::Femtocell;
  throw ParseError("unknown network '" + std::string(token) + "', expected macro|femto");
}

ProfileTable ProfileTable::builtin() {
  ProfileTable t;
  t.set(ServiceType::Voice, NetworkKind::Macrocell,
        VariableRanges{.rssi = {-90, -35},
                       .rate = {1, 4},
                       .velocity = {0, 20},
                       .velocity_direction = AxisDirection::Ascending,
                       .snir = {8, 90}});
  t.set(ServiceType::Voice, NetworkKind::Femtocell,
        VariableRanges{.rssi = {-90, -35},
                       .rate = {1, 7},
                       .velocity = {0, 20},
                       .velocity_direction = AxisDirection::Descending,
                       .snir = {8, 90}});
  t.set(ServiceType::Video, NetworkKind::Macrocell,
        VariableRanges{.rssi = {-62.5, -7.5},
                       .rate = {3, 9},
                       .velocity = {0, 20},
                       .velocity_direction = AxisDirection::Ascending,
                       .snir = {49, 131}});
  t.set(ServiceType::Video, NetworkKind::Femtocell,
        VariableRanges{.rssi = {-117.5, -62.5},
                       .rate = {1, 6},
                       .velocity = {0, 20},
                       .velocity_direction = AxisDirection::Descending,
                       .snir = {-33, 49}});
  return t;
}

const VariableRanges& ProfileTable::lookup(ServiceType service, NetworkKind network) const {
  const auto it = entries_.find({service, network});
  if (it == entries_.end()) {
    throw MissingProfile("no profile for (" + std::string(service_name(service)) + ", " +
                         std::string(network_name(network)) + ")");
  }
  return it->second;
}

bool ProfileTable::contains(ServiceType service, NetworkKind network) const {
  return entries_.contains({service, network});
}

void ProfileTable::set(ServiceType service, NetworkKind network, const VariableRanges& ranges) {
  entries_[{service, network}] = ranges;
}

ProfileTable builtin_profiles() { return ProfileTable::builtin(); }

VariableSet build_variables(const VariableRanges& ranges) {
  return VariableSet{
      .rssi = standard_variable("rssi", ranges.rssi.lo, ranges.rssi.hi),
      .rate = standard_variable("rate", ranges.rate.lo, ranges.rate.hi),
      .velocity = standard_variable("velocity", ranges.velocity.lo, ranges.velocity.hi,
                                    ranges.velocity_direction),
      .snir = standard_variable("snir", ranges.snir.lo, ranges.snir.hi),
  };
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_number(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw ParseError("bad number '" + std::string(token) + "'");
  }
  return value;
}

Range checked_range(double lo, double hi, std::string_view key) {
  if (lo >= hi) {
    std::ostringstream os;
    os << key << " range needs lo < hi, got [" << lo << ", " << hi << "]";
    throw InvalidRange(os.str());
  }
  return Range{lo, hi};
}

// shortest round-trip representation
std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

VariableRanges load_profile(std::string_view text) {
  std::optional<Range> rssi, rate, snir;
  std::optional<Range> velocity;
  AxisDirection velocity_direction = AxisDirection::Ascending;

  size_t pos = 0;
  int line_no = 0;
  while (pos <= text.size()) {
    const size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                           : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = lo hi', got '" +
                       std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const auto tokens = split_ws(line.substr(eq + 1));

    try {
      if (key == "rssi" || key == "rate" || key == "snir") {
        if (tokens.size() != 2) throw ParseError("expected two values after '=' ");
        auto& slot = key == "rssi" ? rssi : key == "rate" ? rate : snir;
        if (slot) throw ParseError("duplicate '" + std::string(key) + "' line");
        slot = checked_range(parse_number(tokens[0]), parse_number(tokens[1]), key);
      } else if (key == "velocity") {
        if (tokens.size() != 3 || (tokens[2] != "asc" && tokens[2] != "desc")) {
          throw ParseError("expected 'velocity = lo hi asc|desc'");
        }
        if (velocity) throw ParseError("duplicate 'velocity' line");
        velocity = checked_range(parse_number(tokens[0]), parse_number(tokens[1]), key);
        velocity_direction =
            tokens[2] == "desc" ? AxisDirection::Descending : AxisDirection::Ascending;
      } else {
        throw ParseError("unknown key '" + std::string(key) + "'");
      }
    } catch (const InvalidRange&) {
      throw;
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (!rssi || !rate || !velocity || !snir) {
    std::string missing;
    if (!rssi) missing += " rssi";
    if (!rate) missing += " rate";
    if (!velocity) missing += " velocity";
    if (!snir) missing += " snir";
    throw ParseError("profile is missing line(s):" + missing);
  }
  return VariableRanges{*rssi, *rate, *velocity, velocity_direction, *snir};
}

std::string serialize_profile(const VariableRanges& ranges) {
  std::string out;
  out += "rssi = " + format_number(ranges.rssi.lo) + " " + format_number(ranges.rssi.hi) + "\n";
  out += "rate = " + format_number(ranges.rate.lo) + " " + format_number(ranges.rate.hi) + "\n";
  out += "velocity = " + format_number(ranges.velocity.lo) + " " +
         format_number(ranges.velocity.hi) +
         (ranges.velocity_direction == AxisDirection::Descending ? " desc" : " asc") + "\n";
  out += "snir = " + format_number(ranges.snir.lo) + " " + format_number(ranges.snir.hi) + "\n";
  return out;
}

}  // namespace hodec
