#pragma once

// Per-service, per-network input ranges and construction of the four fuzzy
// variables (rssi, rate, velocity, snir) from them.

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "hodec/fuzzy.hpp"

namespace hodec {

enum class ServiceType { Voice, Video, Data };
enum class NetworkKind { Macrocell, Femtocell };

std::string_view service_name(ServiceType service);
std::string_view network_name(NetworkKind network);
ServiceType parse_service(std::string_view token);  // throws ParseError
NetworkKind parse_network(std::string_view token);  // throws ParseError

struct Range {
  double lo, hi;  // lo < hi
  bool operator==(const Range&) const = default;
};

struct VariableRanges {
  Range rssi;      // dBm
  Range rate;      // Mbps
  Range velocity;  // km/h
  AxisDirection velocity_direction = AxisDirection::Ascending;
  Range snir;      // dB
  bool operator==(const VariableRanges&) const = default;
};

// Table of known (service, network) input ranges. Voice and video entries are
// built in; a data profile must be supplied explicitly before lookup.
class ProfileTable {
 public:
  static ProfileTable builtin();

  const VariableRanges& lookup(ServiceType service, NetworkKind network) const;  // MissingProfile
  bool contains(ServiceType service, NetworkKind network) const;
  void set(ServiceType service, NetworkKind network, const VariableRanges& ranges);

 private:
  std::map<std::pair<ServiceType, NetworkKind>, VariableRanges> entries_;
};

ProfileTable builtin_profiles();

// Standard triangular partition over each range; the velocity variable
// carries the profile's direction flag.
VariableSet build_variables(const VariableRanges& ranges);  // InvalidRange

// Profile-file format, one line per variable, all four required:
//   rssi = lo hi
//   rate = lo hi
//   velocity = lo hi asc|desc
//   snir = lo hi
VariableRanges load_profile(std::string_view text);  // ParseError / InvalidRange
std::string serialize_profile(const VariableRanges& ranges);

}  // namespace hodec
