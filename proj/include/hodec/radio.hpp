#pragma once

// Deterministic link-budget formulas: Hata-style macrocell path loss, indoor
// femtocell path loss, received power, SNIR and Shannon capacity.

#include <vector>

#include "hodec/errors.hpp"

namespace hodec {

struct MacroLink {
  double fc_mhz;       // carrier frequency
  double hb_m;         // base-station antenna height
  double hm_m;         // mobile antenna height
  double d_km;         // BS-MS distance
  double lsh_db = 0.0; // fixed shadowing offset
  double pt_dbm = 0.0;
};

struct FemtoLink {
  double fc_mhz;
  double d1_m;           // FAP-MS distance
  double n_exp = 28.0;   // distance-loss coefficient
  double pt_dbm = 0.0;
};

// Linear powers in mW. The denominator needs noise > 0 or one interferer > 0.
struct InterferenceField {
  double signal_mw;
  std::vector<double> femto_interferers_mw;
  std::vector<double> macro_interferers_mw;
  double noise_mw = 0.0;
};

struct ChannelAllocation {
  double bandwidth_hz;
};

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// Mobile-antenna correction term of the macrocell model.
double hata_correction(double fc_mhz, double hm_m);  // NonPositiveInput

double macro_path_loss(const MacroLink& link);  // NonPositiveInput
double femto_path_loss(const FemtoLink& link);  // NonPositiveInput

// dB-domain link budget; equals the linear form pt_mw * 10^(-loss/10).
double received_power_dbm(double pt_dbm, double loss_db);

double snir_db(const InterferenceField& field);  // NonPositiveSignal / ZeroDenominator

double channel_capacity_bps(const ChannelAllocation& alloc, double snir_db);  // NonPositiveInput

}  // namespace hodec
