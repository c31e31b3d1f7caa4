#include "hodec/radio.hpp"

#include <cmath>
#include <string>

namespace hodec {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw NonPositiveInput(std::string(what) + " must be > 0, got " + std::to_string(v));
  }
}

}  // namespace

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double hata_correction(double fc_mhz, double hm_m) {
  require_positive(fc_mhz, "carrier frequency");
  require_positive(hm_m, "mobile height");
  const double lf = std::log10(fc_mhz);
  return 1.1 * (lf - 0.7) * hm_m - (1.56 * lf - 0.8);
}

double macro_path_loss(const MacroLink& link) {
  require_positive(link.fc_mhz, "carrier frequency");
  require_positive(link.hb_m, "base-station height");
  require_positive(link.hm_m, "mobile height");
  require_positive(link.d_km, "distance");
  const double lf = std::log10(link.fc_mhz);
  const double lhb = std::log10(link.hb_m);
  return 69.55 + 26.16 * lf - 13.82 * lhb - hata_correction(link.fc_mhz, link.hm_m) +
         (44.9 - 6.55 * lhb) * std::log10(link.d_km) + link.lsh_db;
}

double femto_path_loss(const FemtoLink& link) {
  require_positive(link.fc_mhz, "carrier frequency");
  require_positive(link.d1_m, "distance");
  require_positive(link.n_exp, "distance-loss coefficient");
  return 20.0 * std::log10(link.fc_mhz) + link.n_exp * std::log10(link.d1_m) - 28.0;
}

double received_power_dbm(double pt_dbm, double loss_db) { return pt_dbm - loss_db; }

double snir_db(const InterferenceField& field) {
  if (!(field.signal_mw > 0.0)) {
    throw NonPositiveSignal("received signal power must be > 0 mW, got " +
                            std::to_string(field.signal_mw));
  }
  double denom = field.noise_mw;
  for (double p : field.femto_interferers_mw) denom += p;
  for (double p : field.macro_interferers_mw) denom += p;
  if (!(denom > 0.0)) {
    throw ZeroDenominator("interference-plus-noise power is zero");
  }
  return linear_to_db(field.signal_mw / denom);
}

double channel_capacity_bps(const ChannelAllocation& alloc, double snir_db) {
  require_positive(alloc.bandwidth_hz, "bandwidth");
  return alloc.bandwidth_hz * std::log2(1.0 + db_to_linear(snir_db));
}

}  // namespace hodec
