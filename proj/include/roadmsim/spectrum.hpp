#pragma once

#include <string>
#include <vector>

#include "roadmsim/error.hpp"

namespace roadmsim {

/// Speed of light expressed in nm * THz (299792458 m/s scaled so that
/// frequency_thz = kSpeedOfLightNmThz / wavelength_nm).
inline constexpr double kSpeedOfLightNmThz = 299792.458;
inline constexpr double kGhzPerThz = 1000.0;

/// A contiguous transmission window. Frequencies in THz.
struct Band {
  std::string name;      // "C" or "L"
  double low_edge_thz = 0.0;
  double high_edge_thz = 0.0;

  double width_ghz() const { return (high_edge_thz - low_edge_thz) * kGhzPerThz; }
  double center_thz() const { return 0.5 * (low_edge_thz + high_edge_thz); }
  bool contains(double freq_thz) const {
    return freq_thz >= low_edge_thz && freq_thz <= high_edge_thz;
  }

  /// Throws on a degenerate window (high edge must exceed low edge).
  void validate() const;
};

/// Throws unless the two bands are disjoint and the band named "C" sits above
/// the band named "L" in frequency.
void validate_band_pair(const Band& c_band, const Band& l_band);

/// Bit rate class: carries the baud rate, slot width, and super-channel
/// composition used when the class is provisioned.
struct SignalClass {
  std::string name;
  double bit_rate_gbps = 0.0;
  std::string modulation;        // e.g. "DP-16QAM"
  double baud_rate_gbaud = 0.0;  // per subcarrier
  double channel_spacing_ghz = 0.0;
  int subcarrier_count = 1;
  double subcarrier_spacing_ghz = 0.0;

  void validate() const;
};

/// A band's fixed grid: ordered channel centers at one spacing.
struct ChannelPlan {
  Band band;
  double spacing_ghz = 0.0;
  std::vector<double> centers_thz;

  int count() const { return static_cast<int>(centers_thz.size()); }
  double center(int slot) const;

  /// Index of the slot whose center is nearest to freq_thz.
  int nearest_slot(double freq_thz) const;
};

/// Number of channels that fit in a band of the given width.
int channels_in_band(double band_width_ghz, double spacing_ghz);

/// Grid preference for 400-Gbps signals; both spacings are in deployed use.
enum class Spacing400 { ghz_75, ghz_87_5 };

/// Standard channel spacing for a supported bit rate (200/400/800 Gbps).
double spacing_for_signal(double bit_rate_gbps, Spacing400 variant = Spacing400::ghz_75);

/// Lays out channel centers from the band's low edge upward, first center at
/// low_edge + spacing/2.
ChannelPlan build_channel_plan(const Band& band, double spacing_ghz);

double wavelength_to_frequency(double lambda_nm);
double frequency_to_wavelength(double freq_thz);

/// Subcarrier center frequencies, symmetric around the slot center. Errors
/// when the outermost subcarriers would not fit the enclosing slot.
std::vector<double> superchannel_centers(double slot_center_thz, int subcarriers,
                                         double sub_spacing_ghz, double slot_width_ghz);

}  // namespace roadmsim
