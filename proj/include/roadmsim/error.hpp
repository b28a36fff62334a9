#pragma once

#include <stdexcept>
#include <string>

namespace roadmsim {

enum class ErrorCode {
  invalid_argument,
  unsupported_signal,
  empty_plan,
  slot_overflow,
  band_unsupported,
  contention,
  client_busy,
  insufficient_ports,
  over_subscription,
  mis_plug,
  spectrum_blocked,
  port_blocked,
  band_blocked,
  no_route,
  signal_lost,
  saturated_penalty,
  config_parse,
  unresolved_reference,
  config_invalid,
  unknown_scenario,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors that describe a blocked provisioning outcome rather
  /// than a malformed request or broken configuration.
  bool is_blocking() const noexcept {
    return code_ == ErrorCode::spectrum_blocked || code_ == ErrorCode::port_blocked ||
           code_ == ErrorCode::band_blocked || code_ == ErrorCode::contention;
  }

 private:
  ErrorCode code_;
};

}  // namespace roadmsim
