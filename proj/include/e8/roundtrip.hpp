#ifndef E8_ROUNDTRIP_HPP
#define E8_ROUNDTRIP_HPP

// Batches of generate -> series -> reconstruct -> compare.

#include "e8/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace e8 {

enum class RoundTripMode { curve, divisor, curves, divisors };

RoundTripMode parse_mode(const std::string& text);  // throws std::invalid_argument

struct RoundTripOptions {
  std::uint64_t seed = 1;
  std::size_t count = 50;
  int max_blowups = 6;  // collections only
  int branches = 2;     // collections only
  RoundTripMode mode = RoundTripMode::curve;
};

struct RoundTripCase {
  std::size_t index = 0;
  bool pass = false;
  std::string series;
  std::string error;  // empty on success or plain mismatch
};

/// Case i only depends on (seed, i). Single modes cycle through cases 1..5.
DualGraph roundtrip_input(const RoundTripOptions& opt, std::size_t index);
RoundTripCase run_case(const RoundTripOptions& opt, std::size_t index);

/// Results are ordered by case index either way.
std::vector<RoundTripCase> run_roundtrips(const RoundTripOptions& opt);
std::vector<RoundTripCase> run_roundtrips_serial(const RoundTripOptions& opt);

}  // namespace e8

#endif  // E8_ROUNDTRIP_HPP
