#pragma once

#include <array>
#include <complex>
#include <cstdint>

namespace ghzamp {

// Absolute tolerance for amplitude/probability comparisons. Amplitudes are
// O(1) doubles, so no scaling is needed.
inline constexpr double kAmplitudeTol = 1e-12;

// Three-qubit pure state. Basis index packs the outcome triple abc as
// (a << 2) | (b << 1) | c, qubit A first.
struct StateVector3 {
  std::array<std::complex<double>, 8> amp{};

  double norm_sq() const;
};

// (|000> + |111>) / sqrt(2).
StateVector3 ghz_state();

// Computational basis state |abc> for index in [0, 8).
StateVector3 basis_state(int index);

enum class Basis : std::uint8_t { X, Y };

// Maps the +/-1 measurement eigenvalue to an output bit.
// Standard: +1 -> 0.  Flipped: +1 -> 1.
enum class BitMap : std::uint8_t { Standard, Flipped };

struct QubitSetting {
  Basis basis;
  BitMap bitmap;
};

struct MeasurementSetting {
  std::array<QubitSetting, 3> qubit;
};

// Born-rule distribution over the 8 outcome triples for a product X/Y
// measurement. Throws std::invalid_argument if the state is not normalized.
std::array<double, 8> measure(const StateVector3& state,
                              const MeasurementSetting& setting);

// Round inputs are selected by two source bits r1 r2, packed as the label
// (r1 << 1) | r2. The box inputs are x = r1, y = r2, z = x ^ y ^ 1, so the
// legal input set is {001, 010, 100, 111} and label 3 is the only one with
// x & y & z = 1.
inline constexpr int kNumInputs = 4;

std::array<int, 3> input_bits(int label);  // {x, y, z}
int input_and_bit(int label);

// Calibrated convention: input bit 1 -> X basis, input bit 0 -> Y basis,
// box C's output bit flipped. With this bookkeeping the GHZ state wins
// every legal input with probability 1.
MeasurementSetting calibrated_setting(int label);

// P(abc | xyz) for each legal input, rows keyed by label.
struct CorrelationTable {
  std::array<std::array<double, 8>, kNumInputs> rows{};

  const std::array<double, 8>& row(int label) const { return rows[label]; }
};

// Table derived from the statevector under the calibrated convention.
CorrelationTable honest_table();

}  // namespace ghzamp
