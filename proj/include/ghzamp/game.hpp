#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ghzamp/quantum.hpp"
#include "ghzamp/rng.hpp"

namespace ghzamp {

// One round's input triple, identified by the two source bits that chose it.
// Inputs outside the legal set are unrepresentable: z is derived.
struct RoundInput {
  std::uint8_t r1 = 0;
  std::uint8_t r2 = 0;

  static RoundInput from_label(int label);
  int label() const { return (r1 << 1) | r2; }
  int x() const { return r1; }
  int y() const { return r2; }
  int z() const { return r1 ^ r2 ^ 1; }
  int and_bit() const { return label() == 3 ? 1 : 0; }
};

struct RoundOutput {
  std::uint8_t a = 0;
  std::uint8_t b = 0;
  std::uint8_t c = 0;

  int parity() const { return a ^ b ^ c; }
  int index() const { return (a << 2) | (b << 1) | c; }
  static RoundOutput from_index(int idx);
};

// a ^ b ^ c == x & y & z.
bool win(const RoundInput& in, const RoundOutput& out);

// Deterministic per-box tables {0,1} -> {0,1}; 4 choices per box, 64 triples.
struct LocalStrategy {
  std::array<std::array<std::uint8_t, 2>, 3> table{};  // [box][input]

  static LocalStrategy from_index(int idx);  // idx in [0, 64)
  int index() const;
  RoundOutput play(const RoundInput& in) const;

  // All three boxes output 0; wins every AND = 0 input.
  static LocalStrategy constant_zero();
  // Lexicographically first strategy winning every label in the mask,
  // or -1-indexed failure (returns false) if none exists.
  static bool winning_for_labels(std::uint8_t label_mask, LocalStrategy* out);
};

struct ClassicalGameValue {
  int best_wins = 0;  // out of the 4 legal inputs, exact rational best_wins/4
  int strategies_scored = 0;
  std::vector<LocalStrategy> maximizers;
};

// Exhaustive score of all 64 deterministic strategies. Mixtures cannot beat
// the deterministic maximum (convexity), so this is the classical value.
ClassicalGameValue classical_win_value();

// Samples abc from the honest correlation table row for `in`; always wins.
RoundOutput honest_round_sample(const RoundInput& in, Rng& rng);

}  // namespace ghzamp
