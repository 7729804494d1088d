#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ghzamp {

// Explicit distributions are capped so exact analyses stay tractable.
inline constexpr int kMaxExplicitBits = 24;
inline constexpr double kProbTol = 1e-12;
inline constexpr double kEntropyTol = 1e-9;

// Explicit probability table over fixed-length bitstrings, optionally
// labeled with the adversary symbol it is conditioned on. Strings are
// integers with the first bit in the most significant position.
class CondDistribution {
 public:
  CondDistribution() = default;
  // Entries need not be sorted; probabilities must be >= 0 and sum to 1.
  CondDistribution(int n_bits,
                   std::vector<std::pair<std::uint32_t, double>> entries,
                   std::string label = {});

  static CondDistribution uniform(int n_bits);
  static CondDistribution flat(int n_bits,
                               std::span<const std::uint32_t> support,
                               std::string label = {});
  static CondDistribution point_mass(int n_bits, std::uint32_t s);

  int n_bits() const { return n_bits_; }
  const std::string& label() const { return label_; }
  const std::vector<std::pair<std::uint32_t, double>>& entries() const {
    return entries_;
  }
  std::size_t support_size() const { return entries_.size(); }

  double prob(std::uint32_t s) const;
  double max_prob() const;

  // Bit at 1-based position i, counting from the most significant end.
  int bit(std::uint32_t s, int i) const;

 private:
  int n_bits_ = 0;
  std::vector<std::pair<std::uint32_t, double>> entries_;  // sorted by key
  std::string label_;
};

// -log2 of the best guess. For a family {P(X|E=e)} with weights P(E=e) the
// guessing probability is averaged over e first.
double min_entropy(const CondDistribution& d);
double min_entropy(
    const std::vector<std::pair<double, CondDistribution>>& family);

double min_entropy_rate(const CondDistribution& d);

struct SvParams {
  double delta = 0.0;  // in [0, 1/2]
};

// Guaranteed min-entropy rate of any delta-SV source: -log2(1/2 + delta).
double sv_min_entropy_rate_bound(const SvParams& p);

// Checks 1/2 - delta <= P(bit_i = 0 | prefix) <= 1/2 + delta for every bit
// position and every positive-probability prefix.
bool is_sv_source(const CondDistribution& d, const SvParams& p);

enum class RoundType { Type1, Type2 };

// Type1 iff the fresh entropy exceeds log2(3); the boundary counts as Type2.
RoundType classify_round(double fresh_entropy_bits);

// Depth-n tree of 2-bit round labels with per-edge conditional
// probabilities; leaves identify full 2n-bit realizations.
class SourceTree {
 public:
  struct Node {
    std::uint8_t label = 0;  // edge label from parent, 0..3; unused for root
    double prob = 1.0;       // conditional probability of that edge
    std::int32_t first_child = -1;
    std::int32_t child_count = 0;
  };

  SourceTree() = default;
  SourceTree(int depth, std::vector<Node> nodes);

  static SourceTree uniform(int depth);
  static SourceTree single_path(int depth, std::span<const std::uint8_t> labels);
  static SourceTree from_distribution(const CondDistribution& d);

  int depth() const { return depth_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::int32_t id) const { return nodes_[id]; }
  std::int32_t root() const { return 0; }
  bool is_leaf(std::int32_t id) const { return nodes_[id].child_count == 0; }
  std::int32_t child_by_label(std::int32_t id, int label) const;  // -1 if none

  std::uint64_t leaf_count() const;
  // -log2 of the maximum root-to-leaf probability product.
  double min_entropy() const;
  double min_entropy_rate() const;

  // Throws std::invalid_argument if labels repeat among siblings, outgoing
  // probabilities do not sum to 1, or a path is shorter than `depth`.
  void validate() const;

 private:
  int depth_ = 0;
  std::vector<Node> nodes_;  // nodes_[0] is the root
};

// Flattens leaf probabilities into an explicit 2n-bit distribution.
CondDistribution tree_to_distribution(const SourceTree& t);

// E_i(r): -log2 max_kl P(pair_i = kl | prefix). `prefix` holds the labels of
// rounds 1..i-1 (extra entries beyond i-1 are ignored). Throws on a
// zero-probability prefix.
double fresh_entropy(const SourceTree& t, std::span<const std::uint8_t> prefix,
                     int round);
double fresh_entropy(const CondDistribution& d,
                     std::span<const std::uint8_t> prefix, int round);

// Flat distribution on the larger preimage of f. Its min-entropy is at least
// n_bits - 1 yet f is constant on the support, so no deterministic one-bit
// extractor can produce randomness from a single such source.
CondDistribution adversarial_source_for_function(
    int n_bits, const std::function<int(std::uint32_t)>& f);

}  // namespace ghzamp
