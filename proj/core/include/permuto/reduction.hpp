#pragma once

// Monomials in the simple-root classes alpha_1..alpha_n of the permutohedral
// variety, stored as exponent vectors with entries in {0, 1, 2}.
//
// A top-degree monomial (exponents summing to n) is a rational multiple of
// c_n = alpha_1 * ... * alpha_n. It is non-zero exactly when its exponent
// vector tiles by the blocks (1), (2,0) and (0,2); an adjacent (2,0)(0,2)
// pair is read as a single (2,0,0,2) block. Each (2,0) or (0,2) block
// contributes a factor -1/2 and each (2,0,0,2) block a factor 1/3.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permuto/exact.hpp"

namespace permuto {

class ExponentVector {
 public:
  /// Throws std::invalid_argument when empty or when an entry is outside
  /// {0, 1, 2}. Any total degree is accepted here; operations that need a
  /// top-degree monomial check it themselves.
  explicit ExponentVector(std::vector<int> entries);

  /// Parses comma-separated digits such as "2,0,1,2,0,0,2,0,2,1".
  /// Whitespace around entries is ignored.
  static ExponentVector parse(std::string_view text);

  /// (1, 1, ..., 1), i.e. c_n itself.
  static ExponentVector ones(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  int degree() const;
  bool is_top_degree() const { return degree() == size(); }

  /// 1-based access, matching the alpha subscripts.
  int at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  std::span<const int> entries() const { return entries_; }

  std::string to_string() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> entries_;
};

/// The exponent vector with a virtual non-zero entry at positions 0 and n+1.
class AugmentedVector {
 public:
  explicit AugmentedVector(const ExponentVector& inner) : inner_(&inner) {}

  /// Valid for 0 <= position <= n + 1.
  bool is_star(int position) const;
  bool is_sentinel(int position) const { return position == 0 || position == inner_->size() + 1; }
  int size() const { return inner_->size() + 2; }
  const ExponentVector& inner() const { return *inner_; }

 private:
  const ExponentVector* inner_;
};

struct VectorStatistics {
  int zeros = 0;
  int ones = 0;
  int twos = 0;

  friend bool operator==(const VectorStatistics&, const VectorStatistics&) = default;
};

VectorStatistics vector_statistics(const ExponentVector& v);

enum class BlockKind {
  kOne,     // (1)
  kLeft,    // (2,0)
  kRight,   // (0,2)
  kMerged,  // (2,0,0,2)
};

int block_width(BlockKind kind);
std::vector<int> block_expansion(BlockKind kind);
std::string_view block_name(BlockKind kind);

struct Block {
  BlockKind kind;
  int position;  // 1-based index of the first entry covered

  int width() const { return block_width(kind); }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Numbers of M, L and R blocks.
struct BlockProfile {
  int merged = 0;
  int left = 0;
  int right = 0;

  int squared_factors() const { return 2 * merged + left + right; }
  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

class BlockDecomposition {
 public:
  explicit BlockDecomposition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  std::span<const Block> blocks() const { return blocks_; }
  std::vector<BlockKind> kinds() const;
  BlockProfile profile() const;

  /// Concatenation of the block expansions.
  std::vector<int> expand() const;

 private:
  std::vector<Block> blocks_;
};

enum class ReductionRule {
  kRule1Left,   // (*,2,0,*) -> (*,1,1,*), factor -1/2
  kRule1Right,  // (*,0,2,*) -> (*,1,1,*), factor -1/2
  kRule2,       // (*,2,0,0,2,*) -> (*,1,1,1,1,*), factor 1/3
};

std::string_view rule_name(ReductionRule rule);
BigRational rule_factor(ReductionRule rule);

struct ReductionStep {
  ReductionRule rule;
  int position;  // 1-based start of the rewritten block
  BigRational factor;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  BigRational coefficient;
};

/// Location of an alternating run S of 0s and 2s with more 2s than 0s that
/// sits between two non-zero entries of the augmented vector.
struct VanishingPattern {
  int first;  // 1-based, inclusive
  int last;
};

// The functions below require a top-degree vector and throw
// InvalidDegreeError otherwise.

bool is_nonvanishing(const ExponentVector& v);

/// Unique decomposition into ONE/L/R/M blocks with every L immediately
/// followed by R merged into M; nullopt when the monomial vanishes.
std::optional<BlockDecomposition> decompose(const ExponentVector& v);

/// Coefficient c with monomial = c * c_n; zero when the monomial vanishes.
BigRational reduction_coefficient(const ExponentVector& v);

/// Rule applications in order: L blocks left to right, R blocks right to
/// left, then every M block.
std::optional<ReductionTrace> reduce_with_trace(const ExponentVector& v);

/// Scans the augmented vector directly for a vanishing pattern. Independent
/// of the block parser; used for diagnostics and as a cross-check.
std::optional<VanishingPattern> find_vanishing_pattern(const ExponentVector& v);

/// Every decomposition over the merged alphabet {ONE, L, R, M} that has no L
/// immediately followed by R, found by exhaustive search.
std::vector<BlockDecomposition> all_decompositions(const ExponentVector& v);

/// Every top-degree vector of length n with entries in {0, 1, 2}, in
/// lexicographic order.
std::vector<ExponentVector> top_degree_vectors(int n);

}  // namespace permuto
