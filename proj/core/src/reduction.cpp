#include "permuto/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permuto/errors.hpp"

namespace permuto {

namespace {

void require_top_degree(const ExponentVector& v) {
  if (!v.is_top_degree()) {
    throw InvalidDegreeError("exponent vector " + v.to_string() + " has degree " +
                             std::to_string(v.degree()) + ", expected " +
                             std::to_string(v.size()));
  }
}

// Greedy left-to-right parse into ONE/L/R, then merge every L,R pair.
std::optional<std::vector<Block>> parse_blocks(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<Block> blocks;
  int pos = 0;
  while (pos < n) {
    const int x = entries[static_cast<std::size_t>(pos)];
    if (x == 1) {
      blocks.push_back({BlockKind::kOne, pos + 1});
      pos += 1;
      continue;
    }
    if (pos + 1 >= n) return std::nullopt;
    const int y = entries[static_cast<std::size_t>(pos + 1)];
    if (x == 2 && y == 0) {
      blocks.push_back({BlockKind::kLeft, pos + 1});
    } else if (x == 0 && y == 2) {
      blocks.push_back({BlockKind::kRight, pos + 1});
    } else {
      return std::nullopt;
    }
    pos += 2;
  }

  std::vector<Block> merged;
  merged.reserve(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].kind == BlockKind::kLeft && j + 1 < blocks.size() &&
        blocks[j + 1].kind == BlockKind::kRight) {
      merged.push_back({BlockKind::kMerged, blocks[j].position});
      ++j;
    } else {
      merged.push_back(blocks[j]);
    }
  }
  return merged;
}

}  // namespace

ExponentVector::ExponentVector(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("exponent vector must be non-empty");
  for (int x : entries_) {
    if (x < 0 || x > 2) {
      throw std::invalid_argument("exponent vector entries must be 0, 1 or 2, got " +
                                  std::to_string(x));
    }
  }
}

ExponentVector ExponentVector::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view token = text.substr(start, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - start);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.remove_suffix(1);
    if (token.size() != 1 || !std::isdigit(static_cast<unsigned char>(token[0]))) {
      throw std::invalid_argument("malformed exponent vector '" + std::string(text) +
                                  "': expected comma-separated digits");
    }
    entries.push_back(token[0] - '0');
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ExponentVector(std::move(entries));
}

ExponentVector ExponentVector::ones(int n) {
  if (n < 1) throw std::invalid_argument("ExponentVector::ones: n must be positive");
  return ExponentVector(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int ExponentVector::degree() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string ExponentVector::to_string() const {
  std::ostringstream out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j != 0) out << ',';
    out << entries_[j];
  }
  return out.str();
}

bool AugmentedVector::is_star(int position) const {
  if (is_sentinel(position)) return true;
  return inner_->at(position) != 0;
}

VectorStatistics vector_statistics(const ExponentVector& v) {
  VectorStatistics stats;
  for (int x : v.entries()) {
    if (x == 0) ++stats.zeros;
    else if (x == 1) ++stats.ones;
    else ++stats.twos;
  }
  return stats;
}

int block_width(BlockKind kind) {
  switch (kind) {
    case BlockKind::kOne: return 1;
    case BlockKind::kLeft:
    case BlockKind::kRight: return 2;
    case BlockKind::kMerged: return 4;
  }
  return 0;
}

std::vector<int> block_expansion(BlockKind kind) {
  switch (kind) {
    case BlockKind::kOne: return {1};
    case BlockKind::kLeft: return {2, 0};
    case BlockKind::kRight: return {0, 2};
    case BlockKind::kMerged: return {2, 0, 0, 2};
  }
  return {};
}

std::string_view block_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::kOne: return "ONE";
    case BlockKind::kLeft: return "L";
    case BlockKind::kRight: return "R";
    case BlockKind::kMerged: return "M";
  }
  return "?";
}

std::vector<BlockKind> BlockDecomposition::kinds() const {
  std::vector<BlockKind> out;
  out.reserve(blocks_.size());
  for (const Block& b : blocks_) out.push_back(b.kind);
  return out;
}

BlockProfile BlockDecomposition::profile() const {
  BlockProfile p;
  for (const Block& b : blocks_) {
    if (b.kind == BlockKind::kMerged) ++p.merged;
    else if (b.kind == BlockKind::kLeft) ++p.left;
    else if (b.kind == BlockKind::kRight) ++p.right;
  }
  return p;
}

std::vector<int> BlockDecomposition::expand() const {
  std::vector<int> out;
  for (const Block& b : blocks_) {
    const auto part = block_expansion(b.kind);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string_view rule_name(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::kRule1Left: return "R1-left";
    case ReductionRule::kRule1Right: return "R1-right";
    case ReductionRule::kRule2: return "R2";
  }
  return "?";
}

BigRational rule_factor(ReductionRule rule) {
  return rule == ReductionRule::kRule2 ? make_rational(1, 3) : make_rational(-1, 2);
}

bool is_nonvanishing(const ExponentVector& v) { return decompose(v).has_value(); }

std::optional<BlockDecomposition> decompose(const ExponentVector& v) {
  require_top_degree(v);
  auto blocks = parse_blocks(v.entries());
  if (!blocks) return std::nullopt;
  return BlockDecomposition(std::move(*blocks));
}

BigRational reduction_coefficient(const ExponentVector& v) {
  const auto decomposition = decompose(v);
  if (!decomposition) return BigRational(0);
  const BlockProfile p = decomposition->profile();
  return power(make_rational(-1, 2), p.left + p.right) * power(make_rational(1, 3), p.merged);
}

std::optional<ReductionTrace> reduce_with_trace(const ExponentVector& v) {
  const auto decomposition = decompose(v);
  if (!decomposition) return std::nullopt;
  const auto blocks = decomposition->blocks();

  ReductionTrace trace;
  auto emit = [&trace](ReductionRule rule, int position) {
    trace.steps.push_back({rule, position, rule_factor(rule)});
  };
  // After merging, no L is followed by R, so an L always has a non-zero right
  // neighbour; its left neighbour is non-zero once earlier L blocks are gone.
  for (const Block& b : blocks) {
    if (b.kind == BlockKind::kLeft) emit(ReductionRule::kRule1Left, b.position);
  }
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    if (it->kind == BlockKind::kRight) emit(ReductionRule::kRule1Right, it->position);
  }
  for (const Block& b : blocks) {
    if (b.kind == BlockKind::kMerged) emit(ReductionRule::kRule2, b.position);
  }

  trace.coefficient = BigRational(1);
  for (const ReductionStep& step : trace.steps) trace.coefficient *= step.factor;
  return trace;
}

std::optional<VanishingPattern> find_vanishing_pattern(const ExponentVector& v) {
  require_top_degree(v);
  const AugmentedVector augmented(v);
  const int n = v.size();
  for (int first = 1; first <= n; ++first) {
    if (!augmented.is_star(first - 1)) continue;
    int zeros = 0;
    int twos = 0;
    for (int last = first; last <= n; ++last) {
      const int x = v.at(last);
      if (x == 1) break;
      if (last > first && x == v.at(last - 1)) break;
      (x == 0 ? zeros : twos) += 1;
      if (twos > zeros && augmented.is_star(last + 1)) return VanishingPattern{first, last};
    }
  }
  return std::nullopt;
}

namespace {

void search_decompositions(std::span<const int> entries, int pos, std::vector<Block>& current,
                           std::vector<BlockDecomposition>& out) {
  const int n = static_cast<int>(entries.size());
  if (pos == n) {
    out.emplace_back(current);
    return;
  }
  for (BlockKind kind : {BlockKind::kOne, BlockKind::kLeft, BlockKind::kRight, BlockKind::kMerged}) {
    const auto expansion = block_expansion(kind);
    const int width = static_cast<int>(expansion.size());
    if (pos + width > n) continue;
    if (!std::equal(expansion.begin(), expansion.end(), entries.begin() + pos)) continue;
    if (kind == BlockKind::kRight && !current.empty() && current.back().kind == BlockKind::kLeft)
      continue;
    current.push_back({kind, pos + 1});
    search_decompositions(entries, pos + width, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<BlockDecomposition> all_decompositions(const ExponentVector& v) {
  std::vector<BlockDecomposition> out;
  std::vector<Block> current;
  search_decompositions(v.entries(), 0, current, out);
  return out;
}

std::vector<ExponentVector> top_degree_vectors(int n) {
  if (n < 1) throw std::invalid_argument("top_degree_vectors: n must be positive");
  std::vector<ExponentVector> out;
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  while (true) {
    if (std::accumulate(entries.begin(), entries.end(), 0) == n) out.emplace_back(entries);
    int j = n - 1;
    while (j >= 0 && entries[static_cast<std::size_t>(j)] == 2) {
      entries[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++entries[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace permuto
