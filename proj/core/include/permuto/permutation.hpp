#pragma once

#include <string>
#include <vector>

namespace permuto {

/// A bijection of {1..size}, stored by its images.
class Permutation {
 public:
  /// images[j - 1] = w(j). Throws std::invalid_argument unless the images
  /// are exactly 1..size in some order.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const { return images_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace permuto
