#include "permuto/permutation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permuto {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : images_) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int size, int a, int b) {
  auto images = identity(size).images();
  std::swap(images.at(static_cast<std::size_t>(a - 1)), images.at(static_cast<std::size_t>(b - 1)));
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < images_.size(); ++j) out << (j ? " " : "") << images_[j];
  out << ']';
  return out.str();
}

}  // namespace permuto
