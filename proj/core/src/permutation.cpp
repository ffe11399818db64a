#include "mps/permutation.hpp"

namespace mps {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t k : image_) {
    if (k >= image_.size() || seen[k]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[k] = true;
  }
}

Permutation Permutation::from_one_based(std::span<const long long> image) {
  std::vector<std::size_t> v;
  v.reserve(image.size());
  for (long long k : image) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "permutation images are one-based");
    v.push_back(static_cast<std::size_t>(k - 1));
  }
  return Permutation(std::move(v));
}

std::vector<long long> Permutation::to_one_based() const {
  std::vector<long long> v;
  v.reserve(image_.size());
  for (std::size_t k : image_) v.push_back(static_cast<long long>(k) + 1);
  return v;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != k) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t k = 0; k < image_.size(); ++k) inv[image_[k]] = k;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<std::size_t> v(image_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = image_[first.image_[k]];
  return Permutation(std::move(v));
}

}  // namespace mps
