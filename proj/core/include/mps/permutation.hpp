#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "mps/errors.hpp"
#include "mps/matrix.hpp"

namespace mps {

/// Permutation of {0, ..., n-1} stored as its image list: k -> image(k).
/// As a matrix it is P with P e_k = e_{image(k)}, so (P A P^-1)(image(i), image(j)) = A(i, j).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }
  /// Builds from a one-based image list as used in the JSON formats.
  static Permutation from_one_based(std::span<const long long> image);
  std::vector<long long> to_one_based() const;

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t k) const { return image_.at(k); }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool is_identity() const noexcept;

  Permutation inverse() const;
  /// (this ∘ first): apply `first`, then this.
  Permutation after(const Permutation& first) const;

  /// P A P^-1.
  template <class T>
  Matrix<T> conjugate(const Matrix<T>& a) const {
    if (!a.square() || a.rows() != size()) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(image_[i], image_[j]) = a(i, j);
    return out;
  }
  /// P A (rows moved, columns untouched).
  template <class T>
  Matrix<T> permute_rows(const Matrix<T>& a) const {
    if (a.rows() != size()) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) out(image_[i], j) = a(i, j);
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace mps
