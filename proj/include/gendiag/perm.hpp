#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gendiag/errors.hpp"

namespace gendiag {

/// An element of S_n in one-line representation.  Elements are 0-based
/// internally; the text formats (and everything user-facing) are 1-based.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);

  /// Validates that `images` is a bijection on {0,...,n-1}.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;
  bool is_involution() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// A cycle in canonical rotation: minimum element first.
struct Cycle {
  std::vector<int> elements;  // 0-based

  int length() const { return static_cast<int>(elements.size()); }

  /// Rotates so the minimum element comes first.
  static Cycle from_rotation(std::vector<int> elems);

  /// The inverse cycle, in canonical rotation.
  Cycle reversed() const;

  bool operator==(const Cycle&) const = default;
  auto operator<=>(const Cycle&) const = default;
};

/// The cycles of a permutation grouped by length.  Fixed points are kept
/// explicitly as singleton cycles under length 1.
struct CycleDecomposition {
  int degree = 0;
  std::vector<std::vector<Cycle>> by_length;  // by_length[l]; index 0 unused

  const std::vector<Cycle>& cycles_of_length(int l) const;

  /// All cycles of length >= min_length, sorted.
  std::vector<Cycle> all_cycles(int min_length = 1) const;
};

CycleDecomposition decompose(const Permutation& p);
Permutation recompose(const CycleDecomposition& d);

/// "2 1 3" -> the transposition (1 2) in S_3.
Permutation parse_one_line(const std::string& text);

/// "(1 3 2)(4 5)" over {1,...,n}; omitted elements are fixed points.
Permutation parse_cycles(const std::string& text, int n);

std::string format_one_line(const Permutation& p);

/// Cycle notation with 1-based elements, min-first rotation, cycles sorted by
/// their minima; the identity prints as "id".
std::string format_cycles(const Permutation& p);

std::string format_cycle(const Cycle& c);

}  // namespace gendiag
