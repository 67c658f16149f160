#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/rng.hpp"

namespace ugfpc {

/// Largest supported ambient dimension: one vector fits one machine word.
inline constexpr int kMaxDim = 64;

/// A vector of F_2^m.
///
/// Coordinate 0 is the leftmost character of the rendered bit string and is
/// stored in the most significant of the `dim` low bits, so the numeric order
/// of `word()` agrees with the lexicographic order of `str()`.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  Gf2Vector(int dim, std::uint64_t word);

  static Gf2Vector zero(int dim) { return Gf2Vector(dim, 0); }
  static Gf2Vector parse(std::string_view bits);

  int dim() const noexcept { return dim_; }
  std::uint64_t word() const noexcept { return word_; }
  bool is_zero() const noexcept { return word_ == 0; }
  bool bit(int coordinate) const;

  std::string str() const;

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend std::strong_ordering operator<=>(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::uint8_t dim_ = 0;
  std::uint64_t word_ = 0;
};

/// A subspace of F_2^m held as its reduced row-echelon basis: pivots (the
/// leftmost set coordinate of each basis vector) strictly increase along the
/// list and every pivot column is zero in all other basis vectors. Two
/// subspaces are equal as sets iff their bases are identical.
class Gf2Subspace {
 public:
  Gf2Subspace() = default;
  explicit Gf2Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {}

  int ambient_dim() const noexcept { return ambient_dim_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  bool is_full() const noexcept { return dim() == ambient_dim_; }
  const std::vector<Gf2Vector>& basis() const noexcept { return basis_; }

  /// All 2^dim members in increasing order. dim must be small (<= 20).
  std::vector<Gf2Vector> elements() const;

  /// Basis rendered as bit strings, sorted lexicographically.
  std::vector<std::string> to_strings() const;

  friend bool operator==(const Gf2Subspace&, const Gf2Subspace&) = default;
  friend std::strong_ordering operator<=>(const Gf2Subspace& a, const Gf2Subspace& b);

 private:
  friend Gf2Subspace rref_basis(std::span<const Gf2Vector>, int);
  int ambient_dim_ = 0;
  std::vector<Gf2Vector> basis_;
};

Gf2Subspace rref_basis(std::span<const Gf2Vector> vectors, int ambient_dim);
bool contains(const Gf2Subspace& s, const Gf2Vector& v);
Gf2Subspace join(const Gf2Subspace& a, const Gf2Subspace& b);

/// Coefficients c with sum_i c[i] * basis_list[i] == target, or nullopt when
/// target lies outside the span. Throws Error(DependentBasis) when the list
/// is not linearly independent.
std::optional<std::vector<std::uint8_t>> coordinates(std::span<const Gf2Vector> basis_list,
                                                     const Gf2Vector& target);

/// Uniform random l-dimensional subspace of F_2^m, drawn by picking each
/// successive basis vector uniformly outside the span of the previous ones.
Gf2Subspace sample_subspace(int m, int l, Rng& rng);

/// Uniform random vector of F_2^m.
Gf2Vector sample_vector(int m, Rng& rng);

}  // namespace ugfpc
