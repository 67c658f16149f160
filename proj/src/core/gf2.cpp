#include "core/gf2.hpp"

#include <algorithm>
#include <bit>

#include "core/error.hpp"

namespace ugfpc {
namespace {

std::uint64_t mask_for(int dim) {
  return dim >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << dim) - 1);
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw Error(ErrorKind::InvalidArgument,
                "ambient dimension " + std::to_string(dim) + " outside [0, 64]");
}

void require_same_dim(int a, int b, const char* where) {
  if (a != b)
    throw Error(ErrorKind::DimensionMismatch, std::string(where) + ": dimension " +
                                                  std::to_string(a) + " vs " + std::to_string(b));
}

// Highest set bit of a nonzero word; the pivot coordinate is dim - 1 - this.
int top_bit(std::uint64_t w) { return 63 - std::countl_zero(w); }

}  // namespace

Gf2Vector::Gf2Vector(int dim, std::uint64_t word) {
  check_dim(dim);
  if ((word & ~mask_for(dim)) != 0)
    throw Error(ErrorKind::InvalidArgument, "vector word has bits beyond dimension " + std::to_string(dim));
  dim_ = static_cast<std::uint8_t>(dim);
  word_ = word;
}

Gf2Vector Gf2Vector::parse(std::string_view bits) {
  if (bits.size() > static_cast<std::size_t>(kMaxDim))
    throw Error(ErrorKind::Parse, "bit string longer than 64: '" + std::string(bits) + "'");
  std::uint64_t w = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw Error(ErrorKind::Parse, "not a bit string: '" + std::string(bits) + "'");
    w = (w << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Gf2Vector(static_cast<int>(bits.size()), w);
}

bool Gf2Vector::bit(int coordinate) const {
  if (coordinate < 0 || coordinate >= dim_) throw Error(ErrorKind::InvalidArgument, "coordinate out of range");
  return (word_ >> (dim_ - 1 - coordinate)) & 1u;
}

std::string Gf2Vector::str() const {
  std::string s(dim_, '0');
  for (int i = 0; i < dim_; ++i)
    if ((word_ >> (dim_ - 1 - i)) & 1u) s[i] = '1';
  return s;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  require_same_dim(dim_, other.dim_, "vector addition");
  word_ ^= other.word_;
  return *this;
}

std::strong_ordering operator<=>(const Gf2Subspace& a, const Gf2Subspace& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  return a.basis_ <=> b.basis_;
}

std::vector<Gf2Vector> Gf2Subspace::elements() const {
  if (dim() > 20) throw Error(ErrorKind::Budget, "refusing to enumerate a subspace of dimension > 20");
  std::vector<Gf2Vector> out;
  out.reserve(std::size_t{1} << dim());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim()); ++mask) {
    std::uint64_t w = 0;
    for (int i = 0; i < dim(); ++i)
      if ((mask >> i) & 1u) w ^= basis_[i].word();
    out.emplace_back(ambient_dim_, w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Gf2Subspace::to_strings() const {
  std::vector<std::string> out;
  for (const auto& v : basis_) out.push_back(v.str());
  std::sort(out.begin(), out.end());
  return out;
}

Gf2Subspace rref_basis(std::span<const Gf2Vector> vectors, int ambient_dim) {
  check_dim(ambient_dim);
  // pivots[b] holds the basis word whose highest set bit is b.
  std::vector<std::uint64_t> pivots(static_cast<std::size_t>(std::max(ambient_dim, 1)), 0);
  for (const auto& v : vectors) {
    require_same_dim(v.dim(), ambient_dim, "rref_basis");
    std::uint64_t w = v.word();
    for (int b = ambient_dim - 1; b >= 0 && w != 0; --b)
      if (((w >> b) & 1u) && pivots[b] != 0) w ^= pivots[b];
    if (w == 0) continue;
    int p = top_bit(w);
    // Clear the lower pivot columns from the new row, then the new pivot
    // column from the existing rows.
    for (int b = p - 1; b >= 0; --b)
      if (((w >> b) & 1u) && pivots[b] != 0) w ^= pivots[b];
    for (int b = 0; b < ambient_dim; ++b)
      if (pivots[b] != 0 && ((pivots[b] >> p) & 1u)) pivots[b] ^= w;
    pivots[p] = w;
  }
  Gf2Subspace s(ambient_dim);
  for (int b = ambient_dim - 1; b >= 0; --b)
    if (pivots[b] != 0) s.basis_.emplace_back(ambient_dim, pivots[b]);
  return s;
}

bool contains(const Gf2Subspace& s, const Gf2Vector& v) {
  require_same_dim(s.ambient_dim(), v.dim(), "contains");
  std::uint64_t w = v.word();
  for (const auto& row : s.basis()) {
    int p = top_bit(row.word());
    if ((w >> p) & 1u) w ^= row.word();
  }
  return w == 0;
}

Gf2Subspace join(const Gf2Subspace& a, const Gf2Subspace& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "join");
  std::vector<Gf2Vector> all(a.basis());
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return rref_basis(all, a.ambient_dim());
}

std::optional<std::vector<std::uint8_t>> coordinates(std::span<const Gf2Vector> basis_list,
                                                     const Gf2Vector& target) {
  const int dim = target.dim();
  const auto n = basis_list.size();
  if (n > static_cast<std::size_t>(dim))
    throw Error(ErrorKind::DependentBasis, "coordinates: more vectors than the ambient dimension");
  // Each reduced row remembers which input vectors it is the sum of.
  struct Row {
    std::uint64_t word;
    std::uint64_t combo;
  };
  std::vector<Row> rows;  // indexed by pivot bit when set
  std::vector<int> by_bit(static_cast<std::size_t>(std::max(dim, 1)), -1);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(basis_list[i].dim(), dim, "coordinates");
    Row r{basis_list[i].word(), std::uint64_t{1} << i};
    for (int b = dim - 1; b >= 0 && r.word != 0; --b)
      if (((r.word >> b) & 1u) && by_bit[b] >= 0) {
        r.word ^= rows[by_bit[b]].word;
        r.combo ^= rows[by_bit[b]].combo;
      }
    if (r.word == 0)
      throw Error(ErrorKind::DependentBasis,
                  "coordinates: basis vector " + std::to_string(i) + " is dependent on the earlier ones");
    by_bit[top_bit(r.word)] = static_cast<int>(rows.size());
    rows.push_back(r);
  }
  std::uint64_t w = target.word(), combo = 0;
  for (int b = dim - 1; b >= 0 && w != 0; --b)
    if (((w >> b) & 1u) && by_bit[b] >= 0) {
      w ^= rows[by_bit[b]].word;
      combo ^= rows[by_bit[b]].combo;
    }
  if (w != 0) return std::nullopt;
  std::vector<std::uint8_t> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint8_t>((combo >> i) & 1u);
  return c;
}

Gf2Subspace sample_subspace(int m, int l, Rng& rng) {
  if (m > kMaxDim) throw Error(ErrorKind::Domain, "sample_subspace: m exceeds 64");
  if (l <= 0 || l >= m)
    throw Error(ErrorKind::Domain, "sample_subspace: need 0 < l < m, got l=" + std::to_string(l) +
                                       ", m=" + std::to_string(m));
  Gf2Subspace span(m);
  std::vector<Gf2Vector> chosen;
  while (static_cast<int>(chosen.size()) < l) {
    Gf2Vector v(m, rng.bits(m));
    if (contains(span, v)) continue;  // rejection keeps the draw uniform outside the span
    chosen.push_back(v);
    span = rref_basis(chosen, m);
  }
  return span;
}

Gf2Vector sample_vector(int m, Rng& rng) {
  check_dim(m);
  return Gf2Vector(m, rng.bits(m));
}

}  // namespace ugfpc
