#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mwall/rational.hpp"

namespace mwall {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major, rows are vectors

// Integer lattice in Z^n spanned by a list of row vectors, kept in Hermite
// normal form.
class Lattice {
 public:
  Lattice(std::size_t dim, const IntMat& generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const IntVec& v) const;
  // Canonical representative of v + L.
  IntVec reduce(const IntVec& v) const;
  // Index in Z^n, or nullopt when the lattice is not full rank.
  std::optional<std::int64_t> index() const;

 private:
  std::size_t dim_;
  IntMat basis_;
  std::vector<std::size_t> pivots_;
};

// Rational matrix helpers used by the dual complex and lattice code.
using RatMat = std::vector<std::vector<Scalar>>;

Scalar determinant(const IntMat& square);
// Inverse of a nonsingular square matrix; nullopt if singular.
std::optional<RatMat> inverse(const IntMat& square);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& a, std::int64_t k);
std::int64_t l1_norm(const IntVec& a);

}  // namespace mwall
