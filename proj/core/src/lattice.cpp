#include "mwall/lattice.hpp"

#include <cstdlib>
#include <utility>

#include "mwall/errors.hpp"

namespace mwall {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy(IntVec& y, std::int64_t k, const IntVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= k * x[i];
}

}  // namespace

Lattice::Lattice(std::size_t dim, const IntMat& generators) : dim_(dim) {
  IntMat rows;
  for (const auto& g : generators) {
    if (g.size() != dim) fail(ErrorCode::InvalidArgument, "lattice generator has wrong dimension");
    rows.push_back(g);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    // Euclid on column c among rows r..end.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy(rows[i], rows[i][c] / rows[r][c], rows[r]);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
    pivots_.push_back(c);
    ++r;
  }
  rows.resize(r);
  basis_ = std::move(rows);
}

IntVec Lattice::reduce(const IntVec& v) const {
  if (v.size() != dim_) fail(ErrorCode::InvalidArgument, "vector has wrong dimension");
  IntVec out = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto p = pivots_[i];
    axpy(out, floor_div(out[p], basis_[i][p]), basis_[i]);
  }
  return out;
}

bool Lattice::contains(const IntVec& v) const {
  for (auto x : reduce(v))
    if (x != 0) return false;
  return true;
}

std::optional<std::int64_t> Lattice::index() const {
  if (basis_.size() != dim_) return std::nullopt;
  std::int64_t idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx *= basis_[i][pivots_[i]];
  return idx;
}

Scalar determinant(const IntMat& square) {
  std::size_t n = square.size();
  RatMat a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : square[i]) a[i].push_back(Scalar(x));
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      Scalar f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<RatMat> inverse(const IntMat& square) {
  std::size_t n = square.size();
  RatMat a(n), inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto x : square[i]) a[i].push_back(Scalar(x));
    inv[i].assign(n, Scalar(0));
    inv[i][i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    Scalar piv = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVec scaled(const IntVec& a, std::int64_t k) {
  IntVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

std::int64_t l1_norm(const IntVec& a) {
  std::int64_t s = 0;
  for (auto x : a) s += std::llabs(x);
  return s;
}

}  // namespace mwall
