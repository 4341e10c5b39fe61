#include "smallcover/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace smallcover::gf2 {

namespace {

std::uint64_t low_mask(int size) {
  return size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
}

void check_size(int size) {
  if (size < 0 || size > BitVector::kMaxSize) {
    throw std::invalid_argument("bit vector length must be in [0, 64], got " +
                                std::to_string(size));
  }
}

}  // namespace

BitVector::BitVector(int size, std::uint64_t word) : word_(word), size_(size) {
  check_size(size);
  if ((word & ~low_mask(size)) != 0) {
    throw std::invalid_argument("bit vector word has bits beyond its length");
  }
}

BitVector BitVector::from_string(std::string_view bits) {
  check_size(static_cast<int>(bits.size()));
  BitVector v(static_cast<int>(bits.size()));
  for (int i = 0; i < v.size_; ++i) {
    if (bits[i] == '1') {
      v.word_ |= std::uint64_t{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bitstring may only contain '0' and '1': \"" +
                                  std::string(bits) + "\"");
    }
  }
  return v;
}

BitVector BitVector::ones(int size) {
  check_size(size);
  return BitVector(size, low_mask(size));
}

BitVector BitVector::unit(int size, int index) {
  BitVector v(size);
  v.set(index);
  return v;
}

bool BitVector::get(int i) const {
  if (i < 0 || i >= size_) throw std::out_of_range("bit index out of range");
  return (word_ >> i) & 1U;
}

void BitVector::set(int i, bool value) {
  if (i < 0 || i >= size_) throw std::out_of_range("bit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << i;
  word_ = value ? (word_ | bit) : (word_ & ~bit);
}

void BitVector::flip(int i) {
  if (i < 0 || i >= size_) throw std::out_of_range("bit index out of range");
  word_ ^= std::uint64_t{1} << i;
}

int BitVector::count() const { return std::popcount(word_); }

int BitVector::lowest() const { return word_ == 0 ? -1 : std::countr_zero(word_); }

int BitVector::dot(const BitVector& other) const {
  check_same_size(other);
  return std::popcount(word_ & other.word_) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  word_ ^= other.word_;
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  word_ &= other.word_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (int i = 0; i < size_; ++i) {
    if ((word_ >> i) & 1U) s[i] = '1';
  }
  return s;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("bit vector length mismatch: " + std::to_string(size_) +
                                " vs " + std::to_string(other.size_));
  }
}

BitMatrix::BitMatrix(int nrows, int ncols) : ncols_(ncols), rows_(nrows, BitVector(ncols)) {}

BitMatrix::BitMatrix(int ncols, std::vector<BitVector> rows)
    : ncols_(ncols), rows_(std::move(rows)) {
  check_size(ncols);
  for (const auto& r : rows_) {
    if (r.size() != ncols_) throw std::invalid_argument("matrix rows must have equal length");
  }
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  std::vector<BitVector> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitVector::from_string(r));
  const int ncols = parsed.front().size();
  return BitMatrix(ncols, std::move(parsed));
}

BitMatrix BitMatrix::from_columns(int nrows, std::span<const BitVector> columns) {
  BitMatrix m(nrows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.ncols(); ++j) {
    if (columns[j].size() != nrows) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < nrows; ++i) {
      if (columns[j].get(i)) m.set(i, j);
    }
  }
  return m;
}

BitVector BitMatrix::column(int j) const {
  if (j < 0 || j >= ncols_) throw std::out_of_range("column index out of range");
  BitVector c(nrows());
  for (int i = 0; i < nrows(); ++i) {
    if (rows_[i].get(j)) c.set(i);
  }
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(ncols_, nrows());
  for (int i = 0; i < nrows(); ++i) {
    for (int j = 0; j < ncols_; ++j) {
      if (rows_[i].get(j)) t.set(j, i);
    }
  }
  return t;
}

BitMatrix BitMatrix::permute_columns(std::span<const int> order) const {
  if (static_cast<int>(order.size()) != ncols_) {
    throw std::invalid_argument("column permutation has wrong length");
  }
  BitMatrix out(nrows(), ncols_);
  for (int i = 0; i < nrows(); ++i) {
    for (int j = 0; j < ncols_; ++j) {
      if (rows_[i].get(order[j])) out.set(i, j);
    }
  }
  return out;
}

BitVector BitMatrix::combine_rows(const BitVector& coeffs) const {
  if (coeffs.size() != nrows()) throw std::invalid_argument("coefficient length mismatch");
  BitVector out(ncols_);
  for (int i = 0; i < nrows(); ++i) {
    if (coeffs.get(i)) out ^= rows_[i];
  }
  return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.ncols() != b.nrows()) throw std::invalid_argument("matrix product shape mismatch");
  BitMatrix out(a.nrows(), b.ncols());
  for (int i = 0; i < a.nrows(); ++i) out.rows_[i] = b.combine_rows(a.row(i));
  return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

RrefResult rref(const BitMatrix& m) {
  const int nr = m.nrows();
  std::vector<BitVector> rows = m.rows();
  std::vector<BitVector> ops;
  ops.reserve(nr);
  for (int i = 0; i < nr; ++i) ops.push_back(BitVector::unit(nr, i));

  RrefResult out;
  int r = 0;
  for (int col = 0; col < m.ncols() && r < nr; ++col) {
    int p = r;
    while (p < nr && !rows[p].get(col)) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[r]);
    std::swap(ops[p], ops[r]);
    for (int i = 0; i < nr; ++i) {
      if (i != r && rows[i].get(col)) {
        rows[i] ^= rows[r];
        ops[i] ^= ops[r];
      }
    }
    out.pivots.push_back(col);
    ++r;
  }
  out.rank = r;
  out.reduced = BitMatrix(m.ncols(), std::move(rows));
  out.transform = BitMatrix(nr, std::move(ops));
  return out;
}

int rank(const BitMatrix& m) {
  std::vector<BitVector> basis;
  for (BitVector v : m.rows()) {
    for (const auto& b : basis) {
      if (v.get(b.lowest())) v ^= b;
    }
    if (v.any()) {
      // Keep the basis reduced at every pivot so one pass suffices.
      const int p = v.lowest();
      for (auto& b : basis) {
        if (b.get(p)) b ^= v;
      }
      basis.push_back(v);
    }
  }
  return static_cast<int>(basis.size());
}

bool det(const BitMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  return rank(m) == m.nrows();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.ncols(), false);
  for (int p : r.pivots) is_pivot[p] = true;

  std::vector<BitVector> basis;
  for (int free = 0; free < m.ncols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v = BitVector::unit(m.ncols(), free);
    for (int i = 0; i < r.rank; ++i) {
      if (r.reduced.get(i, free)) v.set(r.pivots[i]);
    }
    basis.push_back(v);
  }
  return basis;
}

std::optional<BitVector> row_space_contains(const BitMatrix& m, const BitVector& v) {
  if (v.size() != m.ncols()) throw std::invalid_argument("vector length does not match matrix");
  const RrefResult r = rref(m);
  BitVector residual = v;
  BitVector coeffs(m.nrows());
  for (int i = 0; i < r.rank; ++i) {
    if (residual.get(r.pivots[i])) {
      residual ^= r.reduced.row(i);
      coeffs ^= r.transform.row(i);
    }
  }
  if (residual.any()) return std::nullopt;
  return coeffs;
}

BitMatrix inverse(const BitMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const RrefResult r = rref(m);
  if (r.rank != m.nrows()) throw std::invalid_argument("matrix is singular");
  return r.transform;
}

CosetReducer::CosetReducer(int size, std::span<const BitVector> spanning) : size_(size) {
  check_size(size);
  for (BitVector v : spanning) {
    if (v.size() != size) throw std::invalid_argument("spanning vector length mismatch");
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (v.get(pivots_[k])) v ^= basis_[k];
    }
    if (v.none()) continue;
    const int p = v.lowest();
    for (auto& b : basis_) {
      if (b.get(p)) b ^= v;
    }
    basis_.push_back(v);
    pivots_.push_back(p);
  }
}

BitVector CosetReducer::reduce(BitVector v) const {
  if (v.size() != size_) throw std::invalid_argument("vector length mismatch in coset reduction");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (v.get(pivots_[k])) v ^= basis_[k];
  }
  return v;
}

BitVector coset_canonical(const BitVector& v, std::span<const BitVector> basis) {
  return CosetReducer(v.size(), basis).reduce(v);
}

BitVector span_element(int size, std::span<const BitVector> vectors, std::uint64_t mask) {
  BitVector out(size);
  for (std::size_t i = 0; i < vectors.size() && mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out ^= vectors[i];
  }
  return out;
}

}  // namespace smallcover::gf2
