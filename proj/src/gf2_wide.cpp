#include "smallcover/gf2_wide.hpp"

#include <bit>
#include <stdexcept>

namespace smallcover::gf2 {

bool WideVector::none() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t WideVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t wi = from / 64;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (w != 0) return wi * 64 + std::countr_zero(w);
    if (++wi == words_.size()) return size_;
    w = words_[wi];
  }
}

std::vector<std::size_t> WideVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = next_set(0); i < size_; i = next_set(i + 1)) out.push_back(i);
  return out;
}

WideVector& WideVector::operator^=(const WideVector& other) {
  if (size_ != other.size_) throw std::invalid_argument("wide vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

WideVector EchelonBasis::reduce(WideVector v) const {
  if (v.size() != size_) throw std::invalid_argument("wide vector length mismatch");
  for (std::size_t i = v.next_set(0); i < size_; i = v.next_set(i + 1)) {
    auto it = pivot_row_.find(i);
    // Rows keyed at i have no bits below i, so earlier coordinates stay clear.
    if (it != pivot_row_.end()) v ^= rows_[it->second];
  }
  return v;
}

bool EchelonBasis::insert(WideVector v) {
  v = reduce(std::move(v));
  const std::size_t p = v.next_set(0);
  if (p == size_) return false;
  pivot_row_.emplace(p, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace smallcover::gf2
