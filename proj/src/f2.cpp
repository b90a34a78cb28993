// Copyright 2026 The tokred Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tokred/f2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tokred {

namespace {

std::size_t word_count(std::size_t bits) {
  return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits;
}

BitVec::Word bit_mask(std::size_t i) {
  return BitVec::Word{1} << (i % BitVec::kWordBits);
}

}  // namespace

BitVec::BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

BitVec BitVec::unit(std::size_t len, std::size_t index) {
  BitVec v(len);
  v.set(index);
  return v;
}

BitVec BitVec::from_bits(std::initializer_list<int> bits) {
  BitVec v(bits.size());
  std::size_t i = 0;
  for (int b : bits) v.set(i++, b != 0);
  return v;
}

bool BitVec::test(std::size_t i) const {
  if (i >= len_) throw std::out_of_range("BitVec index out of range");
  return (words_[i / kWordBits] & bit_mask(i)) != 0;
}

void BitVec::set(std::size_t i, bool value) {
  if (i >= len_) throw std::out_of_range("BitVec index out of range");
  if (value) {
    words_[i / kWordBits] |= bit_mask(i);
  } else {
    words_[i / kWordBits] &= ~bit_mask(i);
  }
}

std::size_t BitVec::weight() const {
  std::size_t w = 0;
  for (Word word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::optional<std::size_t> BitVec::unit_index() const {
  std::optional<std::size_t> found;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] == 0) continue;
    if (found || std::popcount(words_[k]) != 1) return std::nullopt;
    found = k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return found;
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    Word w = words_[k];
    while (w != 0) {
      out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.len_ != len_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_per_row_(word_count(n)), data_(n * word_count(n), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  BitMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw std::invalid_argument("BitMatrix rows must form a square matrix");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVec>& rows) {
  BitMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_) throw std::out_of_range("BitMatrix index out of range");
  return (row_ptr(row)[col / BitVec::kWordBits] & bit_mask(col)) != 0;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  if (row >= n_ || col >= n_) throw std::out_of_range("BitMatrix index out of range");
  Word& w = row_ptr(row)[col / BitVec::kWordBits];
  if (value) {
    w |= bit_mask(col);
  } else {
    w &= ~bit_mask(col);
  }
}

BitVec BitMatrix::row(std::size_t i) const {
  if (i >= n_) throw std::out_of_range("BitMatrix row out of range");
  BitVec v(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (get(i, j)) v.set(j);
  }
  return v;
}

void BitMatrix::set_row(std::size_t i, const BitVec& v) {
  if (i >= n_) throw std::out_of_range("BitMatrix row out of range");
  if (v.size() != n_) throw std::invalid_argument("row length does not match matrix size");
  std::copy(v.words().begin(), v.words().end(), row_ptr(i));
}

std::size_t BitMatrix::row_weight(std::size_t i) const {
  std::size_t w = 0;
  for (Word word : row_words(i)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

std::optional<std::size_t> BitMatrix::row_unit_index(std::size_t i) const {
  std::optional<std::size_t> found;
  const Word* r = row_ptr(i);
  for (std::size_t k = 0; k < words_per_row_; ++k) {
    if (r[k] == 0) continue;
    if (found || std::popcount(r[k]) != 1) return std::nullopt;
    found = k * BitVec::kWordBits + static_cast<std::size_t>(std::countr_zero(r[k]));
  }
  return found;
}

bool BitMatrix::rows_equal(std::size_t i, const BitVec& v) const {
  return v.size() == n_ && std::equal(v.words().begin(), v.words().end(), row_ptr(i));
}

void BitMatrix::row_add(std::size_t target, std::size_t source) {
  if (target >= n_ || source >= n_) {
    throw std::invalid_argument("row_add index out of range");
  }
  if (target == source) {
    throw std::invalid_argument("row_add target and source must differ");
  }
  Word* t = row_ptr(target);
  const Word* s = row_ptr(source);
  for (std::size_t k = 0; k < words_per_row_; ++k) t[k] ^= s[k];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a >= n_ || b >= n_) throw std::invalid_argument("swap_rows index out of range");
  std::swap_ranges(row_ptr(a), row_ptr(a) + words_per_row_, row_ptr(b));
}

bool BitMatrix::is_permutation() const {
  std::vector<bool> column_used(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    auto idx = row_unit_index(i);
    if (!idx || column_used[*idx]) return false;
    column_used[*idx] = true;
  }
  return true;
}

std::string BitMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) out << row(i).to_string() << '\n';
  return out.str();
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mat_mul size mismatch");
  const std::size_t n = a.size();
  BitMatrix c(n);
  // Row i of C is the XOR of the rows of B selected by row i of A.
  for (std::size_t i = 0; i < n; ++i) {
    BitVec acc(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (a.get(i, k)) acc ^= b.row(k);
    }
    c.set_row(i, acc);
  }
  return c;
}

BitMatrix transpose(const BitMatrix& a) {
  const std::size_t n = a.size();
  BitMatrix t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a.get(i, j)) t.set(j, i);
    }
  }
  return t;
}

std::optional<BitMatrix> invert(const BitMatrix& a) {
  const std::size_t n = a.size();
  BitMatrix work = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !work.get(pivot, col)) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r != col && work.get(r, col)) {
        work.row_add(r, col);
        inv.row_add(r, col);
      }
    }
  }
  return inv;
}

std::vector<UnitCombination> solve_unit_combinations(const BitMatrix& r,
                                                     std::size_t row) {
  if (row >= r.size()) throw std::invalid_argument("row index out of range");
  auto inv = invert(r);
  if (!inv) throw std::invalid_argument("solve_unit_combinations: matrix is singular");
  // x^T R = e_j has the unique solution x^T = row j of R^-1.
  std::vector<UnitCombination> out;
  for (std::size_t e = 0; e < r.size(); ++e) {
    if (inv->get(e, row)) out.push_back({e, inv->row(e).support()});
  }
  return out;
}

}  // namespace tokred
