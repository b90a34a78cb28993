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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tokred {

/// Fixed-length vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t len);

  /// The standard basis vector e_index of length len.
  static BitVec unit(std::size_t len, std::size_t index);
  static BitVec from_bits(std::initializer_list<int> bits);

  std::size_t size() const { return len_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool value = true);

  /// Number of ones.
  std::size_t weight() const;
  bool is_unit() const { return weight() == 1; }
  /// Index of the single one-bit, if this is a standard basis vector.
  std::optional<std::size_t> unit_index() const;
  std::vector<std::size_t> support() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) { return lhs ^= rhs; }
  bool operator==(const BitVec&) const = default;

  std::span<const Word> words() const { return words_; }
  /// Renders bits as '0'/'1' characters, index 0 first.
  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<Word> words_;
};

/// Square matrix over GF(2). Rows are stored contiguously as packed words so
/// that row addition is a run of word XORs.
class BitMatrix {
 public:
  using Word = BitVec::Word;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from explicit 0/1 rows. Throws std::invalid_argument if
  /// the rows do not form a square matrix.
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static BitMatrix from_rows(const std::vector<BitVec>& rows);

  std::size_t size() const { return n_; }
  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value = true);

  BitVec row(std::size_t i) const;
  void set_row(std::size_t i, const BitVec& v);
  std::span<const Word> row_words(std::size_t i) const {
    return {data_.data() + i * words_per_row_, words_per_row_};
  }
  std::size_t row_weight(std::size_t i) const;
  std::optional<std::size_t> row_unit_index(std::size_t i) const;
  bool rows_equal(std::size_t i, const BitVec& v) const;

  /// row[target] ^= row[source]. Throws std::invalid_argument when
  /// target == source or an index is out of range.
  void row_add(std::size_t target, std::size_t source);
  void swap_rows(std::size_t a, std::size_t b);

  /// True when every row and every column holds exactly one 1.
  bool is_permutation() const;

  bool operator==(const BitMatrix&) const = default;
  std::string to_string() const;

 private:
  Word* row_ptr(std::size_t i) { return data_.data() + i * words_per_row_; }
  const Word* row_ptr(std::size_t i) const {
    return data_.data() + i * words_per_row_;
  }

  std::size_t n_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> data_;
};

/// C = A * B over GF(2). Throws std::invalid_argument on a size mismatch.
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& a);

/// Gauss-Jordan inverse; std::nullopt when the matrix is singular.
std::optional<BitMatrix> invert(const BitMatrix& a);

/// One way of combining rows into a standard basis vector.
struct UnitCombination {
  std::size_t basis;            // index e of the resulting unit vector
  std::vector<std::size_t> rows;  // ascending row indices whose XOR is e_basis
  bool operator==(const UnitCombination&) const = default;
};

/// Every pair (e, V') with `row` in V' and XOR of rows V' equal to e_e, in
/// ascending order of e. For invertible R these are read off R^-1: V' for e is
/// the support of row e of R^-1, so each e admits at most one V'.
/// Throws std::invalid_argument for a singular matrix or a bad row index.
std::vector<UnitCombination> solve_unit_combinations(const BitMatrix& r,
                                                     std::size_t row);

}  // namespace tokred
