#pragma once

// Packed ±1 vectors and matrices with exact Hamming-space kernels.
//
// Logical bit k lives in word k/64 at position k%64; a stored 1 bit means
// code value +1 and a stored 0 bit means -1. Pad bits past size() in the
// last word are kept at zero by every mutator, so the popcount kernels
// never need masking.
//
// Values are safe to share across threads once constructed; mutation is
// single-owner.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace bcls {

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for_bits(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitVector {
 public:
  BitVector() = default;

  // All bits start at -1 (stored zero words).
  explicit BitVector(std::size_t bits)
      : words_(words_for_bits(bits), 0), bits_(bits) {}

  static BitVector filled(std::size_t bits, int sign_value);

  // Packs a ±1 array; entries > 0 map to +1, everything else to -1.
  static BitVector from_signs(std::span<const int> signs);

  std::size_t size() const noexcept { return bits_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  int sign(std::size_t k) const {
    check_index(k);
    return ((words_[k / kWordBits] >> (k % kWordBits)) & 1u) ? +1 : -1;
  }

  void set_sign(std::size_t k, int sign_value) {
    check_index(k);
    const std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
    if (sign_value > 0) {
      words_[k / kWordBits] |= mask;
    } else {
      words_[k / kWordBits] &= ~mask;
    }
  }

  void flip(std::size_t k) {
    check_index(k);
    words_[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
  }

  // Copy-and-modify: returned vector differs from *this exactly at bit k.
  BitVector flipped(std::size_t k) const {
    BitVector out = *this;
    out.flip(k);
    return out;
  }

  std::vector<int> to_signs() const;

  bool operator==(const BitVector&) const = default;

 private:
  void check_index(std::size_t k) const {
    if (k >= bits_) {
      throw std::out_of_range("BitVector: bit index out of range");
    }
  }

  std::vector<std::uint64_t> words_;
  std::size_t bits_ = 0;
};

// Read-only view over a packed row; cheap to copy, never owns storage.
struct BitView {
  std::span<const std::uint64_t> words;
  std::size_t bits = 0;

  BitView() = default;
  BitView(std::span<const std::uint64_t> w, std::size_t b) : words(w), bits(b) {}
  BitView(const BitVector& v) : words(v.words()), bits(v.size()) {}

  int sign(std::size_t k) const {
    return ((words[k / kWordBits] >> (k % kWordBits)) & 1u) ? +1 : -1;
  }
};

// Count of differing positions; exact because pad bits are always zero.
inline std::uint64_t hamming_distance(BitView a, BitView b) {
  if (a.bits != b.bits) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::uint64_t dist = 0;
  for (std::size_t w = 0; w < a.words.size(); ++w) {
    dist += static_cast<std::uint64_t>(std::popcount(a.words[w] ^ b.words[w]));
  }
  return dist;
}

// Sum of ±1 products, computed as r - 2*D_H without unpacking.
inline std::int64_t inner_product(BitView a, BitView b) {
  return static_cast<std::int64_t>(a.bits) -
         2 * static_cast<std::int64_t>(hamming_distance(a, b));
}

// Dense row-major matrix of packed ±1 rows; every row shares the same
// bit count and word stride, so rows double as serialization records.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows),
        cols_(cols),
        stride_(words_for_bits(cols)),
        words_(rows * stride_, 0) {}

  // Reassembles a matrix from serialized words; rejects nonzero pad bits.
  static BitMatrix from_words(std::size_t rows, std::size_t cols,
                              std::span<const std::uint64_t> words);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  BitView row(std::size_t i) const {
    check_row(i);
    return BitView(std::span(words_.data() + i * stride_, stride_), cols_);
  }

  BitVector row_copy(std::size_t i) const;
  void set_row(std::size_t i, BitView v);

  int sign(std::size_t i, std::size_t k) const {
    check_row(i);
    check_col(k);
    return ((words_[i * stride_ + k / kWordBits] >> (k % kWordBits)) & 1u)
               ? +1
               : -1;
  }

  void set_sign(std::size_t i, std::size_t k, int sign_value) {
    check_row(i);
    check_col(k);
    const std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
    if (sign_value > 0) {
      words_[i * stride_ + k / kWordBits] |= mask;
    } else {
      words_[i * stride_ + k / kWordBits] &= ~mask;
    }
  }

  void flip(std::size_t i, std::size_t k) {
    check_row(i);
    check_col(k);
    words_[i * stride_ + k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
  }

  std::span<const std::uint64_t> word_data() const noexcept { return words_; }

  bool operator==(const BitMatrix&) const = default;

 private:
  void check_row(std::size_t i) const {
    if (i >= rows_) throw std::out_of_range("BitMatrix: row out of range");
  }
  void check_col(std::size_t k) const {
    if (k >= cols_) throw std::out_of_range("BitMatrix: column out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ArgminResult {
  std::size_t index = 0;
  std::uint64_t distance = 0;
};

// Linear scan over all rows; ties resolve to the lowest index.
inline ArgminResult argmin_hamming(BitView query, const BitMatrix& codebook) {
  if (codebook.rows() == 0) {
    throw std::invalid_argument("argmin_hamming: empty codebook");
  }
  if (query.bits != codebook.cols()) {
    throw std::invalid_argument("argmin_hamming: length mismatch");
  }
  ArgminResult best{0, hamming_distance(query, codebook.row(0))};
  for (std::size_t i = 1; i < codebook.rows(); ++i) {
    const std::uint64_t d = hamming_distance(query, codebook.row(i));
    if (d < best.distance) {
      best.index = i;
      best.distance = d;
    }
  }
  return best;
}

}  // namespace bcls
