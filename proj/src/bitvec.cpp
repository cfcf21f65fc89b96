#include "bcls/bitvec.hpp"

namespace bcls {

BitVector BitVector::filled(std::size_t bits, int sign_value) {
  BitVector v(bits);
  if (sign_value > 0) {
    for (std::size_t w = 0; w < v.words_.size(); ++w) {
      v.words_[w] = ~std::uint64_t{0};
    }
    // Keep the pad zeroed.
    const std::size_t tail = bits % kWordBits;
    if (tail != 0 && !v.words_.empty()) {
      v.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
  }
  return v;
}

BitVector BitVector::from_signs(std::span<const int> signs) {
  BitVector v(signs.size());
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] > 0) {
      v.words_[k / kWordBits] |= std::uint64_t{1} << (k % kWordBits);
    }
  }
  return v;
}

std::vector<int> BitVector::to_signs() const {
  std::vector<int> out(bits_);
  for (std::size_t k = 0; k < bits_; ++k) {
    out[k] = sign(k);
  }
  return out;
}

BitMatrix BitMatrix::from_words(std::size_t rows, std::size_t cols,
                                std::span<const std::uint64_t> words) {
  BitMatrix m(rows, cols);
  if (words.size() != m.words_.size()) {
    throw std::invalid_argument("BitMatrix::from_words: word count mismatch");
  }
  const std::size_t tail = cols % kWordBits;
  if (tail != 0 && m.stride_ > 0) {
    const std::uint64_t pad_mask = ~((std::uint64_t{1} << tail) - 1);
    for (std::size_t i = 0; i < rows; ++i) {
      if ((words[i * m.stride_ + m.stride_ - 1] & pad_mask) != 0) {
        throw std::invalid_argument(
            "BitMatrix::from_words: nonzero pad bits");
      }
    }
  }
  std::copy(words.begin(), words.end(), m.words_.begin());
  return m;
}

BitVector BitMatrix::row_copy(std::size_t i) const {
  check_row(i);
  BitVector v(cols_);
  const BitView r = row(i);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (r.sign(k) > 0) v.set_sign(k, +1);
  }
  return v;
}

void BitMatrix::set_row(std::size_t i, BitView v) {
  check_row(i);
  if (v.bits != cols_) {
    throw std::invalid_argument("BitMatrix::set_row: length mismatch");
  }
  for (std::size_t w = 0; w < stride_; ++w) {
    words_[i * stride_ + w] = v.words[w];
  }
}

}  // namespace bcls
