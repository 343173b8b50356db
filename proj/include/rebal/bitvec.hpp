#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rebal {

/// Packed bit string. Bit i lives in word i/64 at position i%64; bits past
/// size() in the last word are kept zero so word-wise equality is exact.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : words_((nbits + 63) / 64, 0), size_(nbits) {}

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool v)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= mask;
        else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    /// Appends the low `nbits` bits of `value` (nbits <= 64).
    void append_bits(std::uint64_t value, std::size_t nbits);
    void append(const BitVec& other);

    /// Copy of bits [first, first + count).
    BitVec slice(std::size_t first, std::size_t count) const;

    /// Grows with zeros or truncates.
    void resize(std::size_t nbits);

    /// this ^= other, where other is zero-padded at the tail to size().
    /// other must not be longer than this.
    void xor_padded(const BitVec& other);

    bool all_zero() const;
    std::string to_hex() const;

    friend bool operator==(const BitVec& a, const BitVec& b)
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    void clear_tail();

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

}  // namespace rebal
