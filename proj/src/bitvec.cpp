#include "rebal/bitvec.hpp"

#include <stdexcept>

namespace rebal {

void BitVec::append_bits(std::uint64_t value, std::size_t nbits)
{
    if (nbits == 0) return;
    if (nbits < 64) value &= (std::uint64_t{1} << nbits) - 1;
    const std::size_t offset = size_ & 63;
    resize(size_ + nbits);
    const std::size_t word = (size_ - nbits) >> 6;
    words_[word] |= value << offset;
    if (offset != 0 && offset + nbits > 64) words_[word + 1] |= value >> (64 - offset);
}

void BitVec::append(const BitVec& other)
{
    const std::size_t full = other.size_ / 64;
    for (std::size_t w = 0; w < full; ++w) append_bits(other.words_[w], 64);
    if (const std::size_t rest = other.size_ & 63; rest != 0) append_bits(other.words_[full], rest);
}

BitVec BitVec::slice(std::size_t first, std::size_t count) const
{
    if (first + count > size_) throw std::out_of_range("BitVec::slice past end");
    BitVec out(count);
    const std::size_t shift = first & 63;
    const std::size_t base = first >> 6;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t v = words_[base + w] >> shift;
        if (shift != 0 && base + w + 1 < words_.size()) v |= words_[base + w + 1] << (64 - shift);
        out.words_[w] = v;
    }
    out.clear_tail();
    return out;
}

void BitVec::resize(std::size_t nbits)
{
    words_.resize((nbits + 63) / 64, 0);
    size_ = nbits;
    clear_tail();
}

void BitVec::xor_padded(const BitVec& other)
{
    if (other.size_ > size_) throw std::invalid_argument("BitVec::xor_padded: operand longer than target");
    for (std::size_t w = 0; w < other.words_.size(); ++w) words_[w] ^= other.words_[w];
}

bool BitVec::all_zero() const
{
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::string BitVec::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve((size_ + 3) / 4);
    for (std::size_t i = 0; i < size_; i += 4) {
        unsigned nib = 0;
        for (std::size_t b = 0; b < 4 && i + b < size_; ++b) nib |= unsigned(get(i + b)) << b;
        out.push_back(digits[nib]);
    }
    return out;
}

void BitVec::clear_tail()
{
    if (const std::size_t rest = size_ & 63; rest != 0) words_.back() &= (std::uint64_t{1} << rest) - 1;
}

}  // namespace rebal
