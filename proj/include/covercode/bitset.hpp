#pragma once
// Dense bitset over 64-bit words, sized once and fixed. Bulk operations go
// through the kernel backend; single-bit operations are inlined.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "covercode/kernels.hpp"

namespace covercode {

class DenseBitset {
public:
    DenseBitset() = default;
    explicit DenseBitset(std::uint64_t bits)
        : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::uint64_t size() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* data() const { return words_.data(); }
    std::uint64_t* data() { return words_.data(); }

    bool test(std::uint64_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    // set + report whether the bit was previously clear
    bool set_new(std::uint64_t i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (w & m) return false;
        w |= m;
        return true;
    }
    void reset(std::uint64_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::uint64_t count() const {
        return kernels::active_backend().popcount(words_.data(), words_.size());
    }

    void or_with(const DenseBitset& other) {
        assert(other.bits_ == bits_);
        kernels::active_backend().or_into(words_.data(), other.words_.data(), words_.size());
    }

    // this |= other, returns number of newly set bits
    std::uint64_t or_count_new(const DenseBitset& other) {
        assert(other.bits_ == bits_);
        return kernels::active_backend().or_count_new(words_.data(), other.words_.data(),
                                                      words_.size());
    }

    // popcount(this & ~other)
    std::uint64_t count_not_in(const DenseBitset& other) const {
        assert(other.bits_ == bits_);
        return kernels::active_backend().andnot_count(words_.data(), other.words_.data(),
                                                      words_.size());
    }

    bool operator==(const DenseBitset& other) const {
        return bits_ == other.bits_ &&
               kernels::active_backend().equal(words_.data(), other.words_.data(), words_.size());
    }

    // Visit every clear bit index in ascending order.
    template <typename Fn>
    void for_each_zero(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = ~words_[wi];
            if (wi == words_.size() - 1 && (bits_ & 63))
                w &= (std::uint64_t(1) << (bits_ & 63)) - 1;
            while (w) {
                const int b = std::countr_zero(w);
                fn(std::uint64_t(wi) * 64 + b);
                w &= w - 1;
            }
        }
    }

    // Visit every set bit index in ascending order.
    template <typename Fn>
    void for_each_one(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                fn(std::uint64_t(wi) * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace covercode
