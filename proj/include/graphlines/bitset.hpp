#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace graphlines {

/// Fixed-capacity bit row over 64-bit words. Vertex sets, line member
/// sets, and adjacency rows are all stored in this form so that subset
/// tests and merges run word-parallel.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits)
        : nbits_(nbits), words_((static_cast<size_t>(nbits) + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }
    size_t word_count() const { return words_.size(); }
    const uint64_t* words() const { return words_.data(); }
    uint64_t* words() { return words_.data(); }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    /// this ⊆ o
    bool is_subset_of(const Bitset& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    /// Lowest set bit index, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Set bit after position i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t w = static_cast<size_t>(i) >> 6;
        uint64_t cur = words_[w] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
            if (++w >= words_.size()) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    /// Zero out bits at positions ≥ size_bits (kernel outputs may set them).
    void mask_tail() {
        if (nbits_ & 63) words_.back() &= (~uint64_t(0)) >> (64 - (nbits_ & 63));
    }

    uint64_t hash() const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t w : words_) {
            h ^= w;
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return h;
    }

    /// Total order used wherever a deterministic arrangement of sets is
    /// needed (family merges, canonical reports).
    bool lex_less(const Bitset& o) const {
        for (size_t i = words_.size(); i-- > 0;)
            if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
        return false;
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitsetHash {
    size_t operator()(const Bitset& b) const { return static_cast<size_t>(b.hash()); }
};

}  // namespace graphlines
