#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boxi {

// Fixed-capacity bitset, sized at construction. Binary operations require
// both operands to have the same capacity. Used for vertex sets (capacity =
// vertex count of a host graph) and edge sets (capacity = edge count).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { words_.assign(words_.size(), 0); }
    void fill() {
        words_.assign(words_.size(), ~std::uint64_t{0});
        trim();
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Removes every bit present in `o`.
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    int find_first() const { return find_from(0); }
    // First set bit with index > i, or -1.
    int find_next(int i) const { return find_from(i + 1); }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<int>(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    // Order that matches lexicographic comparison of the sorted element
    // lists: the set containing the smallest differing element comes first.
    friend bool lex_less(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                std::uint64_t low = diff & ~(diff - 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    struct Hash {
        std::size_t operator()(const Bitset& s) const {
            std::uint64_t h = 1469598103934665603ull;
            for (auto w : s.words_) {
                h ^= w;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(s.nbits_));
        }
    };

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int find_from(int i) const {
        if (i < 0) i = 0;
        if (i >= nbits_) return -1;
        std::size_t wi = static_cast<std::size_t>(i) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace boxi
