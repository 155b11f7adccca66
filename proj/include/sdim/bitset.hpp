#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace sdim {

// Fixed-width dynamic bitset. Used both as a vertex set (universe = vertex ids)
// and as a row set inside the solver (universe = constraint row ids).
// Intersection tests are the hot path, so everything stays word-based.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

    int size() const { return n_bits_; }

    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    int intersection_count(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& subtract(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_bits_ == b.n_bits_ && a.words_ == b.words_;
    }

    // Smallest set bit, or -1 when empty.
    int first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i << 6) + std::countr_zero(words_[i]);
        return -1;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each_set([&](int i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        int r = n_bits_ & 63;
        if (r && !words_.empty()) words_.back() &= (std::uint64_t{1} << r) - 1;
    }

    int n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;

} // namespace sdim
