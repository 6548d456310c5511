#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace d2 {

// Fixed-size bitset over 64-bit words. All binary operations require equal
// nbits; the top word keeps its unused bits zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }
    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    bool operator[](int i) const { return test(i); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void set_all() {
        if (nbits_ == 0) return;
        std::fill(words_.begin(), words_.end(), ~uint64_t{0});
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    // this &= ~o
    Bitset& and_not(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }

    static int and_count(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        int c = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }
    static int and3_count(const Bitset& a, const Bitset& b, const Bitset& c) {
        assert(a.nbits_ == b.nbits_ && b.nbits_ == c.nbits_);
        int r = 0;
        for (size_t i = 0; i < a.words_.size(); ++i)
            r += std::popcount(a.words_[i] & b.words_[i] & c.words_[i]);
        return r;
    }
    // popcount of (a & b & c) restricted to bit positions > lo
    static int and3_count_above(const Bitset& a, const Bitset& b, const Bitset& c, int lo) {
        assert(a.nbits_ == b.nbits_ && b.nbits_ == c.nbits_);
        int r = 0;
        size_t w0 = static_cast<size_t>(lo >> 6);
        for (size_t i = w0; i < a.words_.size(); ++i) {
            uint64_t w = a.words_[i] & b.words_[i] & c.words_[i];
            if (i == w0) w &= ~((uint64_t{2} << (lo & 63)) - 1);
            r += std::popcount(w);
        }
        return r;
    }

    static bool disjoint(const Bitset& a, const Bitset& b) {
        assert(a.nbits_ == b.nbits_);
        for (size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] & b.words_[i]) return false;
        return true;
    }

    int find_first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }
    int find_next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        size_t wi = static_cast<size_t>(i >> 6);
        uint64_t w = words_[wi] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(wi * 64) + std::countr_zero(w);
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    size_t word_count() const { return words_.size(); }
    uint64_t word(size_t i) const { return words_[i]; }

private:
    void trim() {
        int rem = nbits_ & 63;
        if (rem && !words_.empty()) words_.back() &= (uint64_t{1} << rem) - 1;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace d2
