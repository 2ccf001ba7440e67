#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace excessive {

// Fixed-capacity bitset over edge indices. Two words cover every instance this
// library is meant for (the Graph constructor enforces the cap).
class EdgeSet {
  public:
    static constexpr int kMaxEdges = 128;

    constexpr EdgeSet() = default;

    static EdgeSet single(int i) {
        EdgeSet s;
        s.set(i);
        return s;
    }

    // Mask with bits [0, count) set.
    static EdgeSet first_n(int count) {
        EdgeSet s;
        for (int w = 0; w < 2; ++w) {
            int lo = w * 64;
            if (count <= lo)
                break;
            int k = count - lo;
            s.w_[w] = (k >= 64) ? ~0ull : ((1ull << k) - 1);
        }
        return s;
    }

    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    // Number of set bits with index >= pos.
    int count_from(int pos) const {
        EdgeSet t = *this;
        if (pos >= 64) {
            t.w_[0] = 0;
            t.w_[1] &= ~((pos & 63) ? ((1ull << (pos & 63)) - 1) : 0ull);
        } else if (pos > 0) {
            t.w_[0] &= ~((1ull << pos) - 1);
        }
        return t.count();
    }

    int lowest() const {
        if (w_[0])
            return std::countr_zero(w_[0]);
        if (w_[1])
            return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    bool subset_of(const EdgeSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool intersects(const EdgeSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    EdgeSet and_not(const EdgeSet& o) const {
        EdgeSet r;
        r.w_[0] = w_[0] & ~o.w_[0];
        r.w_[1] = w_[1] & ~o.w_[1];
        return r;
    }

    friend EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) {
        EdgeSet r;
        r.w_[0] = a.w_[0] | b.w_[0];
        r.w_[1] = a.w_[1] | b.w_[1];
        return r;
    }
    friend EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) {
        EdgeSet r;
        r.w_[0] = a.w_[0] & b.w_[0];
        r.w_[1] = a.w_[1] & b.w_[1];
        return r;
    }
    friend EdgeSet operator^(const EdgeSet& a, const EdgeSet& b) {
        EdgeSet r;
        r.w_[0] = a.w_[0] ^ b.w_[0];
        r.w_[1] = a.w_[1] ^ b.w_[1];
        return r;
    }
    EdgeSet& operator|=(const EdgeSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) = default;

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < 2; ++w) {
            std::uint64_t x = w_[w];
            while (x) {
                f(w * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::uint64_t word(int i) const { return w_[i]; }

  private:
    std::uint64_t w_[2] = {0, 0};
};

// Compare as sorted index sequences (lexicographic, shorter prefix first).
// Used only for deterministic tie-breaking, so clarity beats speed.
inline bool seq_less(const EdgeSet& a, const EdgeSet& b) {
    auto ia = a.to_indices(), ib = b.to_indices();
    return ia < ib;
}

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const {
        std::uint64_t h = s.word(0) * 0x9e3779b97f4a7c15ull;
        h ^= s.word(1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace excessive
