#ifndef TPJ_NODE_SET_HPP
#define TPJ_NODE_SET_HPP

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace tpj {

// Fixed-capacity bitset over the node indices of one universe.
// All binary operations require operands of the same capacity.
class NodeSet {
public:
    NodeSet() = default;

    explicit NodeSet(int capacity)
        : nbits_(capacity), words_((capacity + 63) / 64, 0) {}

    static NodeSet full(int capacity) {
        NodeSet s(capacity);
        for (int i = 0; i < capacity; ++i) s.set(i);
        return s;
    }

    int capacity() const { return nbits_; }

    bool test(int i) const {
        return (words_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) { words_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { words_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63)); }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // Lowest set index, or -1 when empty.
    int first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64 + __builtin_ctzll(words_[k]));
        return -1;
    }

    // Lowest set index strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = static_cast<size_t>(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64 + __builtin_ctzll(w));
            if (++k >= words_.size()) return -1;
            w = words_[k];
        }
    }

    NodeSet operator|(const NodeSet& o) const {
        NodeSet r = *this;
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] |= o.words_[k];
        return r;
    }

    NodeSet operator&(const NodeSet& o) const {
        NodeSet r = *this;
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }

    // Set difference.
    NodeSet operator-(const NodeSet& o) const {
        NodeSet r = *this;
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }

    NodeSet& operator|=(const NodeSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }

    NodeSet& operator&=(const NodeSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }

    NodeSet& operator-=(const NodeSet& o) {
        for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    bool is_subset_of(const NodeSet& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool is_proper_subset_of(const NodeSet& o) const {
        return is_subset_of(o) && *this != o;
    }

    bool intersects(const NodeSet& o) const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool operator==(const NodeSet& o) const { return words_ == o.words_; }
    bool operator!=(const NodeSet& o) const { return words_ != o.words_; }

    // Orders sets like their ascending index sequences ({A} < {A,B} < {A,C} < {B}).
    bool operator<(const NodeSet& o) const {
        int a = first(), b = o.first();
        while (a == b) {
            if (a == -1) return false;  // equal
            a = next(a);
            b = o.next(b);
        }
        if (a == -1) return true;   // *this is a strict prefix
        if (b == -1) return false;
        return a < b;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(count()));
        for (int i = first(); i != -1; i = next(i)) v.push_back(i);
        return v;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : words_) {
            h ^= static_cast<size_t>(w);
            h *= 1099511628211ull;
        }
        return h ^ static_cast<size_t>(nbits_);
    }

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace tpj

template <>
struct std::hash<tpj::NodeSet> {
    size_t operator()(const tpj::NodeSet& s) const { return s.hash(); }
};

#endif
