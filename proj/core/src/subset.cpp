#include "cardmat/subset.hpp"

#include "cardmat/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace cardmat {

GroundSet::GroundSet(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
    if (size_ == 0) fail("invalid-instance", "ground set must be nonempty");
    if (size_ > kMaxGroundSize)
        fail("invalid-instance", "ground set exceeds " + std::to_string(kMaxGroundSize) + " elements");
    if (!labels_.empty()) {
        if (labels_.size() != size_)
            fail("invalid-instance", "label count does not match ground-set size");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size())
            fail("invalid-instance", "ground-set labels must be distinct");
    }
}

namespace {
std::uint64_t universe_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}
} // namespace

Subset::Subset(std::uint64_t bits, std::size_t universe_size)
    : bits_(bits), n_(universe_size) {
    if (n_ > kMaxGroundSize) fail("invalid-instance", "subset universe too large");
    if (bits_ & ~universe_mask(n_))
        fail("invalid-instance", "subset references elements outside the ground set");
}

Subset Subset::full_set(std::size_t n) { return Subset(universe_mask(n), n); }

Subset Subset::from_indices(const std::vector<int>& indices, std::size_t n) {
    std::uint64_t bits = 0;
    for (int e : indices) {
        if (e < 0 || static_cast<std::size_t>(e) >= n)
            fail("invalid-instance", "element index " + std::to_string(e) + " out of range");
        bits |= std::uint64_t(1) << e;
    }
    return Subset(bits, n);
}

Subset Subset::complement() const { return Subset(~bits_ & universe_mask(n_), n_); }

std::vector<int> Subset::indices() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t e = 0; e < n_; ++e)
        if (contains(e)) out.push_back(static_cast<int>(e));
    return out;
}

namespace {
void require_same_universe(const Subset& a, const Subset& b) {
    if (a.universe_size() != b.universe_size())
        fail("ground-set-mismatch", "subsets over different ground sets");
}
} // namespace

Subset operator|(const Subset& a, const Subset& b) {
    require_same_universe(a, b);
    return Subset(a.bits_ | b.bits_, a.n_);
}

Subset operator&(const Subset& a, const Subset& b) {
    require_same_universe(a, b);
    return Subset(a.bits_ & b.bits_, a.n_);
}

Subset operator-(const Subset& a, const Subset& b) {
    require_same_universe(a, b);
    return Subset(a.bits_ & ~b.bits_, a.n_);
}

std::string Subset::str() const {
    std::string out = "{";
    bool first = true;
    for (int e : indices()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

bool lex_less(const Subset& a, const Subset& b) {
    require_same_universe(a, b);
    // Walk both ascending index sequences in lockstep.
    std::size_t n = a.universe_size();
    std::size_t i = 0, j = 0;
    while (true) {
        while (i < n && !a.contains(i)) ++i;
        while (j < n && !b.contains(j)) ++j;
        if (j >= n) return false;          // b exhausted: a is not smaller
        if (i >= n) return true;           // a is a proper prefix
        if (i != j) return i < j;
        ++i;
        ++j;
    }
}

} // namespace cardmat
