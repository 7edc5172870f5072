#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace cardmat {

/// Hard cap on ground-set size in this build; subsets are 64-bit masks.
inline constexpr std::size_t kMaxGroundSize = 64;

/// Finite ground set E = {0, ..., size-1} with optional element labels.
class GroundSet {
public:
    explicit GroundSet(std::size_t size, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return size_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    friend bool operator==(const GroundSet& a, const GroundSet& b) {
        return a.size_ == b.size_;
    }

private:
    std::size_t size_;
    std::vector<std::string> labels_; // empty, or one per element, all distinct
};

/// Subset of a ground set of known size. Bitset semantics; elements are
/// indices 0..universe_size()-1.
class Subset {
public:
    Subset() : bits_(0), n_(0) {}
    Subset(std::uint64_t bits, std::size_t universe_size);

    static Subset empty_set(std::size_t n) { return Subset(0, n); }
    static Subset full_set(std::size_t n);
    static Subset single(std::size_t e, std::size_t n) { return Subset(std::uint64_t(1) << e, n); }
    static Subset from_indices(const std::vector<int>& indices, std::size_t n);

    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t universe_size() const noexcept { return n_; }

    bool contains(std::size_t e) const { return (bits_ >> e) & 1u; }
    std::size_t count() const noexcept { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }

    Subset with(std::size_t e) const { return Subset(bits_ | (std::uint64_t(1) << e), n_); }
    Subset without(std::size_t e) const { return Subset(bits_ & ~(std::uint64_t(1) << e), n_); }
    Subset complement() const;

    bool subset_of(const Subset& o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<int> indices() const; // ascending

    friend Subset operator|(const Subset& a, const Subset& b);
    friend Subset operator&(const Subset& a, const Subset& b);
    friend Subset operator-(const Subset& a, const Subset& b);
    friend bool operator==(const Subset& a, const Subset& b) {
        return a.bits_ == b.bits_ && a.n_ == b.n_;
    }
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

    std::string str() const; // "{0,2,5}"

private:
    std::uint64_t bits_;
    std::size_t n_;
};

/// Lexicographic order on the ascending index sequences (so {0,3} < {1,2}).
bool lex_less(const Subset& a, const Subset& b);

} // namespace cardmat
