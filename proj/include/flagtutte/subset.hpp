#ifndef FLAGTUTTE_SUBSET_HPP
#define FLAGTUTTE_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace flagtutte {

/// A subset of the ground set {1..n}; element i lives in bit i-1.
using Subset = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

inline constexpr int card(Subset s) noexcept { return std::popcount(s); }

inline constexpr Subset element(int i) noexcept { return Subset{1} << (i - 1); }

inline constexpr bool contains(Subset s, int i) noexcept { return (s >> (i - 1)) & 1U; }

inline constexpr Subset full_set(int n) noexcept {
    return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline constexpr bool is_subset(Subset a, Subset b) noexcept { return (a & ~b) == 0; }

/// Elements of s in increasing order (1-indexed).
inline std::vector<int> elements(Subset s) {
    std::vector<int> out;
    out.reserve(card(s));
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline Subset from_elements(const std::vector<int>& xs) {
    Subset s = 0;
    for (int x : xs) s |= element(x);
    return s;
}

/// "{1,3}" style rendering.
inline std::string subset_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

/// Calls f(sub) for every subset of `s`, including the empty set and s itself.
template <class F>
void for_each_subset(Subset s, F&& f) {
    Subset sub = s;
    while (true) {
        f(sub);
        if (sub == 0) break;
        sub = (sub - 1) & s;
    }
}

/// All k-subsets of {1..n} in increasing mask order.
inline std::vector<Subset> k_subsets(int n, int k) {
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {Subset{0}};
    Subset s = (Subset{1} << k) - 1;
    const Subset limit = full_set(n);
    while (true) {
        out.push_back(s);
        // Gosper's hack
        Subset c = s & (~s + 1);
        Subset r = s + c;
        if (r == 0 || (r & ~limit)) break;
        s = (((r ^ s) >> 2) / c) | r;
        if (s & ~limit) break;
    }
    return out;
}

}  // namespace flagtutte

#endif  // FLAGTUTTE_SUBSET_HPP
