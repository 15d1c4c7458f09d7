// centers.hpp -- linear-time radii of palindromic and antipalindromic factors
//
// Manacher's algorithm, parametrised by the letter-matching predicate. The mirror argument it
// relies on holds for any involutive antimorphism: inside a factor fixed by E, the factor at the
// mirrored position is the E-image of the original one, so it has the same radius.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

namespace morph {

struct SameLetter
{
    constexpr bool operator()(char a, char b) const noexcept { return a == b; }
};

struct OppositeLetter
{
    constexpr bool operator()(char a, char b) const noexcept { return a != b; }
};

/// even[i] = largest k with match(w[i-1-t], w[i+t]) for all t < k, for i in [0, n].
template <typename Match>
std::vector<std::size_t> even_radii(std::string_view w, Match match = {})
{
    const std::size_t n = w.size();
    std::vector<std::size_t> rad(n + 1, 0);
    // [lo, hi) is the rightmost-ending window found so far, centred at lo + (hi - lo) / 2
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = 0;
        if (i < hi)
            k = std::min(rad[lo + hi - i], hi - i);
        while (i + k < n && k + 1 <= i && match(w[i - 1 - k], w[i + k]))
            ++k;
        rad[i] = k;
        if (i + k > hi) {
            lo = i - k;
            hi = i + k;
        }
    }
    return rad;
}

/// odd[i] = largest k with w[i-t] == w[i+t] for all t < k (so the palindrome has length 2k-1).
inline std::vector<std::size_t> odd_palindrome_radii(std::string_view w)
{
    const std::size_t n = w.size();
    std::vector<std::size_t> rad(n, 0);
    std::size_t lo = 0, hi = 0; // window [lo, hi)
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = 1;
        if (i < hi)
            k = std::min(rad[lo + hi - 1 - i], hi - i);
        while (i + k < n && k <= i && w[i - k] == w[i + k])
            ++k;
        rad[i] = k;
        if (i + k > hi) {
            lo = i + 1 - k;
            hi = i + k;
        }
    }
    return rad;
}

/// Length of the longest antipalindromic factor of w.
inline std::size_t max_antipalindrome_length(std::string_view w)
{
    auto rad = even_radii(w, OppositeLetter{});
    return 2 * (rad.empty() ? 0 : *std::max_element(rad.begin(), rad.end()));
}

/// Length of the longest palindromic factor of w.
inline std::size_t max_palindrome_length(std::string_view w)
{
    std::size_t best = 0;
    for (std::size_t r : even_radii(w, SameLetter{}))
        best = std::max(best, 2 * r);
    for (std::size_t r : odd_palindrome_radii(w))
        best = std::max(best, 2 * r - 1);
    return best;
}

} // namespace morph
