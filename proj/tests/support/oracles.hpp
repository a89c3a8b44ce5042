#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t a, std::int64_t p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t r = 1, e = p - 2, b = mod(a, p);
    while (e > 0) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

using Dense = std::vector<std::vector<std::int64_t>>;

/// Rank by textbook dense Gaussian elimination mod p.
inline std::size_t dense_rank(Dense m, std::int64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && mod(m[piv][c], p) == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        std::int64_t inv = inv_mod(m[rank][c], p);
        for (auto& x : m[rank])
            x = mod(x * inv, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || mod(m[r][c], p) == 0)
                continue;
            std::int64_t f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = mod(m[r][k] - f * m[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

/// A word in generators: each letter is (id, odd). The sign of sorting the
/// word into nondecreasing id order by adjacent swaps, or 0 if an odd letter
/// repeats.
inline int sort_sign(std::vector<std::pair<int, bool>> word) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = 0; j + 1 < word.size() - i; ++j)
            if (word[j].first > word[j + 1].first) {
                if (word[j].second && word[j + 1].second)
                    sign = -sign;
                std::swap(word[j], word[j + 1]);
            }
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i].first == word[i + 1].first && word[i].second)
            return 0;
    return sign;
}

/// Number of strictly increasing sequences with entries in [1, max_entry]
/// and a predicate on (sum, length), enumerated by brute force over subsets.
template <class Pred>
std::vector<std::vector<int>> increasing_sequences(int max_entry, Pred pred) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1U << max_entry); ++mask) {
        std::vector<int> seq;
        int sum = 0;
        for (int i = 0; i < max_entry; ++i)
            if (mask & (1U << i)) {
                seq.push_back(i + 1);
                sum += i + 1;
            }
        if (pred(sum, static_cast<int>(seq.size())))
            out.push_back(seq);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace oracle
