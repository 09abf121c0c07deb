#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace avelab::detail {

/// First k-subset of {0..n-1} in lexicographic order.
inline std::vector<long> first_combination(long k) {
    std::vector<long> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0L);
    return idx;
}

/// Advances `idx` to the next k-subset of {0..n-1}; false once exhausted.
inline bool next_combination(std::vector<long>& idx, long n) {
    const auto k = static_cast<long>(idx.size());
    for (long i = k - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - k + i) {
            ++idx[static_cast<std::size_t>(i)];
            for (long j = i + 1; j < k; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

}  // namespace avelab::detail
