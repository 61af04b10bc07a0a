#ifndef TKC_SET_PARTITIONS_HPP
#define TKC_SET_PARTITIONS_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

namespace tkc {

/// Calls fn(rgs, blocks) once for every set partition of {0, ..., n-1},
/// encoded as a restricted growth string: rgs[0] = 0 and
/// rgs[i] <= 1 + max(rgs[0..i-1]). Visits in lexicographic order. For n = 0
/// the single empty partition is visited.
///
/// fn may return void, or bool where false stops the enumeration.
template <typename Fn>
void for_each_set_partition(std::size_t n, Fn&& fn)
{
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> prefix_max(n, 0); // max of a[0..i]
    auto visit = [&]() {
        const std::size_t blocks = n == 0 ? 0 : prefix_max[n - 1] + 1;
        if constexpr (std::is_same_v<decltype(fn(std::span<const std::size_t>(a), blocks)), bool>)
            return fn(std::span<const std::size_t>(a), blocks);
        else {
            fn(std::span<const std::size_t>(a), blocks);
            return true;
        }
    };
    if (!visit())
        return;
    while (true) {
        std::size_t i = n;
        bool found = false;
        while (i-- > 1) {
            if (a[i] <= prefix_max[i - 1]) {
                found = true;
                break;
            }
        }
        if (!found)
            return;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
        if (!visit())
            return;
    }
}

} // namespace tkc

#endif
