#pragma once

#include <functional>
#include <vector>

namespace monoconn {

/// Visits every set partition of {0..size-1} into exactly `blocks` blocks as
/// a restricted-growth string: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
/// The visitor returns true to stop early; the function returns true iff it
/// was stopped.
bool for_each_partition(int size, int blocks,
                        const std::function<bool(const std::vector<int>&)>& visit);

/// Stirling number of the second kind, saturating at the 64-bit range.
unsigned long long stirling2(int size, int blocks);

}  // namespace monoconn
