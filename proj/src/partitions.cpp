#include "monoconn/partitions.hpp"

#include <limits>

namespace monoconn {

namespace {

struct Walker {
  int size;
  int blocks;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> rgs;

  // `used` = number of blocks opened by rgs[0..pos-1].
  bool step(int pos, int used) {
    if (pos == size) return used == blocks && visit(rgs);
    const int remaining = size - pos;
    if (used + remaining < blocks) return false;
    const int limit = std::min(used, blocks - 1);
    for (int b = 0; b <= limit; ++b) {
      // Reusing an old block is only allowed while enough positions remain
      // to open the missing ones.
      if (b < used && used + remaining - 1 < blocks) continue;
      rgs[pos] = b;
      if (step(pos + 1, b == used ? used + 1 : used)) return true;
    }
    return false;
  }
};

}  // namespace

bool for_each_partition(int size, int blocks,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  if (size == 0) return blocks == 0 && visit({});
  if (blocks < 1 || blocks > size) return false;
  Walker walker{size, blocks, visit, std::vector<int>(size, 0)};
  return walker.step(0, 0);
}

unsigned long long stirling2(int size, int blocks) {
  if (blocks < 0 || blocks > size) return 0;
  constexpr auto cap = std::numeric_limits<unsigned long long>::max();
  std::vector<std::vector<unsigned long long>> s(size + 1,
                                                 std::vector<unsigned long long>(size + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= size; ++i) {
    for (int k = 1; k <= i; ++k) {
      const auto a = s[i - 1][k];
      const auto b = s[i - 1][k - 1];
      if (a != 0 && static_cast<unsigned long long>(k) > cap / a) {
        s[i][k] = cap;
        continue;
      }
      const auto prod = a * static_cast<unsigned long long>(k);
      s[i][k] = prod > cap - b ? cap : prod + b;
    }
  }
  return s[size][blocks];
}

}  // namespace monoconn
