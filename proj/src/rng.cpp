#include "catacode/rng.hpp"

#include <algorithm>

namespace catacode {

std::vector<uint64_t> Rng::distinct(size_t n, uint64_t range) {
  if (n > range) throw ParamError("cannot draw more distinct values than the range holds");
  std::vector<uint64_t> out;
  out.reserve(n);
  while (out.size() < n) {
    uint64_t v = below(range);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace catacode
