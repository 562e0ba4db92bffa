#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "catacode/bits.hpp"

namespace catacode {

// Seeded deterministic randomness. mt19937_64 output is fixed by the
// standard, so identical seeds give identical streams on every platform;
// reductions below avoid std::uniform_int_distribution on purpose.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  uint64_t below(uint64_t n) {
    if (n == 0) throw ParamError("Rng::below(0)");
    return gen_() % n;
  }

  bool bit() { return gen_() & 1; }

  BitVec bits(size_t n) {
    BitVec v(n);
    for (size_t i = 0; i < n; i += 64)
      v.write_word(i, static_cast<unsigned>(std::min<size_t>(64, n - i)), gen_());
    return v;
  }

  // n distinct values from [0, range), ascending.
  std::vector<uint64_t> distinct(size_t n, uint64_t range);

 private:
  std::mt19937_64 gen_;
};

}  // namespace catacode
