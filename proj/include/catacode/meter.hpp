#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "catacode/errors.hpp"

namespace catacode::meter {

class Meter;

// Affine handle for one allocated register: released exactly once, either
// explicitly or on destruction.
class Reg {
 public:
  Reg() = default;
  Reg(Reg&& o) noexcept { swap(o); }
  Reg& operator=(Reg&& o) noexcept {
    if (this != &o) {
      release_if_live();
      swap(o);
    }
    return *this;
  }
  Reg(const Reg&) = delete;
  Reg& operator=(const Reg&) = delete;
  ~Reg() { release_if_live(); }

  void release();
  uint64_t width() const { return width_; }
  bool live() const { return meter_ != nullptr; }

 private:
  friend class Meter;
  Reg(Meter* m, uint64_t w) : meter_(m), width_(w) {}
  void swap(Reg& o) {
    std::swap(meter_, o.meter_);
    std::swap(width_, o.width_);
    std::swap(released_, o.released_);
  }
  void release_if_live();

  Meter* meter_ = nullptr;
  uint64_t width_ = 0;
  bool released_ = false;
};

// Tracks live auxiliary register bits and the peak reached inside each
// labelled phase. Phases nest; an allocation counts toward every phase
// open at the time it is live.
class Meter {
 public:
  class Scope {
   public:
    Scope(Scope&& o) noexcept : meter_(o.meter_) { o.meter_ = nullptr; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
    Scope& operator=(Scope&&) = delete;
    ~Scope() { close(); }
    void close();

   private:
    friend class Meter;
    explicit Scope(Meter* m) : meter_(m) {}
    Meter* meter_;
  };

  Reg alloc(uint64_t width_bits);
  Scope scope(const std::string& label);

  uint64_t live_bits() const { return live_; }
  uint64_t peak_bits() const { return peak_; }

  // Per-phase peaks, labels sorted. Requires every scope closed.
  std::map<std::string, uint64_t> report() const;

 private:
  friend class Reg;
  void on_release(uint64_t width);
  void close_top();

  struct Open {
    std::string label;
    uint64_t peak = 0;
  };

  uint64_t live_ = 0;
  uint64_t peak_ = 0;
  std::vector<Open> open_;
  std::map<std::string, uint64_t> closed_;
};

// Convenience for optionally metered code paths.
inline Reg alloc_if(Meter* m, uint64_t width_bits) {
  return m ? m->alloc(width_bits) : Reg{};
}

}  // namespace catacode::meter
