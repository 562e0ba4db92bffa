#include "catacode/meter.hpp"

#include <algorithm>

namespace catacode::meter {

void Reg::release() {
  if (released_) throw ParamError("meter register released twice");
  if (meter_) {
    meter_->on_release(width_);
    meter_ = nullptr;
    released_ = true;
  }
}

void Reg::release_if_live() {
  if (meter_) {
    meter_->on_release(width_);
    meter_ = nullptr;
    released_ = true;
  }
}

Reg Meter::alloc(uint64_t width_bits) {
  if (width_bits == 0) throw ParamError("meter alloc of zero width");
  live_ += width_bits;
  peak_ = std::max(peak_, live_);
  for (Open& o : open_) o.peak = std::max(o.peak, live_);
  return Reg(this, width_bits);
}

void Meter::on_release(uint64_t width) {
  // Handles are affine, so live_ >= width always holds here.
  live_ -= width;
}

Meter::Scope Meter::scope(const std::string& label) {
  open_.push_back(Open{label, live_});
  return Scope(this);
}

void Meter::Scope::close() {
  if (meter_) {
    meter_->close_top();
    meter_ = nullptr;
  }
}

void Meter::close_top() {
  Open o = open_.back();
  open_.pop_back();
  auto it = closed_.find(o.label);
  if (it == closed_.end())
    closed_.emplace(o.label, o.peak);
  else
    it->second = std::max(it->second, o.peak);
}

std::map<std::string, uint64_t> Meter::report() const {
  if (!open_.empty()) throw ParamError("meter report requested with a scope still open");
  return closed_;
}

}  // namespace catacode::meter
