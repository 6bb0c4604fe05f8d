// Vanishing orders: a nonnegative integer or +infinity (for the zero section).
#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace t237 {

class Order {
 public:
  Order() : value_(0) {}
  Order(long v) : value_(v) {  // NOLINT: implicit by design
    if (v < 0) throw std::invalid_argument("Order: negative vanishing order");
  }
  static Order infinity() {
    Order o;
    o.infinite_ = true;
    return o;
  }

  bool is_infinite() const { return infinite_; }
  long value() const {
    if (infinite_) throw std::domain_error("Order: infinite order has no finite value");
    return value_;
  }

  friend bool operator==(const Order& a, const Order& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const Order& a, const Order& b) { return !(a == b); }
  friend bool operator<(const Order& a, const Order& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Order& a, const Order& b) { return a < b || a == b; }
  friend bool operator>(const Order& a, const Order& b) { return b < a; }
  friend bool operator>=(const Order& a, const Order& b) { return b <= a; }

  friend Order operator+(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Order(a.value_ + b.value_);
  }
  // Scaling by a positive integer; infinity stays infinite.
  friend Order operator*(long k, const Order& a) {
    if (a.infinite_) return infinity();
    return Order(k * a.value_);
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

 private:
  bool infinite_ = false;
  long value_;
};

}  // namespace t237
