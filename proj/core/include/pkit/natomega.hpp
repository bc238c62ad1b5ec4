#pragma once

#include <cstdint>
#include <string>

#include "pkit/error.hpp"

namespace pkit {

/// A value of the ordinal omega+1: a natural number or omega itself.
/// omega is a distinguished state, never a large sentinel, so that
/// omega-absorbing addition cannot be mistaken for saturating arithmetic.
class NatOmega {
public:
  constexpr NatOmega() : omega_(false), n_(0) {}

  static constexpr NatOmega finite(std::uint32_t n) { return NatOmega(false, n); }
  static constexpr NatOmega omega() { return NatOmega(true, 0); }

  constexpr bool is_omega() const { return omega_; }
  constexpr bool is_finite() const { return !omega_; }

  constexpr std::uint32_t value() const {
    if (omega_) fail(ErrorKind::InvalidArgument, "value() on omega");
    return n_;
  }

  friend constexpr bool operator==(NatOmega a, NatOmega b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.n_ == b.n_);
  }
  friend constexpr bool operator!=(NatOmega a, NatOmega b) { return !(a == b); }

  // Total order with omega greatest.
  friend constexpr bool operator<(NatOmega a, NatOmega b) {
    if (a.omega_) return false;
    if (b.omega_) return true;
    return a.n_ < b.n_;
  }
  friend constexpr bool operator<=(NatOmega a, NatOmega b) { return a == b || a < b; }
  friend constexpr bool operator>(NatOmega a, NatOmega b) { return b < a; }
  friend constexpr bool operator>=(NatOmega a, NatOmega b) { return b <= a; }

  std::string str() const { return omega_ ? "omega" : std::to_string(n_); }

private:
  constexpr NatOmega(bool omega, std::uint32_t n) : omega_(omega), n_(n) {}

  bool omega_;
  std::uint32_t n_;
};

/// m+n on omega+1; the sum is omega as soon as either summand is.
constexpr NatOmega omega_add(NatOmega a, NatOmega b) {
  if (a.is_omega() || b.is_omega()) return NatOmega::omega();
  return NatOmega::finite(a.value() + b.value());
}

}  // namespace pkit
