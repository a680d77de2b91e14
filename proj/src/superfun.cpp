#include "scoh/superfun.hpp"

#include <stdexcept>

namespace scoh {

Parity SuperFun::parity() const {
  if (ev_.is_zero() && !od_.is_zero()) return Parity::Odd;
  if (od_.is_zero()) return Parity::Even;
  throw std::domain_error("SuperFun::parity: inhomogeneous element " + str());
}

SuperFun& SuperFun::operator+=(const SuperFun& o) {
  ev_ += o.ev_;
  od_ += o.od_;
  return *this;
}

SuperFun& SuperFun::operator-=(const SuperFun& o) {
  ev_ -= o.ev_;
  od_ -= o.od_;
  return *this;
}

SuperFun operator*(const SuperFun& a, const SuperFun& b) {
  // (f0 + theta f1)(g0 + theta g1) = f0 g0 + theta (f0 g1 + f1 g0); theta^2 = 0.
  return SuperFun(a.ev_ * b.ev_, a.ev_ * b.od_ + a.od_ * b.ev_);
}

SuperFun operator*(const Rat& s, const SuperFun& f) { return SuperFun(s * f.ev(), s * f.od()); }

std::string SuperFun::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (!ev_.is_zero()) out = ev_.str();
  if (!od_.is_zero()) {
    if (!out.empty()) out += " + ";
    out += "theta*(" + od_.str() + ")";
  }
  return out;
}

}  // namespace scoh
