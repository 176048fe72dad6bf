#include "opcheck/sparse_vec.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace opcheck {

SparseVec SparseVec::basis(const Label& l) {
  SparseVec v;
  v.entries_.emplace(l, Complex(1.0, 0.0));
  return v;
}

Complex SparseVec::at(const Label& l) const {
  const auto it = entries_.find(l);
  return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
}

void SparseVec::set(const Label& l, Complex value) {
  if (value == Complex(0.0, 0.0))
    entries_.erase(l);
  else
    entries_[l] = value;
}

void SparseVec::add(const Label& l, Complex value) {
  const auto it = entries_.find(l);
  if (it == entries_.end()) {
    if (value != Complex(0.0, 0.0)) entries_.emplace(l, value);
    return;
  }
  it->second += value;
  if (it->second == Complex(0.0, 0.0)) entries_.erase(it);
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  for (const auto& [l, c] : o.entries_) add(l, c);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  for (const auto& [l, c] : o.entries_) add(l, -c);
  return *this;
}

SparseVec& SparseVec::operator*=(Complex c) {
  if (c == Complex(0.0, 0.0)) {
    entries_.clear();
    return *this;
  }
  for (auto& [l, v] : entries_) v *= c;
  // scaling by a nonzero scalar cannot create exact zeros, but underflow can
  for (auto it = entries_.begin(); it != entries_.end();)
    it = (it->second == Complex(0.0, 0.0)) ? entries_.erase(it) : std::next(it);
  return *this;
}

std::string SparseVec::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [l, c] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << l.str() << ": " << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  }
  os << "}";
  return os.str();
}

Complex inner(const SparseVec& u, const SparseVec& v) {
  // iterate the smaller support
  const SparseVec& small = u.support_size() <= v.support_size() ? u : v;
  const SparseVec& large = u.support_size() <= v.support_size() ? v : u;
  Complex s(0.0, 0.0);
  if (&small == &u) {
    for (const auto& [l, c] : small.entries()) s += c * std::conj(large.at(l));
  } else {
    for (const auto& [l, c] : small.entries()) s += large.at(l) * std::conj(c);
  }
  return s;
}

double norm_sq(const SparseVec& v) {
  double s = 0.0;
  for (const auto& [l, c] : v.entries()) s += std::norm(c);
  return s;
}

double norm(const SparseVec& v) { return std::sqrt(norm_sq(v)); }

bool approx_eq(const SparseVec& u, const SparseVec& v, const TolerancePolicy& tol) {
  return norm(u - v) <= tol.bound(std::max(norm(u), norm(v)));
}

}  // namespace opcheck
