#pragma once

#include <complex>
#include <map>
#include <string>

#include "opcheck/label.hpp"

namespace opcheck {

using Complex = std::complex<double>;

/// Absolute + relative tolerance pair. Approximate equality is symmetric;
/// the scale reference is the larger of the two compared norms.
struct TolerancePolicy {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;

  double bound(double scale) const { return abs_tol + rel_tol * scale; }
};

/// Finitely supported complex function on the label universe -- the only
/// vector representation in this project. Stored values are always nonzero:
/// arithmetic drops entries that become exactly zero.
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec basis(const Label& l);

  const std::map<Label, Complex>& entries() const { return entries_; }
  Complex at(const Label& l) const;
  /// Sets the coefficient at l; an exact zero erases the entry.
  void set(const Label& l, Complex value);
  /// Accumulates value into the coefficient at l, dropping exact zeros.
  void add(const Label& l, Complex value);
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec& operator*=(Complex c);

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { a += b; return a; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { a -= b; return a; }
  friend SparseVec operator*(Complex c, SparseVec v) { v *= c; return v; }
  friend SparseVec operator-(SparseVec v) { v *= Complex(-1.0, 0.0); return v; }

  std::string str() const;

 private:
  std::map<Label, Complex> entries_;
};

/// Inner product over the finite common support: linear in the first
/// argument, conjugate-linear in the second (fixed project-wide).
Complex inner(const SparseVec& u, const SparseVec& v);

double norm_sq(const SparseVec& v);
double norm(const SparseVec& v);

/// True iff ||u - v|| <= abs_tol + rel_tol * max(||u||, ||v||).
bool approx_eq(const SparseVec& u, const SparseVec& v, const TolerancePolicy& tol);

}  // namespace opcheck
