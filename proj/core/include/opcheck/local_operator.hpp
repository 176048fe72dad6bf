#pragma once

#include <functional>
#include <memory>
#include <string>

#include "opcheck/sparse_vec.hpp"

namespace opcheck {

/// An operator given by its exact forward and adjoint actions on finitely
/// supported vectors. Both actions map finite support to finite support
/// (band-limitation), and every constructed operator satisfies adjoint
/// duality <Au, v> = <u, A*v> on that common dense core -- the testable
/// meaning of the adjoint here.
///
/// Values are immutable and cheap to copy; apply/adjoint_apply are pure.
class LocalOperator {
 public:
  using Action = std::function<SparseVec(const SparseVec&)>;

  LocalOperator() = default;
  LocalOperator(std::string descriptor, Action forward, Action adjoint);

  SparseVec apply(const SparseVec& f) const;
  SparseVec adjoint_apply(const SparseVec& f) const;

  /// Human-readable build expression, recorded verbatim in reports.
  const std::string& descriptor() const;

  explicit operator bool() const { return impl_ != nullptr; }

 private:
  struct Impl {
    std::string descriptor;
    Action forward;
    Action adjoint;
  };
  std::shared_ptr<const Impl> impl_;
};

LocalOperator identity_op();

/// The unilateral shift on the sequence labels: S e_n = e_{n+1},
/// S* e_0 = 0, S* e_n = e_{n-1}. Rejects labels outside the sequence space.
LocalOperator shift_isometry();

LocalOperator compose(const LocalOperator& a, const LocalOperator& b);
LocalOperator power(const LocalOperator& a, int n);
LocalOperator scale(const LocalOperator& a, Complex c);
LocalOperator add(const LocalOperator& a, const LocalOperator& b);
LocalOperator adjoint(const LocalOperator& a);

}  // namespace opcheck
