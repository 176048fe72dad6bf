#include "opcheck/local_operator.hpp"

#include <stdexcept>
#include <utility>

namespace opcheck {

LocalOperator::LocalOperator(std::string descriptor, Action forward, Action adjoint) {
  auto impl = std::make_shared<Impl>();
  impl->descriptor = std::move(descriptor);
  impl->forward = std::move(forward);
  impl->adjoint = std::move(adjoint);
  impl_ = std::move(impl);
}

SparseVec LocalOperator::apply(const SparseVec& f) const {
  if (!impl_) throw std::logic_error("LocalOperator: empty handle");
  return impl_->forward(f);
}

SparseVec LocalOperator::adjoint_apply(const SparseVec& f) const {
  if (!impl_) throw std::logic_error("LocalOperator: empty handle");
  return impl_->adjoint(f);
}

const std::string& LocalOperator::descriptor() const {
  if (!impl_) throw std::logic_error("LocalOperator: empty handle");
  return impl_->descriptor;
}

LocalOperator identity_op() {
  auto id = [](const SparseVec& f) { return f; };
  return {"I", id, id};
}

LocalOperator shift_isometry() {
  auto fwd = [](const SparseVec& f) {
    SparseVec out;
    for (const auto& [l, c] : f.entries()) {
      if (l.kind() != Label::Kind::Nat)
        throw std::invalid_argument("shift_isometry: non-sequence label " + l.str());
      out.set(Label::nat(l.nat_index() + 1), c);
    }
    return out;
  };
  auto adj = [](const SparseVec& f) {
    SparseVec out;
    for (const auto& [l, c] : f.entries()) {
      if (l.kind() != Label::Kind::Nat)
        throw std::invalid_argument("shift_isometry: non-sequence label " + l.str());
      if (l.nat_index() == 0) continue;
      out.set(Label::nat(l.nat_index() - 1), c);
    }
    return out;
  };
  return {"S", fwd, adj};
}

LocalOperator compose(const LocalOperator& a, const LocalOperator& b) {
  auto fwd = [a, b](const SparseVec& f) { return a.apply(b.apply(f)); };
  auto adj = [a, b](const SparseVec& f) { return b.adjoint_apply(a.adjoint_apply(f)); };
  return {"(" + a.descriptor() + "*" + b.descriptor() + ")", fwd, adj};
}

LocalOperator power(const LocalOperator& a, int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  if (n == 0) return identity_op();
  auto fwd = [a, n](const SparseVec& f) {
    SparseVec g = f;
    for (int i = 0; i < n; ++i) g = a.apply(g);
    return g;
  };
  auto adj = [a, n](const SparseVec& f) {
    SparseVec g = f;
    for (int i = 0; i < n; ++i) g = a.adjoint_apply(g);
    return g;
  };
  return {a.descriptor() + "^" + std::to_string(n), fwd, adj};
}

LocalOperator scale(const LocalOperator& a, Complex c) {
  auto fwd = [a, c](const SparseVec& f) { return c * a.apply(f); };
  auto adj = [a, c](const SparseVec& f) { return std::conj(c) * a.adjoint_apply(f); };
  return {"(" + std::to_string(c.real()) + (c.imag() < 0 ? "" : "+") +
              std::to_string(c.imag()) + "i)*" + a.descriptor(),
          fwd, adj};
}

LocalOperator add(const LocalOperator& a, const LocalOperator& b) {
  auto fwd = [a, b](const SparseVec& f) { return a.apply(f) + b.apply(f); };
  auto adj = [a, b](const SparseVec& f) { return a.adjoint_apply(f) + b.adjoint_apply(f); };
  return {"(" + a.descriptor() + "+" + b.descriptor() + ")", fwd, adj};
}

LocalOperator adjoint(const LocalOperator& a) {
  auto fwd = [a](const SparseVec& f) { return a.adjoint_apply(f); };
  auto adj = [a](const SparseVec& f) { return a.apply(f); };
  return {"adj(" + a.descriptor() + ")", fwd, adj};
}

}  // namespace opcheck
