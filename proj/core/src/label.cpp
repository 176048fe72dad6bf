#include "opcheck/label.hpp"

#include <stdexcept>
#include <tuple>

namespace opcheck {

std::string to_string(const VertexKey& v) {
  if (v.branch == 0) return std::to_string(v.index);
  return "(" + std::to_string(v.branch) + "," + std::to_string(v.index) + ")";
}

Label Label::nat(std::int64_t k) {
  if (k < 0) throw std::invalid_argument("Label::nat: negative index " + std::to_string(k));
  Label l;
  l.kind_ = Kind::Nat;
  l.num_ = k;
  return l;
}

Label Label::vertex(VertexKey v) {
  Label l;
  l.kind_ = Kind::Vertex;
  l.key_ = v;
  return l;
}

Label Label::block(std::int64_t j, const Label& inner) {
  if (j < 0) throw std::invalid_argument("Label::block: negative block index " + std::to_string(j));
  if (inner.kind_ == Kind::Block)
    throw std::invalid_argument("Label::block: block labels do not nest");
  Label l;
  l.kind_ = Kind::Block;
  l.num_ = j;
  l.inner_kind_ = inner.kind_;
  if (inner.kind_ == Kind::Nat)
    l.inner_num_ = inner.num_;
  else
    l.key_ = inner.key_;
  return l;
}

std::int64_t Label::nat_index() const {
  if (kind_ != Kind::Nat) throw std::logic_error("Label::nat_index on non-Nat label");
  return num_;
}

VertexKey Label::vertex_key() const {
  if (kind_ != Kind::Vertex) throw std::logic_error("Label::vertex_key on non-Vertex label");
  return key_;
}

std::int64_t Label::block_index() const {
  if (kind_ != Kind::Block) throw std::logic_error("Label::block_index on non-Block label");
  return num_;
}

Label Label::block_inner() const {
  if (kind_ != Kind::Block) throw std::logic_error("Label::block_inner on non-Block label");
  return inner_kind_ == Kind::Nat ? nat(inner_num_) : vertex(key_);
}

std::string Label::str() const {
  switch (kind_) {
    case Kind::Nat:
      return std::to_string(num_);
    case Kind::Vertex:
      return "v" + to_string(key_);
    default:
      return std::to_string(num_) + "#" + block_inner().str();
  }
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Label::Kind::Nat:
      return a.num_ <=> b.num_;
    case Label::Kind::Vertex:
      return std::tie(a.key_.branch, a.key_.index) <=> std::tie(b.key_.branch, b.key_.index);
    default:
      if (auto c = a.num_ <=> b.num_; c != 0) return c;
      if (auto c = a.inner_kind_ <=> b.inner_kind_; c != 0) return c;
      if (a.inner_kind_ == Label::Kind::Nat) return a.inner_num_ <=> b.inner_num_;
      return std::tie(a.key_.branch, a.key_.index) <=> std::tie(b.key_.branch, b.key_.index);
  }
}

}  // namespace opcheck
