#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace opcheck {

/// Key of a tree vertex, ordered lexicographically by (branch, index).
/// The T_{2,kappa} family keeps its chain (trunk and branching vertex) on
/// branch 0 with indices <= 0 and its two rays on branches 1 and 2 with
/// indices >= 1; generic finite trees may use any keys.
struct VertexKey {
  std::int32_t branch = 0;
  std::int32_t index = 0;

  friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

std::string to_string(const VertexKey& v);

/// Index into the countable label universe. Three kinds:
///   Nat(k)        -- basis index of the sequence space, k >= 0
///   Vertex(key)   -- basis index of a tree space
///   Block(j, l)   -- j-th summand of a direct sum, inner label l
/// Block labels never nest. A total deterministic order (kind first, then
/// payload; Block by (j, inner)) makes iteration reproducible everywhere.
class Label {
 public:
  enum class Kind : std::uint8_t { Nat = 0, Vertex = 1, Block = 2 };

  Label() = default;  // Nat(0)

  static Label nat(std::int64_t k);
  static Label vertex(VertexKey v);
  static Label block(std::int64_t j, const Label& inner);

  Kind kind() const { return kind_; }
  std::int64_t nat_index() const;
  VertexKey vertex_key() const;
  std::int64_t block_index() const;
  Label block_inner() const;

  std::string str() const;

  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  Kind kind_ = Kind::Nat;
  Kind inner_kind_ = Kind::Nat;  // meaningful only for Block
  std::int64_t num_ = 0;         // Nat value, or Block index
  std::int64_t inner_num_ = 0;   // Block inner Nat value
  VertexKey key_{};              // Vertex key, or Block inner vertex key
};

}  // namespace opcheck
