#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace prc {

/// Maximum number of isotropy summands a model may have.
inline constexpr int kMaxSummands = 24;

/// A subset of the summand indices {0, ..., s-1}, stored as a bit mask.
///
/// Indices are zero-based inside the library; `one_based()` and
/// `to_string()` produce the 1-based form used in all I/O.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  static constexpr IndexSet from_bits(std::uint32_t bits) { return IndexSet(bits); }
  static constexpr IndexSet full(int s) {
    return IndexSet(s >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << s) - 1);
  }
  static IndexSet of(std::initializer_list<int> zero_based) {
    IndexSet out;
    for (int i : zero_based) out.insert(i);
    return out;
  }
  static IndexSet from_one_based(const std::vector<int>& indices) {
    IndexSet out;
    for (int i : indices) out.insert(i - 1);
    return out;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint32_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint32_t{1} << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(IndexSet o) const { return subset_of(o) && bits_ != o.bits_; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr IndexSet complement(int s) const { return full(s) - *this; }

  constexpr bool operator==(const IndexSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
  std::vector<int> one_based() const {
    auto out = members();
    for (int& i : out) ++i;
    return out;
  }
  /// "{1,3}" in 1-based notation; the empty set prints as "{}".
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i : one_based()) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Order used for lattice listings: by cardinality, then lexicographically
/// on the sorted member lists.
inline bool lattice_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: the first differing member is the lowest bit of a ^ b.
  const std::uint32_t diff = a.bits() ^ b.bits();
  return (a.bits() & diff & (~diff + 1)) != 0;
}

}  // namespace prc
