#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistcert/int_matrix.hpp"

namespace twistcert {

/// A 4x4 matrix over Z/4 packed into one word: entry (r, c) occupies bits
/// 2(4r + c) and 2(4r + c) + 1.
using Packed4 = std::uint32_t;

Packed4 pack4(const ModMatrix& m);
ModMatrix unpack4(Packed4 p);
/// Product over Z/4 of packed matrices.
Packed4 mul4(Packed4 a, Packed4 b);
inline constexpr Packed4 kIdentity4 = 1u | (1u << 10) | (1u << 20) | (1u << 30);

/// Open-addressing hash set of packed matrices. 0xFFFFFFFF marks an empty
/// slot; it encodes the all-3 matrix, which is not symplectic.
class PackedSet {
 public:
  explicit PackedSet(std::size_t expected = 1024);
  /// True if newly inserted.
  bool insert(Packed4 x);
  bool contains(Packed4 x) const;
  std::size_t size() const noexcept { return size_; }
  std::vector<Packed4> sorted() const;

 private:
  static constexpr Packed4 kEmpty = 0xFFFFFFFFu;
  void grow();
  std::vector<Packed4> slots_;
  std::size_t size_ = 0;
};

/// The image of Gamma in Sp(4, Z/4).
class ClosureTable {
 public:
  ClosureTable(std::vector<Packed4> sorted_elements, std::vector<Packed4> generators);

  std::size_t genus() const noexcept { return 2; }
  std::uint64_t modulus() const noexcept { return 4; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Packed4>& elements() const noexcept { return elements_; }
  const std::vector<Packed4>& generators() const noexcept { return generators_; }

  bool contains(Packed4 x) const;
  bool contains(const IntMatrix& m) const;

 private:
  std::vector<Packed4> elements_;
  std::vector<Packed4> generators_;
};

/// Reductions mod 4 of A_i^{+-1}, B_i^{+-1}, C_1^{+-2} at genus 2.
std::vector<Packed4> closure_generators();

/// Breadth-first closure from I under right multiplication by the
/// generators. The serial version is the reference; the parallel one expands
/// each level with OpenMP and merges in sorted order, giving the same set.
ClosureTable quotient_closure_serial();
ClosureTable quotient_closure();

/// Every element times every generator lands back in the table.
bool generator_closed(const ClosureTable& t);

/// Binary cache: "TWCLOSE\0", u32 version, u32 genus, u32 modulus, u32
/// reserved, u64 count, then the sorted packed words, little-endian.
void save_closure(const ClosureTable& t, const std::string& path);
/// nullopt when the file is missing or fails any header or ordering check.
std::optional<ClosureTable> load_closure(const std::string& path);

/// Load from path if valid, else compute and try to write it. Empty path
/// means no caching.
ClosureTable closure_cached(const std::string& path);

/// |Sp(2g, Z/2^k)| = 2^{g^2} prod_{i=1}^g (4^i - 1) * 2^{(k-1) g (2g+1)}.
Integer sp_order_mod_power_of_two(std::size_t genus, unsigned k);

struct IndexResult {
  Integer index;  // [Sp(4,Z) : Gamma]
  Integer group_order;
  std::size_t image_order;
  bool within_bound;      // index <= 2^{8 g^3} = 2^64
  bool multiple_of_20;
};

/// Exact because Gamma contains the level-4 principal congruence subgroup.
IndexResult gamma_index(const ClosureTable& t);

}  // namespace twistcert
