#ifndef LAPINT_FACE_HPP
#define LAPINT_FACE_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lapint {

// A ground set holds at most 63 vertices so that one machine word per face
// always suffices.  Vertices are 1-based externally (matching the usual
// combinatorial conventions); bit k of `bits` stands for vertex k+1.
inline constexpr int kMaxGroundSize = 63;

// A face: a subset of the ground set.  dimension() = |F| - 1, so the empty
// face has dimension -1.
struct Face {
  std::uint64_t bits = 0;

  static Face empty() { return Face{0}; }

  static Face full(int n) {
    return Face{n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
  }

  static Face of(std::initializer_list<int> vertices) {
    Face f;
    for (int v : vertices) f.bits |= std::uint64_t{1} << (v - 1);
    return f;
  }

  static Face from_vertices(const std::vector<int>& vertices) {
    Face f;
    for (int v : vertices) f.bits |= std::uint64_t{1} << (v - 1);
    return f;
  }

  int cardinality() const { return std::popcount(bits); }
  int dimension() const { return cardinality() - 1; }
  bool is_empty() const { return bits == 0; }

  bool contains(int v) const { return (bits >> (v - 1)) & 1; }
  Face with(int v) const { return Face{bits | (std::uint64_t{1} << (v - 1))}; }
  Face without(int v) const { return Face{bits & ~(std::uint64_t{1} << (v - 1))}; }

  bool subset_of(Face o) const { return (bits & ~o.bits) == 0; }
  Face union_with(Face o) const { return Face{bits | o.bits}; }
  Face intersect(Face o) const { return Face{bits & o.bits}; }
  Face minus(Face o) const { return Face{bits & ~o.bits}; }
  bool disjoint_from(Face o) const { return (bits & o.bits) == 0; }
  Face complement_in(int n) const { return Face{full(n).bits & ~bits}; }

  // Ascending vertex labels.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  int min_vertex() const { return bits == 0 ? 0 : std::countr_zero(bits) + 1; }
  int max_vertex() const { return bits == 0 ? 0 : 64 - std::countl_zero(bits); }

  // "1246" style (dot-separated once labels exceed 9); the empty face
  // prints as "()".
  std::string to_string() const {
    if (bits == 0) return "()";
    const bool dotted = max_vertex() > 9;
    std::string s;
    for (int v : vertices()) {
      if (!s.empty() && dotted) s += '.';
      s += std::to_string(v);
    }
    return s;
  }

  friend bool operator==(Face a, Face b) = default;
};

// Canonical face order: by cardinality, then lexicographically on the
// ascending vertex list.  For equal cardinality the lexicographic comparison
// reduces to asking which face owns the smallest vertex in the symmetric
// difference.
inline bool canonical_less(Face a, Face b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  std::uint64_t d = a.bits ^ b.bits;
  if (d == 0) return false;
  return (d & -d) & a.bits;
}

struct CanonicalLess {
  bool operator()(Face a, Face b) const { return canonical_less(a, b); }
};

}  // namespace lapint

#endif  // LAPINT_FACE_HPP
