#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gstest {

// Single-qubit Pauli in symplectic encoding: bit 0 is the X component,
// bit 1 the Z component, Y = XZ. Phases are never tracked; commutation
// and (anti)symmetry are all the test needs.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool anticommutes(Pauli a, Pauli b) {
  const auto av = static_cast<unsigned>(a);
  const auto bv = static_cast<unsigned>(b);
  return (((av & 1u) & (bv >> 1)) ^ ((av >> 1) & (bv & 1u))) != 0;
}

char to_char(Pauli p);
Pauli pauli_from_char(char c);  // throws ParseError on anything but IXYZ

// Multiqubit Pauli operator stored as (vertex, letter) terms sorted by
// vertex. Identity letters are never stored, so weight() is terms().size().
class SparsePauli {
 public:
  using Term = std::pair<std::uint32_t, Pauli>;

  SparsePauli() = default;

  // p == I erases any existing term at the vertex.
  void set(std::uint32_t vertex, Pauli p);
  Pauli at(std::uint32_t vertex) const;  // I when the vertex is absent
  void clear() { terms_.clear(); }

  std::size_t weight() const { return terms_.size(); }
  bool is_identity() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::vector<std::uint32_t> support() const;

  // Canonical text form, e.g. "X3 Z7 Z9"; identity renders as "".
  std::string str() const;
  static SparsePauli from_str(std::string_view text);

  friend bool operator==(const SparsePauli&, const SparsePauli&) = default;

 private:
  std::vector<Term> terms_;
};

bool anticommutes(const SparsePauli& a, const SparsePauli& b);

// Site-wise product with the phase discarded (symplectic xor).
SparsePauli product_up_to_phase(const SparsePauli& a, const SparsePauli& b);

inline constexpr std::size_t kMaxEnumerationSupport = 12;

// Streams every Pauli operator supported on `support` whose weight is at
// least min_weight. Order is lexicographic with support[0] most significant
// and letters ranked I < X < Y < Z at each position.
class PauliEnumerator {
 public:
  explicit PauliEnumerator(std::vector<std::uint32_t> support,
                           std::size_t min_weight = 0);

  // Writes the next operator into `out`; returns false once exhausted.
  bool next(SparsePauli& out);

 private:
  bool advance();

  std::vector<std::uint32_t> support_;
  std::vector<std::uint8_t> digits_;  // base-4: 0=I 1=X 2=Y 3=Z
  std::size_t min_weight_ = 0;
  std::size_t weight_ = 0;
  bool fresh_ = true;
  bool done_ = false;
};

}  // namespace gstest
