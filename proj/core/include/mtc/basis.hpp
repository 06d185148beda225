// Computational basis strings for up to 64 qubits.
//
// Bit-order convention used everywhere in this library: qubit 1 is the
// most significant bit of the n-bit word, so the string "011" (n=3) has
// qubit 1 = 0, qubit 2 = 1, qubit 3 = 1 and integer index 0b011 = 3.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace mtc {

class BasisString {
 public:
  BasisString(int n, std::uint64_t bits);
  static BasisString from_string(std::string_view s);

  int n() const { return n_; }
  std::uint64_t bits() const { return bits_; }

  // Value of the bit for `qubit` in [1, n], qubit 1 being the leftmost.
  int bit(int qubit) const;

  BasisString complement() const;
  int weight() const { return std::popcount(bits_); }
  bool even_parity() const { return weight() % 2 == 0; }

  std::string str() const;

  friend bool operator==(const BasisString&, const BasisString&) = default;

  static std::uint64_t mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  int n_;
  std::uint64_t bits_;
};

}  // namespace mtc
