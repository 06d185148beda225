#include "mtc/basis.hpp"

#include <stdexcept>

namespace mtc {

BasisString::BasisString(int n, std::uint64_t bits) : n_(n), bits_(bits) {
  if (n < 1 || n > 64) {
    throw std::invalid_argument("BasisString: qubit count must be in [1, 64], got " +
                                std::to_string(n));
  }
  if ((bits & ~mask(n)) != 0) {
    throw std::invalid_argument("BasisString: bits exceed " + std::to_string(n) + "-bit range");
  }
}

BasisString BasisString::from_string(std::string_view s) {
  if (s.empty() || s.size() > 64) {
    throw std::invalid_argument("BasisString: string length must be in [1, 64]");
  }
  std::uint64_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BasisString: expected only '0'/'1' characters");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BasisString(static_cast<int>(s.size()), bits);
}

int BasisString::bit(int qubit) const {
  if (qubit < 1 || qubit > n_) {
    throw std::out_of_range("BasisString: qubit index out of range");
  }
  return static_cast<int>((bits_ >> (n_ - qubit)) & 1);
}

BasisString BasisString::complement() const {
  return BasisString(n_, ~bits_ & mask(n_));
}

std::string BasisString::str() const {
  std::string out(static_cast<size_t>(n_), '0');
  for (int q = 1; q <= n_; ++q) {
    out[static_cast<size_t>(q - 1)] = static_cast<char>('0' + bit(q));
  }
  return out;
}

}  // namespace mtc
