#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ksat {

// One truth assignment over n <= 64 variables, packed into a word.
// Bit i is variable i; 1 = true. The packed form makes clause tests and
// similarity counts single mask/popcount operations.
class Assignment {
 public:
  static constexpr int kMaxVars = 64;

  Assignment(std::uint64_t bits, int n) : bits_(bits), n_(n) {
    if (n < 0 || n > kMaxVars) {
      throw std::invalid_argument("Assignment: variable count out of range");
    }
    if (n < kMaxVars && (bits >> n) != 0) {
      throw std::invalid_argument("Assignment: bits beyond variable count");
    }
  }

  // Parses "10110": character i is variable i.
  static Assignment from_string(std::string_view text) {
    if (text.size() > kMaxVars) {
      throw std::invalid_argument("Assignment: too many variables");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1') {
        bits |= std::uint64_t{1} << i;
      } else if (text[i] != '0') {
        throw std::invalid_argument("Assignment: expected only '0'/'1'");
      }
    }
    return Assignment(bits, static_cast<int>(text.size()));
  }

  int size() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  bool value(int variable) const { return (bits_ >> variable) & 1u; }

  std::uint64_t full_mask() const {
    return n_ == kMaxVars ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  Assignment complement() const { return Assignment(~bits_ & full_mask(), n_); }

  std::string to_string() const {
    std::string out(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i) {
      if (value(i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::uint64_t bits_;
  int n_;
};

// Number of variables on which a and b take the same value.
inline int similarity_number(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("similarity_number: length mismatch");
  }
  return a.size() - std::popcount(a.bits() ^ b.bits());
}

// similarity_number / n, in [0, 1].
inline double similarity_degree(const Assignment& a, const Assignment& b) {
  if (a.size() == 0) {
    throw std::invalid_argument("similarity_degree: empty assignment");
  }
  return static_cast<double>(similarity_number(a, b)) / a.size();
}

}  // namespace ksat
