#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace rosserlab {

using BigNat = boost::multiprecision::cpp_int;

// A Godel code. Always >= 1 for real objects; 0 codes nothing.
// Codes of compound nodes strictly exceed the codes of their parts.
class Code {
 public:
  Code() : v_(0) {}
  Code(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design
  explicit Code(BigNat v) : v_(std::move(v)) {}

  const BigNat& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  // Narrowing accessor for code values known to be small (stage arithmetic).
  std::uint64_t to_u64() const { return static_cast<std::uint64_t>(v_); }
  bool fits_u64() const { return v_ >= 0 && v_ <= BigNat(UINT64_MAX); }

  friend bool operator==(const Code& a, const Code& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Code& a, const Code& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  BigNat v_;
};

// Cantor pairing; bijection between N^2 and N.
inline BigNat cantor_pair(const BigNat& a, const BigNat& b) {
  BigNat s = a + b;
  return s * (s + 1) / 2 + b;
}

inline std::pair<BigNat, BigNat> cantor_unpair(const BigNat& p) {
  BigNat t = 8 * p + 1;
  BigNat w = (BigNat(boost::multiprecision::sqrt(t)) - 1) / 2;
  BigNat b = p - w * (w + 1) / 2;
  return {w - b, b};
}

}  // namespace rosserlab
