#pragma once

// Small finite fields GF(p^d) with table-driven arithmetic. Elements are
// encoded as integers in [0, p^d): the base-p digits of an element are the
// coefficients of its polynomial representative.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hj/errors.hpp"

namespace hj {

class GaloisField {
 public:
  /// Builds GF(p^d) from an explicit modulus given as ascending coefficients
  /// (size d+1, leading coefficient nonzero). The modulus is normalized to
  /// monic form and checked irreducible by trial division.
  GaloisField(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> modulus);

  /// GF(p) for prime p.
  static GaloisField prime(std::uint32_t p);

  /// GF(q) for prime q or a prime power with a built-in modulus
  /// (orders 4, 8, 9, 16, 25, 27). Other prime powers need an explicit
  /// modulus; non prime powers raise UnsupportedOrder.
  static GaloisField of_order(std::uint32_t q);

  /// (p, d) when q = p^d with p prime and d >= 1.
  static std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint32_t q);
  static bool is_prime(std::uint32_t n);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_ = 0, d_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace hj
