#include "hj/galois.hpp"

#include <algorithm>
#include <string>

namespace hj {

namespace {

// Field orders above this would make the multiplication table (and every
// plane built on the field) uselessly large for this toolkit.
constexpr std::uint32_t kMaxOrder = 512;

using Poly = std::vector<std::uint32_t>;  // ascending coefficients, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  while (a.size() >= m.size()) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint32_t sub = (lead * m[i]) % p;
      std::uint32_t idx = static_cast<std::uint32_t>(i + shift);
      a[idx] = (a[idx] + p - sub) % p;
    }
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t e, std::uint32_t p) {
  Poly out;
  while (e > 0) {
    out.push_back(e % p);
    e /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t e = 0;
  for (std::size_t i = a.size(); i-- > 0;) e = e * p + a[i];
  return e;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat via repeated multiplication is fine.
  std::uint32_t result = 1;
  for (std::uint32_t k = 0; k + 2 < p; ++k) result = (result * a) % p;
  return result;
}

bool poly_is_zero_mod(const Poly& divisor, const Poly& m, std::uint32_t p) {
  return poly_mod(m, divisor, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool irreducible(const Poly& m, std::uint32_t p) {
  std::uint32_t d = static_cast<std::uint32_t>(m.size()) - 1;
  for (std::uint32_t k = 1; 2 * k <= d; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly div(k + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[k] = 1;
      if (poly_is_zero_mod(div, m, p)) return false;
    }
  }
  return true;
}

struct BuiltinModulus {
  std::uint32_t order;
  std::uint32_t p;
  std::uint32_t degree;
  std::vector<std::uint32_t> coeffs;  // ascending
};

const BuiltinModulus kBuiltins[] = {
    {4, 2, 2, {1, 1, 1}},      // x^2 + x + 1
    {8, 2, 3, {1, 1, 0, 1}},   // x^3 + x + 1
    {9, 3, 2, {1, 0, 1}},      // x^2 + 1
    {16, 2, 4, {1, 1, 0, 0, 1}},  // x^4 + x + 1
    {25, 5, 2, {2, 0, 1}},     // x^2 + 2
    {27, 3, 3, {1, 2, 0, 1}},  // x^3 + 2x + 1
};

}  // namespace

bool GaloisField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> GaloisField::prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t rest = q, degree = 0;
  while (rest % p == 0) {
    rest /= p;
    ++degree;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, degree);
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t degree, std::vector<std::uint32_t> modulus)
    : p_(p), d_(degree) {
  if (!is_prime(p)) fail(Errc::BadField, "characteristic " + std::to_string(p) + " is not prime");
  if (degree == 0) fail(Errc::BadField, "degree must be positive");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    q *= p;
    if (q > kMaxOrder)
      fail(Errc::BadField, "field order exceeds supported maximum " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (modulus.size() != degree + 1)
    fail(Errc::BadField, "modulus must have degree " + std::to_string(degree));
  for (auto& c : modulus) c %= p;
  if (modulus.back() == 0) fail(Errc::BadField, "modulus has zero leading coefficient");
  std::uint32_t lead_inv = mod_inverse(modulus.back(), p);
  for (auto& c : modulus) c = (c * lead_inv) % p;
  if (!irreducible(modulus, p))
    fail(Errc::BadField, "modulus is reducible over GF(" + std::to_string(p) + ")");
  modulus_ = std::move(modulus);

  add_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);

  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = decode(a, p_);
    Poly na(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) na[i] = (p_ - pa[i]) % p_;
    trim(na);
    neg_[a] = encode(na, p_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = decode(b, p_);
      Poly sum(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        std::uint32_t ca = i < pa.size() ? pa[i] : 0;
        std::uint32_t cb = i < pb.size() ? pb[i] : 0;
        sum[i] = (ca + cb) % p_;
      }
      trim(sum);
      add_[a * q_ + b] = encode(sum, p_);
      Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
      mul_[a * q_ + b] = encode(prod, p_);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) fail(Errc::BadField, "zero has no inverse");
  return inv_[a];
}

GaloisField GaloisField::prime(std::uint32_t p) { return GaloisField(p, 1, {0, 1}); }

GaloisField GaloisField::of_order(std::uint32_t q) {
  auto pp = prime_power(q);
  if (!pp) fail(Errc::UnsupportedOrder, std::to_string(q) + " is not a prime power");
  auto [p, d] = *pp;
  if (d == 1) return prime(p);
  for (const auto& b : kBuiltins)
    if (b.order == q) return GaloisField(b.p, b.degree, b.coeffs);
  fail(Errc::BadField,
       "no built-in modulus for order " + std::to_string(q) + "; supply one explicitly");
}

}  // namespace hj
