#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hahnroot {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/**
 * A finite field F_{p^k} = F_p[s]/(modulus).
 *
 * Contexts are immutable once built. Enlarging a field produces a new
 * context; values are moved across with an Embedding.
 */
class FieldCtx {
 public:
  /// F_p, represented with modulus s (so every element is a constant).
  static FieldPtr prime(std::uint32_t p);

  /// F_{p^k} with the smallest monic irreducible modulus of degree k.
  /// Polynomials are ordered by their coefficient vectors read from the
  /// highest non-leading coefficient down.
  static FieldPtr extension(std::uint32_t p, unsigned k);

  /// Explicit modulus (low-to-high coefficients, monic). Throws if the
  /// modulus is not irreducible or p is not prime.
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  mpz_class order() const;

  /// "F_9"
  std::string name() const;
  /// "F_3[s]/(s^2+1)", or "F_3" for a prime field.
  std::string description() const;

  bool same_as(const FieldCtx& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

  // Coordinate-level arithmetic; vectors have length k.
  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> sub(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b) const;

 private:
  FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  unsigned k_;
  std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t n);

/// Inverse of FieldCtx::description(): "F_3" or "F_3[s]/(s^2+1)".
FieldPtr parse_field(const std::string& description);

/// Element of a finite field context.
class FF {
 public:
  FF() = default;
  /// Image of an integer under Z -> F_p -> F_{p^k}.
  FF(FieldPtr ctx, std::int64_t value);

  static FF zero(FieldPtr ctx) { return FF(std::move(ctx), 0); }
  static FF one(FieldPtr ctx) { return FF(std::move(ctx), 1); }
  static FF generator(FieldPtr ctx);
  static FF from_coords(FieldPtr ctx, std::vector<std::uint32_t> coords);
  /// Element whose coordinate vector is the base-p digits of index
  /// (coordinate 0 least significant). Enumerates the field in canonical order.
  static FF from_index(FieldPtr ctx, std::uint64_t index);

  const FieldPtr& ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& coords() const { return c_; }
  bool valid() const { return static_cast<bool>(ctx_); }

  bool is_zero() const;
  bool is_one() const;
  /// True when the element lies in the prime field.
  bool in_prime_field() const;
  /// Value in [0, p) of a prime-field element.
  std::uint32_t prime_value() const;

  FF operator-() const;
  FF& operator+=(const FF& o);
  FF& operator-=(const FF& o);
  FF& operator*=(const FF& o);
  FF& operator/=(const FF& o);
  friend FF operator+(FF a, const FF& b) { return a += b; }
  friend FF operator-(FF a, const FF& b) { return a -= b; }
  friend FF operator*(FF a, const FF& b) { return a *= b; }
  friend FF operator/(FF a, const FF& b) { return a /= b; }

  FF inverse() const;
  FF pow(const mpz_class& e) const;
  FF pow(std::uint64_t e) const { return pow(mpz_class(static_cast<unsigned long>(e))); }
  FF frobenius() const { return pow(std::uint64_t{ctx_->p()}); }

  /// Degree of the element over F_p: the least d with x^(p^d) = x.
  unsigned degree() const;

  /// Canonical rendering as a polynomial in s, e.g. "2*s+1".
  std::string str() const;
  /// Inverse of str(); also accepts integers of either sign.
  static FF parse(const FieldPtr& ctx, const std::string& text);

  friend bool operator==(const FF& a, const FF& b);
  /// Canonical order: compare coordinates from the highest one down.
  friend std::strong_ordering operator<=>(const FF& a, const FF& b);

 private:
  FF(FieldPtr ctx, std::vector<std::uint32_t> coords, int);
  void check_same(const FF& o) const;

  FieldPtr ctx_;
  std::vector<std::uint32_t> c_;
};

/**
 * Field homomorphism F_{p^k} -> F_{p^K} (k | K), fixed by the image of the
 * generator s, which is a root of the source modulus in the target.
 */
class Embedding {
 public:
  static Embedding identity(FieldPtr ctx);
  /// Canonical embedding: s maps to the smallest root (canonical order) of
  /// the source modulus in the target.
  static Embedding between(FieldPtr from, FieldPtr to);

  const FieldPtr& from() const { return from_; }
  const FieldPtr& to() const { return to_; }
  const FF& generator_image() const { return image_; }
  bool is_identity() const { return from_->same_as(*to_); }

  FF operator()(const FF& x) const;
  /// Preimage of y, if y lies in the image.
  std::optional<FF> restrict(const FF& y) const;
  /// this followed by next.
  Embedding then(const Embedding& next) const;

 private:
  Embedding(FieldPtr from, FieldPtr to, FF image);

  FieldPtr from_;
  FieldPtr to_;
  FF image_;
};

}  // namespace hahnroot
