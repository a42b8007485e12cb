#pragma once

// Exact scalar arithmetic: Q, cyclotomic fields Q(zeta_n), prime fields F_p
// and extensions F_{p^k}.  Every other layer of the library is generic over
// a Field handle; elements are immutable values and never round.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gq {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrime : FieldError {
  using FieldError::FieldError;
};
struct NoRootOfUnity : FieldError {
  using FieldError::FieldError;
};
struct ReducibleModulus : FieldError {
  using FieldError::FieldError;
};
struct MixedFields : FieldError {
  using FieldError::FieldError;
};

enum class FieldKind { Rationals, Cyclotomic, Prime, Extension };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  int n = 0;                      // cyclotomic order
  std::uint64_t p = 0;            // characteristic
  int k = 1;                      // extension degree
  std::vector<std::uint64_t> modulus;  // monic, coeffs low-to-high (optional)
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
 public:
  FieldElement() = default;

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_one() const;

  std::string str() const;

  // Representation access (used by serialization and mod-p compilation).
  const std::vector<mpq_class>& rat_coeffs() const { return qc_; }
  const std::vector<std::uint64_t>& mod_coeffs() const { return pc_; }

 private:
  friend class Field;
  FieldPtr field_;
  std::vector<mpq_class> qc_;        // char 0: residue coeffs, length = degree
  std::vector<std::uint64_t> pc_;    // char p: residue coeffs, length = degree
};

class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr make(const FieldSpec& spec);
  static FieldPtr rationals();
  static FieldPtr cyclotomic(int n);
  static FieldPtr prime(std::uint64_t p);
  static FieldPtr extension(std::uint64_t p, int k, std::uint64_t seed = 1);

  const FieldSpec& spec() const { return spec_; }
  FieldKind kind() const { return spec_.kind; }
  std::uint64_t characteristic() const;
  // Degree of the field over its prime subfield (phi(n) for cyclotomics).
  int degree() const { return deg_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long v) const;
  FieldElement from_rational(const mpq_class& v) const;
  // Generator of the residue ring: zeta_n for cyclotomic, t for extension.
  FieldElement generator() const;
  bool has_root_of_unity(int n) const;
  // Primitive n-th root of unity; throws NoRootOfUnity if absent.
  FieldElement root_of_unity(int n) const;
  FieldElement random_element(std::mt19937_64& rng) const;
  // Small nonzero "generic" scalar, |value| <= bound, for seeded parameters.
  FieldElement random_small_nonzero(std::mt19937_64& rng, int bound = 20) const;

  bool same(const Field& o) const;

  // Element arithmetic (dispatched from FieldElement).
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  bool eq(const FieldElement& a, const FieldElement& b) const;
  bool is_zero(const FieldElement& a) const;
  std::string to_string(const FieldElement& a) const;

  // Ring homomorphism into F_q fixing the prime field and sending the
  // generator to `image_of_gen`; used when reducing char-0 data mod p.
  FieldElement map_from(const FieldElement& a, const FieldElement& image_of_gen) const;

 private:
  Field() = default;
  FieldElement wrap(std::vector<mpq_class> qc) const;
  FieldElement wrap(std::vector<std::uint64_t> pc) const;
  void reduce_char0(std::vector<mpq_class>& c) const;
  void reduce_charp(std::vector<std::uint64_t>& c) const;

  FieldSpec spec_;
  int deg_ = 1;
  // char 0: modulus polynomial (monic, integer coeffs, low-to-high), empty for Q.
  std::vector<mpz_class> mod0_;
  // char p: modulus polynomial (monic), empty for prime field.
  std::vector<std::uint64_t> modp_;
};

// n-th cyclotomic polynomial, integer coefficients low-to-high.
std::vector<mpz_class> cyclotomic_polynomial(int n);
bool is_prime_u64(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

}  // namespace gq
