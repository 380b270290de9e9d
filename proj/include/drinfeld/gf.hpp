#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "drinfeld/common.hpp"
#include "drinfeld/fp_poly.hpp"

namespace drinfeld::gf {

class FieldCtx;

// An element of F_{p^n}, stored as its coordinate vector over F_p
// (low-degree-first, length n) with respect to the power basis of the
// field's defining modulus. Elements keep a reference to their context;
// mixing contexts in arithmetic throws.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, std::vector<std::uint32_t> digits)
      : ctx_(ctx), d_(std::move(digits)) {}

  const FieldCtx* ctx() const { return ctx_; }
  const std::vector<std::uint32_t>& digits() const { return d_; }
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inverse() const;
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Deterministic total order: compare coordinates from the top digit down,
  // i.e. by the value of sum d_i p^i.
  bool operator<(const FieldElem& o) const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::vector<std::uint32_t> d_;
  friend class FieldCtx;
};

// An explicit finite field F_{p^n} = F_p[T]/(modulus), with the modulus
// chosen as the first monic irreducible of degree n in the deterministic
// enumeration (increasing value of sum c_i p^i). Immutable once built.
//
// Fields small enough for full enumeration carry lazily built exp/log
// tables over a fixed multiplicative generator; larger fields fall back
// to polynomial arithmetic and reject enumeration-based queries.
class FieldCtx {
 public:
  FieldCtx(std::uint32_t p, std::uint32_t n);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return n_; }
  const fppoly::Poly& modulus() const { return modulus_; }

  bool cardinality_fits_u64() const { return fits_u64_; }
  std::uint64_t cardinality_u64() const;  // throws if it does not fit
  bool enumerable() const { return enumerable_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_digits(std::vector<std::uint32_t> digits) const;
  FieldElem from_u64(std::uint64_t value) const;  // value reduced mod p for n-digit decode
  // The class of T (for n == 1 this is 0; the prime field is generated by 1).
  FieldElem gen() const;
  // A fixed multiplicative generator (enumerable fields, or when q-1 fits u64).
  FieldElem mult_generator() const;

  // Index <-> element conversions, valid when the cardinality fits u64.
  std::uint64_t index_of(const FieldElem& e) const;
  FieldElem element_from_index(std::uint64_t idx) const;

  // Discrete log / exponentiation against the fixed generator (enumerable only).
  std::uint64_t log(const FieldElem& e) const;
  FieldElem exp(std::uint64_t k) const;
  std::uint64_t idx_log(std::uint64_t idx) const;
  std::uint64_t idx_exp(std::uint64_t k) const;

  // e^(p^t) for 0 <= t (reduced mod n internally).
  FieldElem frobenius_p_power(const FieldElem& e, std::uint64_t t) const;

  const std::vector<std::pair<std::uint64_t, int>>& group_order_factors() const;

  // Index arithmetic for enumerable fields (log/exp backed; additions work
  // on the digit encoding). Used in enumeration-heavy loops.
  std::uint64_t idx_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t idx_neg(std::uint64_t a) const;
  std::uint64_t idx_sub(std::uint64_t a, std::uint64_t b) const { return idx_add(a, idx_neg(b)); }
  std::uint64_t idx_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t idx_inv(std::uint64_t a) const;
  std::uint64_t idx_frob_p(std::uint64_t a, std::uint32_t t) const;  // a^(p^t)

 private:
  void ensure_tables() const;
  void ensure_generator() const;
  std::vector<std::uint32_t> mul_digits(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) const;

  std::uint32_t p_ = 0, n_ = 0;
  fppoly::Poly modulus_;
  bool fits_u64_ = false;
  bool enumerable_ = false;
  std::uint64_t card_u64_ = 0;

  mutable std::once_flag tables_once_, gen_once_;
  mutable std::vector<std::uint32_t> exp_;  // exp_[k] = index of g^k, size q-1
  mutable std::vector<std::uint32_t> log_;  // log_[idx], size q, log_[0] unused
  mutable fppoly::Poly generator_;
  mutable std::vector<std::pair<std::uint64_t, int>> order_factors_;

  friend class FieldElem;
};

// A ring embedding F_{p^m} -> F_{p^n} (m | n) fixing F_p, realized by the
// image of the source power basis. Instances come from the registry, which
// keeps the whole system of embeddings compatible under composition.
class Embedding {
 public:
  const FieldCtx* source() const { return src_; }
  const FieldCtx* target() const { return dst_; }

  FieldElem apply(const FieldElem& e) const;
  std::optional<FieldElem> preimage(const FieldElem& e) const;

 private:
  Embedding(const FieldCtx* src, const FieldCtx* dst, std::vector<FieldElem> basis_images)
      : src_(src), dst_(dst), basis_img_(std::move(basis_images)) {}
  const FieldCtx* src_;
  const FieldCtx* dst_;
  std::vector<FieldElem> basis_img_;  // images of 1, T, T^2, ..., T^{m-1}
  friend class Registry;
};

// Process-wide cache of field contexts and compatible embeddings.
class Registry {
 public:
  static Registry& instance();

  const FieldCtx* field(std::uint32_t p, std::uint32_t n);
  const Embedding* embedding(const FieldCtx* src, const FieldCtx* dst);

 private:
  Registry() = default;
  const Embedding* embedding_locked(const FieldCtx* src, const FieldCtx* dst);

  std::recursive_mutex mu_;
  std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>>> fields_;
  std::vector<std::pair<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>>> embs_;
};

// Spec-level operations.
const FieldCtx* build_field(std::uint32_t p, std::uint32_t n);
FieldElem embed(const FieldElem& e, const FieldCtx* target);
// e^(base_q^i); i may be negative since Frobenius is bijective.
FieldElem frobenius_power(const FieldElem& e, std::uint64_t base_q, std::int64_t i);
std::uint64_t mult_order(const FieldElem& e);
std::pair<bool, std::optional<FieldElem>> power_class_test(const FieldElem& e, std::uint64_t m);

// Verifies base_q = p^s for some s >= 0 and returns s.
std::uint32_t q_exponent_over_p(std::uint32_t p, std::uint64_t base_q);

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

}  // namespace drinfeld::gf
