#include "drinfeld/gf.hpp"

#include <algorithm>
#include <numeric>

#include "drinfeld/linalg.hpp"

namespace drinfeld {

Limits& limits() {
  static Limits l;
  return l;
}

}  // namespace drinfeld

namespace drinfeld::gf {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  std::uint64_t x = 2, y = 2, c = 1, d = 1;
  auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
  while (true) {
    x = 2;
    y = 2;
    d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t q : primes) {
    if (!out.empty() && out.back().first == q)
      ++out.back().second;
    else
      out.emplace_back(q, 1);
  }
  return out;
}

std::uint32_t q_exponent_over_p(std::uint32_t p, std::uint64_t base_q) {
  std::uint32_t s = 0;
  std::uint64_t v = 1;
  while (v < base_q) {
    v *= p;
    ++s;
  }
  if (v != base_q) throw UsageError("q is not a power of the field characteristic");
  return s;
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  if (!is_prime_u64(p)) throw UsageError("characteristic must be prime");
  if (n == 0) throw UsageError("extension degree must be positive");
  if (n > limits().max_degree_over_fp) throw LimitError("extension degree exceeds the configured cap");
  modulus_ = fppoly::smallest_irreducible(p, n);
  unsigned __int128 card = 1;
  bool fits = true;
  for (std::uint32_t i = 0; i < n; ++i) {
    card *= p;
    if (card > (unsigned __int128)UINT64_MAX) {
      fits = false;
      break;
    }
  }
  fits_u64_ = fits;
  card_u64_ = fits ? static_cast<std::uint64_t>(card) : 0;
  enumerable_ = fits && card_u64_ <= limits().max_table_elems;
}

std::uint64_t FieldCtx::cardinality_u64() const {
  if (!fits_u64_) throw LimitError("cardinality does not fit in 64 bits");
  return card_u64_;
}

FieldElem FieldCtx::zero() const { return FieldElem(this, std::vector<std::uint32_t>(n_, 0)); }

FieldElem FieldCtx::one() const {
  std::vector<std::uint32_t> d(n_, 0);
  d[0] = 1;
  return FieldElem(this, std::move(d));
}

FieldElem FieldCtx::from_digits(std::vector<std::uint32_t> digits) const {
  if (digits.size() != n_) digits.resize(n_, 0);
  for (auto& c : digits) c %= p_;
  return FieldElem(this, std::move(digits));
}

FieldElem FieldCtx::from_u64(std::uint64_t value) const {
  std::vector<std::uint32_t> d(n_, 0);
  d[0] = static_cast<std::uint32_t>(value % p_);
  return FieldElem(this, std::move(d));
}

FieldElem FieldCtx::gen() const {
  std::vector<std::uint32_t> d(n_, 0);
  if (n_ > 1) d[1] = 1;
  return FieldElem(this, std::move(d));
}

std::uint64_t FieldCtx::index_of(const FieldElem& e) const {
  if (!fits_u64_) throw LimitError("index_of requires u64-sized cardinality");
  std::uint64_t idx = 0;
  for (std::uint32_t i = n_; i-- > 0;) idx = idx * p_ + e.d_[i];
  return idx;
}

FieldElem FieldCtx::element_from_index(std::uint64_t idx) const {
  if (!fits_u64_) throw LimitError("element_from_index requires u64-sized cardinality");
  if (idx >= card_u64_) throw UsageError("element index out of range");
  std::vector<std::uint32_t> d(n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = static_cast<std::uint32_t>(idx % p_);
    idx /= p_;
  }
  return FieldElem(this, std::move(d));
}

std::vector<std::uint32_t> FieldCtx::mul_digits(const std::vector<std::uint32_t>& a,
                                                const std::vector<std::uint32_t>& b) const {
  fppoly::Poly fa(a.begin(), a.end()), fb(b.begin(), b.end());
  fppoly::normalize(fa);
  fppoly::normalize(fb);
  fppoly::Poly prod = fppoly::mod(fppoly::mul(fa, fb, p_), modulus_, p_);
  prod.resize(n_, 0);
  return prod;
}

const std::vector<std::pair<std::uint64_t, int>>& FieldCtx::group_order_factors() const {
  ensure_generator();
  return order_factors_;
}

void FieldCtx::ensure_generator() const {
  std::call_once(gen_once_, [this] {
    if (!fits_u64_) throw LimitError("multiplicative generator requires u64-sized cardinality");
    const std::uint64_t N = card_u64_ - 1;
    order_factors_ = factor_u64(N);
    for (std::uint64_t idx = 1; idx < card_u64_; ++idx) {
      fppoly::Poly cand;
      {
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < n_ && v; ++i) {
          cand.resize(i + 1, 0);
          cand[i] = static_cast<std::uint32_t>(v % p_);
          v /= p_;
        }
        fppoly::normalize(cand);
      }
      bool ok = true;
      for (const auto& [r, _] : order_factors_) {
        fppoly::Poly t = fppoly::powmod(cand, N / r, modulus_, p_);
        if (t == fppoly::Poly{1}) {
          ok = false;
          break;
        }
      }
      if (ok) {
        generator_ = cand;
        return;
      }
    }
    throw InternalError("no multiplicative generator found");
  });
}

FieldElem FieldCtx::mult_generator() const {
  ensure_generator();
  std::vector<std::uint32_t> d(generator_.begin(), generator_.end());
  d.resize(n_, 0);
  return FieldElem(this, std::move(d));
}

void FieldCtx::ensure_tables() const {
  std::call_once(tables_once_, [this] {
    if (!enumerable_) throw LimitError("field exceeds the enumeration bound; no log tables");
    ensure_generator();
    const std::uint64_t q = card_u64_;
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    fppoly::Poly cur{1};
    for (std::uint64_t k = 0; k < q - 1; ++k) {
      std::uint64_t idx = 0;
      for (std::size_t i = cur.size(); i-- > 0;) idx = idx * p_ + cur[i];
      exp_[k] = static_cast<std::uint32_t>(idx);
      log_[idx] = static_cast<std::uint32_t>(k);
      cur = fppoly::mod(fppoly::mul(cur, generator_, p_), modulus_, p_);
    }
    if (cur != fppoly::Poly{1}) throw InternalError("generator order mismatch");
  });
}

std::uint64_t FieldCtx::idx_log(std::uint64_t idx) const {
  ensure_tables();
  if (idx == 0 || idx >= card_u64_) throw UsageError("log of zero or out-of-range index");
  return log_[idx];
}

std::uint64_t FieldCtx::idx_exp(std::uint64_t k) const {
  ensure_tables();
  return exp_[k % (card_u64_ - 1)];
}

std::uint64_t FieldCtx::log(const FieldElem& e) const { return idx_log(index_of(e)); }

FieldElem FieldCtx::exp(std::uint64_t k) const { return element_from_index(idx_exp(k)); }

std::uint64_t FieldCtx::idx_add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += mult * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint64_t FieldCtx::idx_neg(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += mult * ((p_ - a % p_) % p_);
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint64_t FieldCtx::idx_mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  ensure_tables();
  const std::uint64_t N = card_u64_ - 1;
  return exp_[(log_[a] + (std::uint64_t)log_[b]) % N];
}

std::uint64_t FieldCtx::idx_inv(std::uint64_t a) const {
  if (a == 0) throw UsageError("inverse of zero");
  ensure_tables();
  const std::uint64_t N = card_u64_ - 1;
  return exp_[(N - log_[a]) % N];
}

std::uint64_t FieldCtx::idx_frob_p(std::uint64_t a, std::uint32_t t) const {
  if (a == 0) return 0;
  ensure_tables();
  const std::uint64_t N = card_u64_ - 1;
  std::uint64_t mult = 1 % N;
  for (std::uint32_t i = 0; i < t % n_; ++i) mult = mult * p_ % N;
  return exp_[mulmod_u64(log_[a], mult, N)];
}

FieldElem FieldCtx::frobenius_p_power(const FieldElem& e, std::uint64_t t) const {
  t %= n_;
  fppoly::Poly f(e.d_.begin(), e.d_.end());
  fppoly::normalize(f);
  for (std::uint64_t i = 0; i < t; ++i) f = fppoly::pow_p_mod(f, modulus_, p_);
  f.resize(n_, 0);
  return FieldElem(this, std::vector<std::uint32_t>(f.begin(), f.end()));
}

// ---------------------------------------------------------------------------
// FieldElem

static void check_same_ctx(const FieldElem& a, const FieldElem& b) {
  if (a.ctx() != b.ctx())
    throw UsageError("cross-context field arithmetic; embed elements into a common field first");
}

bool FieldElem::is_zero() const {
  for (auto c : d_)
    if (c) return false;
  return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_ctx(*this, o);
  std::vector<std::uint32_t> out(d_.size());
  const std::uint32_t p = ctx_->p();
  for (std::size_t i = 0; i < d_.size(); ++i) out[i] = (d_[i] + o.d_[i]) % p;
  return FieldElem(ctx_, std::move(out));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_ctx(*this, o);
  std::vector<std::uint32_t> out(d_.size());
  const std::uint32_t p = ctx_->p();
  for (std::size_t i = 0; i < d_.size(); ++i) out[i] = (d_[i] + p - o.d_[i]) % p;
  return FieldElem(ctx_, std::move(out));
}

FieldElem FieldElem::operator-() const {
  std::vector<std::uint32_t> out(d_.size());
  const std::uint32_t p = ctx_->p();
  for (std::size_t i = 0; i < d_.size(); ++i) out[i] = (p - d_[i]) % p;
  return FieldElem(ctx_, std::move(out));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_ctx(*this, o);
  return FieldElem(ctx_, ctx_->mul_digits(d_, o.d_));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw UsageError("inverse of zero");
  // Extended Euclid in F_p[T] against the modulus.
  const std::uint32_t p = ctx_->p();
  fppoly::Poly r0 = ctx_->modulus(), r1(d_.begin(), d_.end());
  fppoly::normalize(r1);
  fppoly::Poly t0{}, t1{1};
  while (!r1.empty()) {
    fppoly::Poly q = fppoly::divquo(r0, r1, p);
    fppoly::Poly r2 = fppoly::sub(r0, fppoly::mul(q, r1, p), p);
    fppoly::Poly t2 = fppoly::sub(t0, fppoly::mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (fppoly::degree(r0) != 0) throw InternalError("modulus not irreducible?");
  const std::uint32_t inv = fppoly::mod_inverse(r0[0], p);
  for (auto& c : t0) c = static_cast<std::uint32_t>((std::uint64_t)c * inv % p);
  t0.resize(ctx_->degree(), 0);
  return FieldElem(ctx_, std::vector<std::uint32_t>(t0.begin(), t0.end()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(std::int64_t e) const {
  if (is_zero()) {
    if (e > 0) return ctx_->zero();
    if (e == 0) return ctx_->one();
    throw UsageError("negative power of zero");
  }
  FieldElem base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  FieldElem acc = ctx_->one();
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool FieldElem::operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && d_ == o.d_; }

bool FieldElem::operator<(const FieldElem& o) const {
  check_same_ctx(*this, o);
  for (std::size_t i = d_.size(); i-- > 0;) {
    if (d_[i] != o.d_[i]) return d_[i] < o.d_[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Embedding

FieldElem Embedding::apply(const FieldElem& e) const {
  if (e.ctx() != src_) throw UsageError("embedding applied to element of a different field");
  FieldElem acc = dst_->zero();
  const std::uint32_t p = src_->p();
  for (std::size_t i = 0; i < e.digits().size(); ++i) {
    const std::uint32_t c = e.digits()[i];
    if (!c) continue;
    std::vector<std::uint32_t> scaled = basis_img_[i].digits();
    for (auto& x : scaled) x = static_cast<std::uint32_t>((std::uint64_t)x * c % p);
    acc = acc + FieldElem(dst_, std::move(scaled));
  }
  return acc;
}

std::optional<FieldElem> Embedding::preimage(const FieldElem& e) const {
  if (e.ctx() != dst_) throw UsageError("preimage of element from a different field");
  linalg::MatFp m(dst_->degree(), src_->degree(), src_->p());
  for (std::size_t j = 0; j < basis_img_.size(); ++j) {
    for (std::size_t i = 0; i < dst_->degree(); ++i) m.at(i, j) = basis_img_[j].digits()[i];
  }
  auto x = linalg::solve(std::move(m), e.digits());
  if (!x) return std::nullopt;
  FieldElem cand = src_->from_digits(*x);
  if (apply(cand) != e) return std::nullopt;
  return cand;
}

// ---------------------------------------------------------------------------
// Registry

Registry& Registry::instance() {
  static Registry r;
  return r;
}

const FieldCtx* Registry::field(std::uint32_t p, std::uint32_t n) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  for (auto& [key, ctx] : fields_) {
    if (key.first == p && key.second == n) return ctx.get();
  }
  fields_.emplace_back(std::make_pair(p, n), std::make_unique<FieldCtx>(p, n));
  return fields_.back().second.get();
}

namespace {

std::vector<std::uint32_t> divisors_of(std::uint32_t m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d != m / d) out.push_back(m / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Evaluate an F_p[T] polynomial at a field element via Horner.
FieldElem eval_fp_poly(const fppoly::Poly& f, const FieldElem& x) {
  const FieldCtx* ctx = x.ctx();
  FieldElem acc = ctx->zero();
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * x;
    std::vector<std::uint32_t> d(ctx->degree(), 0);
    d[0] = f[i];
    acc = acc + FieldElem(ctx, std::move(d));
  }
  return acc;
}

// All roots in dst of the degree-m modulus of the subfield F_{p^m},
// found by enumerating the subfield (kernel of Frobenius^m - id).
std::vector<FieldElem> subfield_roots(const FieldCtx* src, const FieldCtx* dst) {
  const std::uint32_t p = dst->p();
  const std::uint32_t n = dst->degree();
  const std::uint32_t m = src->degree();
  unsigned __int128 subcard = 1;
  for (std::uint32_t i = 0; i < m; ++i) subcard *= p;
  if (subcard > limits().max_table_elems)
    throw LimitError("embedding source field too large to enumerate");

  // Matrix of x -> x^{p^m} on dst over F_p.
  fppoly::Poly t{0, 1};
  for (std::uint32_t i = 0; i < m; ++i) t = fppoly::pow_p_mod(t, dst->modulus(), p);
  linalg::MatFp mat(n, n, p);
  fppoly::Poly cur{1};
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < cur.size(); ++i) mat.at(i, j) = cur[i];
    // Subtract identity for the fixed-point equation.
    mat.at(j, j) = (mat.at(j, j) + p - 1) % p;
    cur = fppoly::mod(fppoly::mul(cur, t, p), dst->modulus(), p);
  }
  auto basis = linalg::null_space(std::move(mat));
  if (basis.size() != m) throw InternalError("subfield dimension mismatch");

  std::vector<FieldElem> roots;
  std::vector<std::uint32_t> coeff(m, 0);
  const std::uint64_t total = static_cast<std::uint64_t>(subcard);
  for (std::uint64_t it = 0; it < total; ++it) {
    std::vector<std::uint32_t> digs(n, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (!coeff[i]) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        digs[j] = static_cast<std::uint32_t>((digs[j] + (std::uint64_t)coeff[i] * basis[i][j]) % p);
    }
    FieldElem cand(dst, std::move(digs));
    if (eval_fp_poly(src->modulus(), cand).is_zero()) roots.push_back(cand);
    std::uint32_t i = 0;
    while (i < m && ++coeff[i] == p) coeff[i++] = 0;
  }
  std::sort(roots.begin(), roots.end());
  if (roots.size() != m) throw InternalError("wrong number of subfield roots");
  return roots;
}

// Evaluate the digit vector of a source element as a polynomial in r.
FieldElem eval_digits_at(const std::vector<std::uint32_t>& digits, const FieldElem& r) {
  const FieldCtx* ctx = r.ctx();
  FieldElem acc = ctx->zero();
  for (std::size_t i = digits.size(); i-- > 0;) {
    acc = acc * r;
    std::vector<std::uint32_t> d(ctx->degree(), 0);
    d[0] = digits[i];
    acc = acc + FieldElem(ctx, std::move(d));
  }
  return acc;
}

}  // namespace

const Embedding* Registry::embedding(const FieldCtx* src, const FieldCtx* dst) {
  std::lock_guard<std::recursive_mutex> lk(mu_);
  return embedding_locked(src, dst);
}

const Embedding* Registry::embedding_locked(const FieldCtx* src, const FieldCtx* dst) {
  if (src->p() != dst->p()) throw UsageError("embedding between different characteristics");
  if (dst->degree() % src->degree() != 0)
    throw UsageError("source degree does not divide target degree");
  for (auto& [key, e] : embs_) {
    if (key.first == src && key.second == dst) return e.get();
  }
  const std::uint32_t m = src->degree();
  std::vector<FieldElem> basis_img;
  if (src == dst) {
    FieldElem cur = dst->one();
    for (std::uint32_t i = 0; i < m; ++i) {
      basis_img.push_back(cur);
      cur = cur * dst->gen();
    }
  } else if (m == 1) {
    basis_img.push_back(dst->one());
  } else {
    // Sub-embeddings first, so the chosen root can be made compatible with
    // every intermediate field (processing divisors in increasing order
    // always leaves at least one admissible root).
    struct Constraint {
      FieldElem src_image;  // image in src of the subfield generator
      FieldElem dst_image;  // required image in dst
    };
    std::vector<Constraint> constraints;
    for (std::uint32_t k : divisors_of(m)) {
      if (k == 1 || k == m) continue;
      const FieldCtx* mid = field(src->p(), k);
      const Embedding* km = embedding_locked(mid, src);
      const Embedding* kn = embedding_locked(mid, dst);
      constraints.push_back({km->apply(mid->gen()), kn->apply(mid->gen())});
    }
    const Embedding* into_self = nullptr;
    (void)into_self;
    for (const FieldElem& r : subfield_roots(src, dst)) {
      bool ok = true;
      for (const auto& c : constraints) {
        if (eval_digits_at(c.src_image.digits(), r) != c.dst_image) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      FieldElem cur = dst->one();
      for (std::uint32_t i = 0; i < m; ++i) {
        basis_img.push_back(cur);
        cur = cur * r;
      }
      break;
    }
    if (basis_img.empty()) throw InternalError("no compatible embedding root");
  }
  embs_.emplace_back(std::make_pair(src, dst),
                     std::unique_ptr<Embedding>(new Embedding(src, dst, std::move(basis_img))));
  return embs_.back().second.get();
}

// ---------------------------------------------------------------------------
// Spec-level operations

const FieldCtx* build_field(std::uint32_t p, std::uint32_t n) {
  return Registry::instance().field(p, n);
}

FieldElem embed(const FieldElem& e, const FieldCtx* target) {
  if (e.ctx() == target) return e;
  return Registry::instance().embedding(e.ctx(), target)->apply(e);
}

FieldElem frobenius_power(const FieldElem& e, std::uint64_t base_q, std::int64_t i) {
  const std::uint32_t s = q_exponent_over_p(e.ctx()->p(), base_q);
  const std::int64_t n = e.ctx()->degree();
  std::int64_t t = (static_cast<std::int64_t>(s) * i) % n;
  if (t < 0) t += n;
  return e.ctx()->frobenius_p_power(e, static_cast<std::uint64_t>(t));
}

std::uint64_t mult_order(const FieldElem& e) {
  if (e.is_zero()) throw UsageError("multiplicative order of zero");
  const FieldCtx* ctx = e.ctx();
  std::uint64_t t = ctx->cardinality_u64() - 1;
  for (const auto& [r, _] : ctx->group_order_factors()) {
    while (t % r == 0 && e.pow(static_cast<std::int64_t>(t / r)) == ctx->one()) t /= r;
  }
  return t;
}

std::pair<bool, std::optional<FieldElem>> power_class_test(const FieldElem& e, std::uint64_t m) {
  if (e.is_zero()) throw UsageError("power class of zero");
  if (m == 0) throw UsageError("power class modulus must be positive");
  const FieldCtx* ctx = e.ctx();
  const std::uint64_t N = ctx->cardinality_u64() - 1;
  const std::uint64_t g = std::gcd(m, N);
  const bool ok = e.pow(static_cast<std::int64_t>(N / g)) == ctx->one();
  if (!ok) return {false, std::nullopt};
  if (!ctx->enumerable()) return {true, std::nullopt};
  // Solve m*s = log(e) mod N for s against the fixed generator.
  const std::uint64_t t = ctx->log(e);
  if (t % g != 0) throw InternalError("power class log inconsistency");
  const std::uint64_t Ng = N / g;
  std::uint64_t minv = 1;
  {
    // Inverse of m/g modulo N/g via extended Euclid.
    std::int64_t a = static_cast<std::int64_t>((m / g) % Ng), b = static_cast<std::int64_t>(Ng);
    std::int64_t x0 = 1, x1 = 0;
    while (b) {
      std::int64_t q = a / b;
      std::int64_t tmp = a - q * b;
      a = b;
      b = tmp;
      tmp = x0 - q * x1;
      x0 = x1;
      x1 = tmp;
    }
    if (a != 1) throw InternalError("power class inverse failure");
    minv = static_cast<std::uint64_t>(((x0 % (std::int64_t)Ng) + (std::int64_t)Ng) % (std::int64_t)Ng);
  }
  const std::uint64_t s = mulmod_u64((t / g) % Ng, minv, Ng);
  FieldElem root = ctx->exp(s);
  return {true, root};
}

}  // namespace drinfeld::gf
