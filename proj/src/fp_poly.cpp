#include "drinfeld/fp_poly.hpp"

#include <cstddef>

#include "drinfeld/common.hpp"

namespace drinfeld::fppoly {

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on machine ints; p prime, a != 0 mod p.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InternalError("mod_inverse: not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0u) + (i < b.size() ? b[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  normalize(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t s = (i < a.size() ? a[i] : 0u) + p - (i < b.size() ? b[i] : 0u);
    out[i] = static_cast<std::uint32_t>(s % p);
  }
  normalize(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + ai * b[j]) % p);
    }
  }
  normalize(out);
  return out;
}

static void mod_inplace(Poly& r, const Poly& g, std::uint32_t p, Poly* quo) {
  const int dg = degree(g);
  if (dg < 0) throw UsageError("division by zero polynomial");
  const std::uint32_t lead_inv = mod_inverse(g.back(), p);
  while (degree(r) >= dg) {
    const int k = degree(r) - dg;
    const std::uint64_t c = (std::uint64_t)r.back() * lead_inv % p;
    if (quo) {
      if ((int)quo->size() < k + 1) quo->resize(k + 1, 0);
      (*quo)[k] = static_cast<std::uint32_t>(((*quo)[k] + c) % p);
    }
    for (int i = 0; i <= dg; ++i) {
      std::uint64_t sub_v = c * g[i] % p;
      r[i + k] = static_cast<std::uint32_t>((r[i + k] + p - sub_v) % p);
    }
    normalize(r);
  }
}

Poly mod(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r = f;
  mod_inplace(r, g, p, nullptr);
  return r;
}

Poly divquo(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly r = f, q;
  mod_inplace(r, g, p, &q);
  normalize(q);
  return q;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint32_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>((std::uint64_t)c * inv % p);
  }
  return a;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus, std::uint32_t p) {
  Poly result{1};
  Poly b = mod(base, modulus, p);
  while (e) {
    if (e & 1) result = mod(mul(result, b, p), modulus, p);
    b = mod(mul(b, b, p), modulus, p);
    e >>= 1;
  }
  return result;
}

Poly pow_p_mod(const Poly& f, const Poly& modulus, std::uint32_t p) {
  if (f.empty()) return {};
  Poly spread((f.size() - 1) * p + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    // c^p = c in F_p
    spread[i * p] = f[i];
  }
  return mod(spread, modulus, p);
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  // A monic f of degree n is irreducible iff it shares no root with any
  // F_{p^k}, k <= n/2: scan gcd(X^{p^k} - X, f) with an incremental Frobenius.
  const Poly x{0, 1};
  Poly cur = mod(x, f, p);
  for (int k = 1; k <= n / 2; ++k) {
    cur = pow_p_mod(cur, f, p);
    Poly g = gcd(sub(cur, mod(x, f, p), p), f, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t n) {
  if (n == 0) throw UsageError("degree must be positive");
  if (n == 1) return Poly{0, 1};  // T
  // Enumerate low coefficient vectors by increasing base-p value.
  std::vector<std::uint32_t> c(n, 0);
  for (;;) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    // Next vector by increasing value of sum c_i p^i (carry from c_0 up).
    std::uint32_t i = 0;
    while (i < n && ++c[i] == p) c[i++] = 0;
    if (i == n) throw InternalError("no irreducible found");
  }
}

}  // namespace drinfeld::fppoly
