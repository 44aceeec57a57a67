#include "ringlab/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "ringlab/errors.hpp"

namespace ringlab::upoly {

QPoly to_q(const ZPoly& p) { return to_rat(p); }

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw AlgebraError("polynomial division by zero");
  QPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  QPoly q(r.size() - b.size() + 1);
  const Rat lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rat c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

QPoly monic(QPoly a) {
  trim(a);
  if (a.empty()) return a;
  Rat inv = 1 / a.back();
  for (auto& x : a) x *= inv;
  return a;
}

QPoly gcd(const QPoly& a0, const QPoly& b0) {
  QPoly a = a0, b = b0;
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

QPoly derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  trim(d);
  return d;
}

ExtGcd ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b, s0{Rat(1)}, s1{}, t0{}, t1{Rat(1)};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(q, s1));
    QPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  Rat inv = 1 / r0.back();
  for (auto& x : r0) x *= inv;
  for (auto& x : s0) x *= inv;
  for (auto& x : t0) x *= inv;
  return {r0, s0, t0};
}

ZPoly primitive_part(const QPoly& p) {
  QPoly t = p;
  trim(t);
  if (t.empty()) return {};
  Int den = 1;
  for (const auto& x : t) den = lcm(den, x.get_den());
  ZPoly z;
  Int content = 0;
  for (const auto& x : t) {
    Rat s = x * den;
    z.push_back(s.get_num());
    content = gcd(content, z.back());
  }
  if (z.back() < 0) content = -content;
  for (auto& x : z) x /= content;
  return z;
}

namespace {

// ---- polynomials over F_p, p an odd prime that fits in 31 bits ----
using i64 = std::int64_t;
using ModPoly = std::vector<i64>;

struct Fp {
  i64 p;
  i64 norm(i64 a) const {
    a %= p;
    return a < 0 ? a + p : a;
  }
  i64 mul(i64 a, i64 b) const { return static_cast<i64>((static_cast<__int128>(a) * b) % p); }
  i64 pow(i64 a, i64 e) const {
    i64 r = 1;
    a = norm(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  i64 inv(i64 a) const { return pow(a, p - 2); }

  void trim(ModPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  ModPoly reduce(const ZPoly& f) const {
    ModPoly r;
    r.reserve(f.size());
    Int pp = p;
    for (const auto& c : f) r.push_back(mod_floor(c, pp).get_si());
    trim(r);
    return r;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j])) % p;
    trim(r);
    return r;
  }
  std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b) const {
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    ModPoly q(a.size() - b.size() + 1, 0);
    i64 li = inv(b.back());
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      i64 c = mul(a.back(), li);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = norm(a[shift + i] - mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(ModPoly a) const {
    trim(a);
    if (a.empty()) return a;
    i64 li = inv(a.back());
    for (auto& x : a) x = mul(x, li);
    return a;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b == 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    i64 li = inv(r0.back());
    for (auto& x : s0) x = mul(x, li);
    for (auto& x : t0) x = mul(x, li);
    return {s0, t0};
  }
  ModPoly powmod(ModPoly base, const Int& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], static_cast<i64>(i) % p);
    trim(d);
    return d;
  }
};

// Monic irreducible factors of a monic squarefree polynomial over F_p.
std::vector<ModPoly> factor_mod_p(const Fp& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> dd;  // product of all factors of degree d
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, Int(F.p), f);
    ModPoly g = F.gcd(f, F.sub(h, x));
    if (g.size() > 1) {
      dd.emplace_back(g, d);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) dd.emplace_back(F.monic(f), static_cast<int>(f.size()) - 1);

  std::mt19937_64 rng(0x5eed1234ULL);
  std::vector<ModPoly> out;
  std::vector<std::pair<ModPoly, int>> work = dd;
  while (!work.empty()) {
    auto [g, d] = work.back();
    work.pop_back();
    if (static_cast<int>(g.size()) - 1 == d) {
      out.push_back(F.monic(g));
      continue;
    }
    Int pd = 1;
    for (int i = 0; i < d; ++i) pd *= F.p;
    Int e = (pd - 1) / 2;
    for (;;) {
      ModPoly a(g.size() - 1);
      for (auto& c : a) c = static_cast<i64>(rng() % static_cast<std::uint64_t>(F.p));
      F.trim(a);
      if (a.size() <= 1) continue;
      ModPoly b = F.sub(F.powmod(a, e, g), ModPoly{1});
      ModPoly s = F.gcd(g, b);
      if (s.size() > 1 && s.size() < g.size()) {
        work.emplace_back(s, d);
        work.emplace_back(F.monic(F.divmod(g, s).first), d);
        break;
      }
    }
  }
  return out;
}

ZPoly symmetric(const ZPoly& f, const Int& m) {
  ZPoly r;
  r.reserve(f.size());
  Int half = m / 2;
  for (const auto& c : f) {
    Int x = mod_floor(c, m);
    if (x > half) x -= m;
    r.push_back(x);
  }
  trim(r);
  return r;
}

ZPoly lift_mod(const ModPoly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<long>(c));
  return r;
}

// Exact quotient of f by monic g over Z, if g divides f.
std::optional<ZPoly> exact_div_monic(const ZPoly& f, const ZPoly& g) {
  ZPoly r = f;
  if (r.size() < g.size()) return std::nullopt;
  ZPoly q(r.size() - g.size() + 1, Int(0));
  while (!r.empty() && r.size() >= g.size()) {
    std::size_t shift = r.size() - g.size();
    Int c = r.back();
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] -= c * g[i];
    trim(r);
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

// Linear Hensel lifting of a monic factorisation target == g*h (mod p) to
// modulus p^k. target is known modulo p^k.
std::pair<ZPoly, ZPoly> hensel_pair(const Fp& F, const ZPoly& target, const ModPoly& g0,
                                    const ModPoly& h0, int k) {
  auto [s, t] = F.bezout(g0, h0);
  ZPoly g = lift_mod(g0), h = lift_mod(h0);
  Int p = F.p;
  Int q = p;
  Int pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  for (int step = 1; step < k; ++step) {
    ZPoly gh = mul(g, h);
    ZPoly diff(std::max(target.size(), gh.size()), Int(0));
    for (std::size_t i = 0; i < target.size(); ++i) diff[i] += target[i];
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    for (auto& c : diff) {
      c = mod_floor(c, pk);
      c /= q;  // exact: target == g*h mod q
    }
    ModPoly e = F.reduce(diff);
    ModPoly dg = F.rem(F.mul(t, e), g0);
    ModPoly dh = F.rem(F.mul(s, e), h0);
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += q * dg[i];
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += q * dh[i];
    q *= p;
    g = symmetric(g, q);
    h = symmetric(h, q);
    // keep the leading 1 (symmetric() may not touch it, monic by construction)
  }
  return {g, h};
}

bool is_small_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
  const int n = degree(f);
  if (n <= 1) return {f};

  // Prime with f squarefree mod p.
  Fp F{3};
  for (long cand = 3;; cand += 2) {
    if (!is_small_prime(cand)) continue;
    F = Fp{cand};
    ModPoly fp = F.reduce(f);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (F.gcd(fp, F.derivative(fp)).size() == 1) break;
    if (cand > 100000) throw AlgebraError("no good prime for factorisation");
  }
  std::vector<ModPoly> local = factor_mod_p(F, F.reduce(f));
  if (local.size() == 1) return {f};
  std::sort(local.begin(), local.end());

  Int maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
  Int bound = (Int(1) << n) * Int(n + 1) * maxc * 2 + 1;
  int k = 1;
  Int pk = F.p;
  while (pk <= bound) {
    pk *= F.p;
    ++k;
  }

  // Sequential lifting: peel one local factor at a time.
  std::vector<ZPoly> lifted;
  ZPoly rest = f;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    ModPoly others{1};
    for (std::size_t j = i + 1; j < local.size(); ++j) others = F.mul(others, local[j]);
    auto [g, h] = hensel_pair(F, rest, local[i], others, k);
    lifted.push_back(g);
    rest = h;
  }
  lifted.push_back(rest);

  // Recombination.
  std::vector<ZPoly> out;
  ZPoly remaining = f;
  std::vector<bool> used(lifted.size(), false);
  std::size_t size = 1;
  while (2 * size <= static_cast<std::size_t>(std::count(used.begin(), used.end(), false))) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (!used[i]) idx.push_back(i);
    bool found = false;
    std::vector<bool> pick(idx.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      ZPoly g{Int(1)};
      for (std::size_t i = 0; i < idx.size(); ++i)
        if (pick[i]) g = symmetric(mul(g, lifted[idx[i]]), pk);
      if (auto q = exact_div_monic(remaining, g)) {
        out.push_back(g);
        remaining = *q;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (pick[i]) used[idx[i]] = true;
        found = true;
        break;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++size;
  }
  if (degree(remaining) >= 1) out.push_back(remaining);
  return out;
}

}  // namespace

std::vector<ZPoly> factor_squarefree(const ZPoly& f0) {
  ZPoly f = f0;
  trim(f);
  if (degree(f) < 1) throw AlgebraError("factor_squarefree needs a polynomial of degree >= 1");
  const int n = degree(f);
  const Int a = f.back();
  // F(x) = a^(n-1) f(x / a) is monic with integer coefficients.
  ZPoly big(f.size());
  Int pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    big[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)] * pw;
    pw *= a;
  }
  big[static_cast<std::size_t>(n)] = 1;
  std::vector<ZPoly> out;
  for (const auto& g : factor_monic_squarefree(big)) {
    // g(a x), then primitive part.
    QPoly scaled;
    Int apw = 1;
    for (const auto& c : g) {
      scaled.emplace_back(c * apw);
      apw *= a;
    }
    out.push_back(primitive_part(scaled));
  }
  std::sort(out.begin(), out.end(), [](const ZPoly& x, const ZPoly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

std::vector<std::pair<QPoly, int>> factor(const QPoly& p0) {
  QPoly p = monic(p0);
  std::vector<std::pair<QPoly, int>> out;
  if (degree(p) < 1) return out;
  QPoly sqfree = divmod(p, gcd(p, derivative(p))).first;
  for (const auto& z : factor_squarefree(primitive_part(sqfree))) {
    QPoly q = monic(to_q(z));
    int mult = 0;
    QPoly rest = p;
    for (;;) {
      auto [quo, rem] = divmod(rest, q);
      if (!rem.empty()) break;
      ++mult;
      rest = quo;
    }
    out.emplace_back(q, mult);
  }
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + p[i].get_str() + ")";
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace ringlab::upoly
