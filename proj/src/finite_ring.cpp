#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::size_t log2_ceil(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

void check_capacity(std::size_t n, const char* what) {
  if (n > kMaxFiniteSize)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) + " elements exceeds the " +
                        std::to_string(kMaxFiniteSize) + "-element table budget");
}

std::string wrap(const std::string& s) {
  if (s.find_first_of(" +*") == std::string::npos) return s;
  return "(" + s + ")";
}

}  // namespace

FiniteRing::FiniteRing(Tables t)
    : n_(t.size),
      add_(std::move(t.add)),
      mul_(std::move(t.mul)),
      zero_(t.zero),
      one_(t.one),
      labels_(std::move(t.labels)) {
  neg_.assign(n_, 0);
  unit_.assign(n_, false);
  zero_divisor_.assign(n_, false);
  nil_index_.assign(n_, 0);
  for (Idx a = 0; a < n_; ++a) {
    for (Idx b = 0; b < n_; ++b) {
      if (add(a, b) == zero_) neg_[a] = b;
      Idx p = mul(a, b);
      if (p == one_) unit_[a] = true;
      if (p == zero_ && b != zero_) zero_divisor_[a] = true;
    }
  }
  const std::size_t cap = log2_ceil(n_) + 2;
  for (Idx a = 0; a < n_; ++a) {
    Idx x = a;
    for (std::size_t k = 1; k <= cap; ++k) {
      if (x == zero_) {
        nil_index_[a] = k;
        break;
      }
      x = mul(x, a);
    }
    if (mul(a, a) == a) idempotents_.push_back(a);
  }
  for (Idx a = 0; a < n_; ++a) by_label_.emplace(labels_[a], a);
}

Idx FiniteRing::pow(Idx a, std::size_t k) const {
  Idx r = one_;
  Idx b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

Idx FiniteRing::times(Idx a, std::size_t k) const {
  Idx r = zero_;
  Idx b = a;
  while (k) {
    if (k & 1) r = add(r, b);
    b = add(b, b);
    k >>= 1;
  }
  return r;
}

std::optional<Idx> FiniteRing::parse(const std::string& s) const {
  if (auto it = by_label_.find(s); it != by_label_.end()) return it->second;
  if (!s.empty() && s[0] == '#') {
    try {
      std::size_t k = std::stoul(s.substr(1));
      if (k < n_) return static_cast<Idx>(k);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::optional<std::string> FiniteRing::check_axioms(const Tables& t) {
  const std::size_t n = t.size;
  if (n == 0) return "ring must have at least one element";
  if (t.add.size() != n * n || t.mul.size() != n * n) return "table dimensions";
  if (t.labels.size() != n) return "label count";
  if (t.zero >= n || t.one >= n) return "zero/one out of range";
  auto A = [&](std::size_t a, std::size_t b) { return std::size_t{t.add[a * n + b]}; };
  auto M = [&](std::size_t a, std::size_t b) { return std::size_t{t.mul[a * n + b]}; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (A(a, b) >= n || M(a, b) >= n) return "table entry out of range";
  for (std::size_t a = 0; a < n; ++a) {
    if (A(a, t.zero) != a) return "additive identity";
    if (M(a, t.one) != a) return "multiplicative identity";
    bool has_neg = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) return "additive commutativity";
      if (M(a, b) != M(b, a)) return "commutativity";
      if (A(a, b) == t.zero) has_neg = true;
    }
    if (!has_neg) return "additive inverse";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) return "additive associativity";
        if (M(M(a, b), c) != M(a, M(b, c))) return "associativity";
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) return "distributivity";
      }
  std::vector<std::string> sorted = t.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "duplicate labels";
  return std::nullopt;
}

namespace finite {

namespace {

FiniteRing::Tables blank(std::size_t n) {
  FiniteRing::Tables t;
  t.size = n;
  t.add.assign(n * n, 0);
  t.mul.assign(n * n, 0);
  t.labels.resize(n);
  return t;
}

// Polynomial helpers over F_p with coefficients as small integers.
using SmallPoly = std::vector<std::size_t>;

bool divides_mod_p(const SmallPoly& g, SmallPoly f, std::size_t p) {
  // g monic
  while (f.size() >= g.size()) {
    std::size_t c = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
      f[shift + i] = (f[shift + i] + (p - c) * g[i]) % p;
    f.pop_back();
  }
  return std::all_of(f.begin(), f.end(), [](std::size_t x) { return x == 0; });
}

SmallPoly digits(std::size_t v, std::size_t p, std::size_t len) {
  SmallPoly d(len);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

}  // namespace

FiniteRingPtr zmod(std::size_t n) {
  if (n == 0) throw SchemaError("zmod(0) is Z, use the zalgebra backend");
  check_capacity(n, "zmod");
  auto t = blank(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
      t.mul[a * n + b] = static_cast<std::uint16_t>((a * b) % n);
    }
  }
  t.zero = 0;
  t.one = static_cast<Idx>(1 % n);
  return std::make_shared<const FiniteRing>(std::move(t));
}

FiniteRingPtr galois_field(std::size_t q) {
  std::size_t p = 0;
  for (std::size_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw SchemaError("gf: q must be a prime power >= 2");
  std::size_t k = 0;
  for (std::size_t r = q; r > 1; r /= p) {
    if (r % p != 0) throw SchemaError("gf: q must be a prime power");
    ++k;
  }
  check_capacity(q, "gf");
  // first monic irreducible of degree k
  SmallPoly modulus;
  for (std::size_t v = 0; v < q && modulus.empty(); ++v) {
    SmallPoly f = digits(v, p, k);
    f.push_back(1);
    bool irreducible = true;
    for (std::size_t d = 1; 2 * d <= k && irreducible; ++d) {
      std::size_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p;
      for (std::size_t w = 0; w < count; ++w) {
        SmallPoly g = digits(w, p, d);
        g.push_back(1);
        if (divides_mod_p(g, f, p)) {
          irreducible = false;
          break;
        }
      }
    }
    if (irreducible) modulus = f;
  }
  auto encode = [&](const SmallPoly& c) {
    std::size_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  };
  auto t = blank(q);
  for (std::size_t a = 0; a < q; ++a) {
    SmallPoly ca = digits(a, p, k);
    std::string lbl;
    for (std::size_t i = k; i-- > 0;) {
      if (ca[i] == 0) continue;
      std::string term;
      if (i == 0)
        term = std::to_string(ca[i]);
      else {
        term = (ca[i] == 1 ? "" : std::to_string(ca[i]) + "*") + "t";
        if (i > 1) term += "^" + std::to_string(i);
      }
      lbl += (lbl.empty() ? "" : "+") + term;
    }
    t.labels[a] = lbl.empty() ? "0" : lbl;
    for (std::size_t b = 0; b < q; ++b) {
      SmallPoly cb = digits(b, p, k);
      SmallPoly s(k), prod(2 * k, 0);
      for (std::size_t i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
        std::size_t c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < k; ++i)
          prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
      }
      prod.resize(k);
      t.add[a * q + b] = static_cast<std::uint16_t>(encode(s));
      t.mul[a * q + b] = static_cast<std::uint16_t>(encode(prod));
    }
  }
  t.zero = 0;
  t.one = 1;
  return std::make_shared<const FiniteRing>(std::move(t));
}

FiniteRingPtr product(const std::vector<FiniteRingPtr>& factors) {
  std::size_t n = 1;
  std::vector<std::size_t> strides;
  for (const auto& f : factors) {
    strides.push_back(n);
    n *= f->size();
    check_capacity(n, "product");
  }
  auto t = blank(n);
  std::vector<std::vector<Idx>> coords(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r = a;
    for (const auto& f : factors) {
      coords[a].push_back(static_cast<Idx>(r % f->size()));
      r /= f->size();
    }
    std::string lbl = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) lbl += ",";
      lbl += factors[i]->label(coords[a][i]);
    }
    t.labels[a] = lbl + ")";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t s = 0, p = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s += factors[i]->add(coords[a][i], coords[b][i]) * strides[i];
        p += factors[i]->mul(coords[a][i], coords[b][i]) * strides[i];
      }
      t.add[a * n + b] = static_cast<std::uint16_t>(s);
      t.mul[a * n + b] = static_cast<std::uint16_t>(p);
    }
  std::size_t zero = 0, one = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    zero += factors[i]->zero() * strides[i];
    one += factors[i]->one() * strides[i];
  }
  t.zero = static_cast<Idx>(zero);
  t.one = static_cast<Idx>(one);
  auto ring = std::make_shared<FiniteRing>(std::move(t));
  ring->set_layout({factors, strides});
  return ring;
}

FiniteRingPtr powerset(std::size_t ground) {
  if (ground > 12) throw CapacityError("powerset: ground set too large");
  const std::size_t n = std::size_t{1} << ground;
  auto t = blank(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string lbl = "{";
    bool first = true;
    for (std::size_t i = 0; i < ground; ++i)
      if (a >> i & 1) {
        lbl += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
      }
    t.labels[a] = lbl + "}";
    for (std::size_t b = 0; b < n; ++b) {
      t.add[a * n + b] = static_cast<std::uint16_t>(a ^ b);
      t.mul[a * n + b] = static_cast<std::uint16_t>(a & b);
    }
  }
  t.zero = 0;
  t.one = static_cast<Idx>(n - 1);
  return std::make_shared<const FiniteRing>(std::move(t));
}

namespace {

// Shared builder for base[x]/(f): `reduce` folds degree >= k terms.
FiniteRingPtr polynomial_ring(const FiniteRingPtr& base, std::size_t k,
                              const std::vector<Idx>* lower_coeffs, const char* what) {
  const std::size_t m = base->size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= m;
    check_capacity(n, what);
  }
  auto t = blank(n);
  std::vector<std::vector<Idx>> coeff(n, std::vector<Idx>(k));
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t r = a;
    for (std::size_t i = 0; i < k; ++i) {
      coeff[a][i] = static_cast<Idx>(r % m);
      r /= m;
    }
    std::string lbl;
    for (std::size_t i = 0; i < k; ++i) {
      Idx c = coeff[a][i];
      if (c == base->zero()) continue;
      std::string term;
      if (i == 0)
        term = base->label(c);
      else {
        term = c == base->one() ? "" : wrap(base->label(c)) + "*";
        term += "x";
        if (i > 1) term += "^" + std::to_string(i);
      }
      lbl += (lbl.empty() ? "" : " + ") + term;
    }
    t.labels[a] = lbl.empty() ? base->label(base->zero()) : lbl;
  }
  auto encode = [&](const std::vector<Idx>& c) {
    std::size_t v = 0;
    for (std::size_t i = k; i-- > 0;) v = v * m + c[i];
    return v;
  };
  std::vector<Idx> prod(2 * k), s(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) s[i] = base->add(coeff[a][i], coeff[b][i]);
      std::fill(prod.begin(), prod.end(), base->zero());
      for (std::size_t i = 0; i < k; ++i) {
        if (coeff[a][i] == base->zero()) continue;
        for (std::size_t j = 0; j < k; ++j)
          prod[i + j] = base->add(prod[i + j], base->mul(coeff[a][i], coeff[b][j]));
      }
      if (lower_coeffs) {
        for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
          Idx c = prod[deg];
          if (c == base->zero()) continue;
          prod[deg] = base->zero();
          for (std::size_t i = 0; i < k; ++i)
            prod[deg - k + i] = base->sub(prod[deg - k + i], base->mul(c, (*lower_coeffs)[i]));
        }
      }
      std::vector<Idx> low(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k));
      t.add[a * n + b] = static_cast<std::uint16_t>(encode(s));
      t.mul[a * n + b] = static_cast<std::uint16_t>(encode(low));
    }
  std::vector<Idx> z(k, base->zero()), o(k, base->zero());
  if (k > 0) o[0] = base->one();
  t.zero = static_cast<Idx>(encode(z));
  t.one = static_cast<Idx>(encode(o));
  return std::make_shared<const FiniteRing>(std::move(t));
}

}  // namespace

FiniteRingPtr truncation(const FiniteRingPtr& base, std::size_t k) {
  if (k == 0) throw SchemaError("truncation order must be >= 1");
  return polynomial_ring(base, k, nullptr, "truncation");
}

FiniteRingPtr poly_quotient(const FiniteRingPtr& base, const std::vector<Idx>& lower_coeffs) {
  if (lower_coeffs.empty()) throw SchemaError("poly_quotient needs a monic polynomial of degree >= 1");
  for (Idx c : lower_coeffs)
    if (c >= base->size()) throw SchemaError("poly_quotient coefficient out of range");
  return polynomial_ring(base, lower_coeffs.size(), &lower_coeffs, "poly_quotient");
}

FiniteRingPtr quotient(const FiniteRingPtr& ring, const IdxSet& ideal) {
  const std::size_t n = ring->size();
  constexpr Idx kUnset = ~Idx{0};
  std::vector<Idx> proj(n, kUnset);
  std::vector<Idx> reps;
  for (Idx x = 0; x < n; ++x) {
    if (proj[x] != kUnset) continue;
    Idx c = static_cast<Idx>(reps.size());
    reps.push_back(x);
    for (Idx i : ideal) proj[ring->add(x, i)] = c;
  }
  const std::size_t m = reps.size();
  auto t = blank(m);
  for (std::size_t a = 0; a < m; ++a) {
    t.labels[a] = "[" + ring->label(reps[a]) + "]";
    for (std::size_t b = 0; b < m; ++b) {
      t.add[a * m + b] = static_cast<std::uint16_t>(proj[ring->add(reps[a], reps[b])]);
      t.mul[a * m + b] = static_cast<std::uint16_t>(proj[ring->mul(reps[a], reps[b])]);
    }
  }
  t.zero = proj[ring->zero()];
  t.one = proj[ring->one()];
  auto q = std::make_shared<FiniteRing>(std::move(t));
  q->set_quotient_link({ring, std::move(proj), std::move(reps)});
  return q;
}

FiniteRingPtr from_tables(FiniteRing::Tables t) {
  if (t.labels.empty() && t.size > 0) {
    t.labels.resize(t.size);
    for (std::size_t i = 0; i < t.size; ++i) t.labels[i] = std::to_string(i);
  }
  check_capacity(t.size, "table");
  if (auto bad = FiniteRing::check_axioms(t)) throw AlgebraError("table ring violates " + *bad);
  return std::make_shared<const FiniteRing>(std::move(t));
}

std::vector<Idx> split(const FiniteRing& product, Idx a) {
  const auto& layout = product.layout();
  if (!layout) throw RingMismatch("ring is not a product");
  std::vector<Idx> out;
  std::size_t r = a;
  for (const auto& f : layout->factors) {
    out.push_back(static_cast<Idx>(r % f->size()));
    r /= f->size();
  }
  return out;
}

Idx join(const FiniteRing& product, const std::vector<Idx>& coords) {
  const auto& layout = product.layout();
  if (!layout || coords.size() != layout->factors.size()) throw RingMismatch("ring is not a product");
  std::size_t v = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) v += coords[i] * layout->strides[i];
  return static_cast<Idx>(v);
}

}  // namespace finite

}  // namespace ringlab
