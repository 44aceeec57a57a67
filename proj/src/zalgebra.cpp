#include "ringlab/zalgebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ringlab/errors.hpp"
#include "ringlab/rational.hpp"
#include "ringlab/upoly.hpp"

namespace ringlab {

namespace {

IntVec canon_with(const ZPresentation& p, IntVec v) {
  for (std::size_t i = 0; i < p.t; ++i) v[p.r + i] = mod_floor(v[p.r + i], p.d[i]);
  return v;
}

IntVec raw_mul(const ZPresentation& p, const IntVec& a, const IntVec& b) {
  const std::size_t m = p.m();
  IntVec out(m, Int(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (b[j] == 0) continue;
      Int c = a[i] * b[j];
      const IntVec& bij = p.mult[i][j];
      for (std::size_t k = 0; k < m; ++k)
        if (bij[k] != 0) out[k] += c * bij[k];
    }
  }
  return canon_with(p, std::move(out));
}

std::size_t bit_length(const Int& n) { return n <= 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace

PresentationReport validate_presentation(const ZPresentation& p) {
  PresentationReport rep;
  auto fail = [&](std::string law, std::vector<std::size_t> basis) {
    rep.valid = false;
    rep.violations.push_back({std::move(law), std::move(basis)});
  };
  const std::size_t m = p.m();
  bool shape_ok = p.d.size() == p.t && p.unity.size() == m && p.mult.size() == m;
  for (std::size_t i = 0; shape_ok && i < m; ++i) {
    if (p.mult[i].size() != m) shape_ok = false;
    for (std::size_t j = 0; shape_ok && j < p.mult[i].size(); ++j)
      if (p.mult[i][j].size() != m) shape_ok = false;
  }
  if (!p.names.empty() && p.names.size() != m) shape_ok = false;
  if (!shape_ok) {
    fail("shape", {});
    return rep;
  }
  for (std::size_t i = 0; i < p.t; ++i)
    if (p.d[i] < 2) fail("shape", {p.r + i});
  if (!rep.valid) return rep;

  std::vector<std::vector<IntVec>> c(m, std::vector<IntVec>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i][j] = canon_with(p, p.mult[i][j]);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (c[i][j] != c[j][i]) fail("commutativity", {i, j});

  // d_j * (b_i b_j) must vanish modulo Lambda for every torsion generator b_j.
  for (std::size_t jj = 0; jj < p.t; ++jj) {
    const std::size_t j = p.r + jj;
    for (std::size_t i = 0; i < m; ++i) {
      const IntVec& v = p.mult[i][j];
      bool ok = true;
      for (std::size_t k = 0; k < p.r; ++k)
        if (v[k] != 0) ok = false;
      for (std::size_t kk = 0; kk < p.t; ++kk)
        if ((p.d[jj] * v[p.r + kk]) % p.d[kk] != 0) ok = false;
      if (!ok) fail("compatibility", {i, j});
    }
  }
  if (!rep.valid) return rep;

  ZPresentation q = p;
  q.mult = c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        IntVec left = raw_mul(q, c[i][j], unit_vec(m, k));
        IntVec right = raw_mul(q, unit_vec(m, i), c[j][k]);
        if (left != right) fail("associativity", {i, j, k});
      }
  IntVec u = canon_with(p, p.unity);
  for (std::size_t j = 0; j < m; ++j)
    if (raw_mul(q, u, unit_vec(m, j)) != canon_with(p, unit_vec(m, j))) fail("unity", {j});
  return rep;
}

IntVec ZQuotient::project(const IntVec& x) const {
  return ring->canon(row_times(x, map, ring->m()));
}

Lattice ZQuotient::pull_back(const Lattice& target) const { return preimage(map, target); }

ZAlgebra::ZAlgebra(ZPresentation p) : p_(std::move(p)) {
  PresentationReport rep = validate_presentation(p_);
  if (!rep.valid) {
    std::ostringstream os;
    os << "presentation violates";
    std::size_t shown = 0;
    for (const auto& v : rep.violations) {
      if (shown++ == 4) {
        os << " ...";
        break;
      }
      os << " " << v.law << "(";
      for (std::size_t i = 0; i < v.basis.size(); ++i) os << (i ? "," : "") << v.basis[i];
      os << ")";
    }
    throw AlgebraError(os.str());
  }
  const std::size_t m = p_.m();
  for (auto& row : p_.mult)
    for (auto& v : row) v = canon_with(p_, v);
  p_.unity = canon_with(p_, p_.unity);
  IntMat rel;
  for (std::size_t i = 0; i < p_.t; ++i) {
    IntVec v = zero_vec(m);
    v[p_.r + i] = p_.d[i];
    rel.push_back(std::move(v));
  }
  lambda_ = Lattice::span(rel, m);
}

Int ZAlgebra::torsion_order() const {
  Int n = 1;
  for (const auto& d : p_.d) n *= d;
  return n;
}

Int ZAlgebra::exponent() const {
  Int e = 1;
  for (const auto& d : p_.d) e = lcm(e, d);
  return e;
}

IntVec ZAlgebra::canon(IntVec v) const { return canon_with(p_, std::move(v)); }

IntVec ZAlgebra::add(const IntVec& a, const IntVec& b) const {
  IntVec out(m());
  for (std::size_t i = 0; i < m(); ++i) out[i] = a[i] + b[i];
  return canon(std::move(out));
}

IntVec ZAlgebra::sub(const IntVec& a, const IntVec& b) const {
  IntVec out(m());
  for (std::size_t i = 0; i < m(); ++i) out[i] = a[i] - b[i];
  return canon(std::move(out));
}

IntVec ZAlgebra::neg(const IntVec& a) const { return sub(zero(), a); }

IntVec ZAlgebra::mul(const IntVec& a, const IntVec& b) const { return raw_mul(p_, a, b); }

IntVec ZAlgebra::pow(const IntVec& a, std::size_t k) const {
  IntVec r = one();
  IntVec b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

IntVec ZAlgebra::scale(const IntVec& a, const Int& k) const {
  IntVec out(a);
  for (auto& x : out) x *= k;
  return canon(std::move(out));
}

bool ZAlgebra::in_torsion(const IntVec& a) const {
  for (std::size_t i = 0; i < p_.r; ++i)
    if (a[i] != 0) return false;
  return true;
}

IntMat ZAlgebra::mult_matrix(const IntVec& f) const {
  IntMat out;
  out.reserve(m());
  for (std::size_t j = 0; j < m(); ++j) out.push_back(mul(f, unit_vec(m(), j)));
  return out;
}

Lattice ZAlgebra::ideal(const IntMat& gens) const {
  IntMat rows = lambda_.basis();
  for (const auto& g : gens)
    for (std::size_t j = 0; j < m(); ++j) rows.push_back(mul(g, unit_vec(m(), j)));
  return Lattice::span(rows, m());
}

bool ZAlgebra::is_ideal(const Lattice& l) const {
  if (l.dim() != m() || !lambda_.subset_of(l)) return false;
  for (const auto& row : l.basis())
    for (std::size_t j = 0; j < m(); ++j)
      if (!l.contains(mul(row, unit_vec(m(), j)))) return false;
  return true;
}

Lattice ZAlgebra::annihilator(const IntVec& f) const { return preimage(mult_matrix(f), lambda_); }

bool ZAlgebra::is_unit(const IntVec& f) const {
  if (is_zero_ring()) return true;
  return principal(f).is_full();
}

bool ZAlgebra::is_zero_divisor(const IntVec& f) const {
  if (is_zero_ring()) return false;
  return !(annihilator(f) == lambda_);
}

std::size_t ZAlgebra::nilpotency_bound() const {
  return std::max<std::size_t>(p_.r, 1) * (bit_length(torsion_order()) + 1);
}

bool ZAlgebra::is_nilpotent(const IntVec& f) const {
  // f^r lies in the torsion ideal iff f is nilpotent modulo torsion; the
  // torsion part is finite so repeated squaring settles the rest.
  IntVec g = pow(f, std::max<std::size_t>(p_.r, 1));
  if (!in_torsion(g)) return false;
  const std::size_t rounds = bit_length(torsion_order()) + 1;
  for (std::size_t i = 0; i < rounds && !is_zero(g); ++i) g = mul(g, g);
  return is_zero(g);
}

std::optional<std::size_t> ZAlgebra::nilpotency_index(const IntVec& f) const {
  if (!is_nilpotent(f)) return std::nullopt;
  IntVec g = f;
  for (std::size_t k = 1;; ++k) {
    if (is_zero(g)) return k;
    g = mul(g, f);
  }
}

std::vector<IntVec> ZAlgebra::torsion_elements() const {
  Int n = torsion_order();
  if (n > Int(static_cast<unsigned long>(kMaxTorsion)))
    throw CapacityError("torsion subgroup has " + n.get_str() + " elements");
  std::vector<IntVec> out;
  const std::size_t count = n.get_ui();
  out.reserve(count);
  IntVec v = zero_vec(m());
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(v);
    for (std::size_t i = 0; i < p_.t; ++i) {
      Int& c = v[p_.r + i];
      c += 1;
      if (c < p_.d[i]) break;
      c = 0;
    }
  }
  return out;
}

std::vector<IntVec> ZAlgebra::sample(int height) const {
  std::vector<IntVec> tors = torsion_elements();
  std::vector<IntVec> out;
  const std::size_t r = p_.r;
  auto value = [](std::size_t pos) -> long {
    // 0, 1, -1, 2, -2, ...
    long k = static_cast<long>((pos + 1) / 2);
    return pos % 2 == 1 ? k : -k;
  };
  for (int h = 0; h <= height; ++h) {
    const std::size_t width = 2 * static_cast<std::size_t>(h) + 1;
    std::vector<std::size_t> idx(r, 0);
    for (bool more = true; more;) {
      std::size_t norm = 0;
      for (auto i : idx) norm = std::max(norm, (i + 1) / 2);
      if (norm == static_cast<std::size_t>(h)) {
        for (const auto& t : tors) {
          IntVec v = t;
          for (std::size_t i = 0; i < r; ++i) v[i] = value(idx[i]);
          out.push_back(std::move(v));
        }
      }
      more = false;
      for (std::size_t i = r; i-- > 0;) {
        if (++idx[i] < width) {
          more = true;
          break;
        }
        idx[i] = 0;
      }
    }
  }
  return out;
}

RatVec ZAlgebra::rational_mul(const RatVec& a, const RatVec& b) const {
  const std::size_t r = p_.r;
  RatVec out(r, Rat(0));
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (std::size_t k = 0; k < r; ++k)
        if (p_.mult[i][j][k] != 0) out[k] += c * p_.mult[i][j][k];
    }
  }
  return out;
}

RatVec ZAlgebra::rational_one() const {
  RatVec out;
  for (std::size_t i = 0; i < p_.r; ++i) out.emplace_back(p_.unity[i]);
  return out;
}

IntMat ZAlgebra::rational_radical() const {
  const std::size_t r = p_.r;
  if (r == 0) return {};
  IntVec tr(r, Int(0));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) tr[k] += p_.mult[k][j][j];
  IntMat gram(r, IntVec(r, Int(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) gram[i][j] += p_.mult[i][j][k] * tr[k];
  return left_kernel(gram, r);
}

namespace {

// Candidate generators of A modulo its radical, in a fixed order.
std::vector<RatVec> generator_candidates(std::size_t r) {
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < r; ++j) {
    RatVec v(r, Rat(0));
    v[j] = 1;
    out.push_back(v);
  }
  for (long k = 2; k <= 9; ++k) {
    RatVec v(r, Rat(0));
    Rat c = 1;
    for (std::size_t j = 0; j < r; ++j) {
      v[j] = c;
      c *= k;
    }
    out.push_back(v);
  }
  std::mt19937_64 gen(0x1d3a5c7bULL);
  for (int trial = 0; trial < 48; ++trial) {
    RatVec v(r, Rat(0));
    const long span = 3 + trial / 8;
    for (std::size_t j = 0; j < r; ++j)
      v[j] = static_cast<long>(gen() % static_cast<unsigned long>(2 * span + 1)) - span;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<RatVec> ZAlgebra::rational_primitive_idempotents() const {
  const std::size_t r = p_.r;
  if (r == 0) return {};
  const std::size_t target = r - rational_radical().size();
  const RatVec unit = rational_one();
  for (const RatVec& a : generator_candidates(r)) {
    std::vector<RatVec> powers{unit};
    std::optional<RatVec> rel;
    while (!rel) {
      RatVec next = rational_mul(powers.back(), a);
      rel = solve_in_span(powers, next);
      if (!rel) powers.push_back(std::move(next));
    }
    // mu(x) = x^d - sum rel_i x^i
    const std::size_t d = powers.size();
    upoly::QPoly mu(d + 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) mu[i] = -(*rel)[i];
    mu[d] = 1;
    upoly::QPoly sqfree = upoly::divmod(mu, upoly::gcd(mu, upoly::derivative(mu))).first;
    if (static_cast<std::size_t>(upoly::degree(sqfree)) != target) continue;

    auto factors = upoly::factor(mu);
    if (factors.size() > kMaxPrimitive)
      throw CapacityError("rational algebra has " + std::to_string(factors.size()) +
                          " primitive idempotents");
    std::vector<RatVec> out;
    for (const auto& [q, mult] : factors) {
      upoly::QPoly pi{Rat(1)};
      for (int k = 0; k < mult; ++k) pi = upoly::mul(pi, q);
      upoly::QPoly co = upoly::divmod(mu, pi).first;
      upoly::ExtGcd eg = upoly::ext_gcd(pi, co);
      upoly::QPoly e = upoly::divmod(upoly::mul(eg.t, co), mu).second;
      RatVec v(r, Rat(0));
      for (std::size_t k = 0; k < e.size(); ++k)
        for (std::size_t j = 0; j < r; ++j) v[j] += e[k] * powers[k][j];
      out.push_back(std::move(v));
    }
    RatVec total(r, Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (rational_mul(out[i], out[i]) != out[i])
        throw VerificationError("rational idempotent is not idempotent");
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (!ringlab::is_zero(rational_mul(out[i], out[j])))
          throw VerificationError("rational idempotents are not orthogonal");
      for (std::size_t j = 0; j < r; ++j) total[j] += out[i][j];
    }
    if (total != unit) throw VerificationError("rational idempotents do not sum to 1");
    std::sort(out.begin(), out.end());
    return out;
  }
  throw VerificationError("no generator of the semisimple quotient found");
}

const std::vector<IntVec>& ZAlgebra::idempotents() const {
  std::call_once(idem_once_, [this] {
    std::vector<IntVec> tors = torsion_elements();
    std::vector<IntVec> lifts;
    if (p_.r == 0) {
      lifts.push_back(zero());
    } else {
      std::vector<RatVec> prim = rational_primitive_idempotents();
      const std::size_t s = prim.size();
      for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        RatVec e(p_.r, Rat(0));
        for (std::size_t i = 0; i < s; ++i)
          if (mask >> i & 1)
            for (std::size_t j = 0; j < p_.r; ++j) e[j] += prim[i][j];
        bool integral = true;
        IntVec v = zero();
        for (std::size_t j = 0; j < p_.r && integral; ++j) {
          if (e[j].get_den() != 1) integral = false;
          v[j] = e[j].get_num();
        }
        if (integral) lifts.push_back(std::move(v));
      }
    }
    std::vector<IntVec> out;
    for (const auto& base : lifts)
      for (const auto& t : tors) {
        IntVec x = add(base, t);
        if (is_idempotent(x)) out.push_back(std::move(x));
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    idempotents_ = std::move(out);
  });
  return idempotents_;
}

std::optional<IntVec> ZAlgebra::parse(const std::string& s0) const {
  std::string s;
  for (char c : s0)
    if (c != ' ') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') return std::nullopt;
  IntVec v;
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      Int x;
      if (tok.empty() || x.set_str(tok, 10) != 0) return std::nullopt;
      v.push_back(x);
    }
  }
  if (v.size() != m()) return std::nullopt;
  return canon(std::move(v));
}

ZQuotient ZAlgebra::quotient(const Lattice& ideal0) const {
  Lattice ideal = ideal0 + lambda_;
  const std::size_t mm = m();
  SmithForm sf = smith(ideal.basis(), mm);
  std::vector<std::size_t> free_cols, tors_cols;
  for (std::size_t i = 0; i < mm; ++i) {
    if (sf.invariants[i] == 0)
      free_cols.push_back(i);
    else if (sf.invariants[i] != 1)
      tors_cols.push_back(i);
  }
  std::vector<std::size_t> cols = free_cols;
  cols.insert(cols.end(), tors_cols.begin(), tors_cols.end());
  const std::size_t m2 = cols.size();

  ZQuotient q;
  q.map.assign(mm, IntVec(m2, Int(0)));
  for (std::size_t i = 0; i < mm; ++i)
    for (std::size_t k = 0; k < m2; ++k) q.map[i][k] = sf.q[i][cols[k]];
  for (std::size_t k = 0; k < m2; ++k) q.lift.push_back(sf.q_inv[cols[k]]);

  ZPresentation np;
  np.r = free_cols.size();
  np.t = tors_cols.size();
  for (auto c : tors_cols) np.d.push_back(sf.invariants[c]);
  auto project = [&](const IntVec& x) { return canon_with(np, row_times(x, q.map, m2)); };

  IntVec u = project(one());
  for (std::size_t k = 0; k < np.r; ++k) {
    if (u[k] >= 0) continue;
    for (std::size_t i = 0; i < mm; ++i) q.map[i][k] = -q.map[i][k];
    for (auto& x : q.lift[k]) x = -x;
  }
  np.unity = project(one());
  np.mult.assign(m2, std::vector<IntVec>(m2));
  for (std::size_t i = 0; i < m2; ++i)
    for (std::size_t j = 0; j < m2; ++j) np.mult[i][j] = project(mul(q.lift[i], q.lift[j]));
  q.ring = make_zalgebra(std::move(np));
  return q;
}

std::size_t ZAlgebra::finite_index(const IntVec& v) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < p_.t; ++i) {
    idx += mod_floor(v[p_.r + i], p_.d[i]).get_ui() * stride;
    stride *= p_.d[i].get_ui();
  }
  return idx;
}

FiniteRingPtr ZAlgebra::to_finite() const {
  if (p_.r != 0) throw InfiniteRing("algebra has free rank " + std::to_string(p_.r));
  if (torsion_order() > Int(static_cast<unsigned long>(kMaxFiniteSize)))
    throw CapacityError("finite algebra too large for tables");
  const std::size_t t = p_.t;
  std::vector<long> d(t);
  for (std::size_t i = 0; i < t; ++i) d[i] = p_.d[i].get_si();
  std::vector<IntVec> elems = torsion_elements();
  const std::size_t n = elems.size();
  std::vector<std::vector<long>> coords(n, std::vector<long>(t));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < t; ++i) coords[a][i] = elems[a][i].get_si();
  std::vector<std::vector<std::vector<long>>> c(t, std::vector<std::vector<long>>(t, std::vector<long>(t)));
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      for (std::size_t k = 0; k < t; ++k) c[i][j][k] = mod_floor(p_.mult[i][j][k], p_.d[k]).get_si();
  auto encode = [&](const std::vector<long>& v) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < t; ++i) {
      idx += static_cast<std::size_t>(v[i]) * stride;
      stride *= static_cast<std::size_t>(d[i]);
    }
    return idx;
  };
  FiniteRing::Tables tb;
  tb.size = n;
  tb.add.resize(n * n);
  tb.mul.resize(n * n);
  tb.labels.resize(n);
  std::vector<long> s(t), prod(t);
  for (std::size_t a = 0; a < n; ++a) {
    tb.labels[a] = format(elems[a]);
    for (std::size_t b = 0; b < n; ++b) {
      std::fill(prod.begin(), prod.end(), 0);
      for (std::size_t i = 0; i < t; ++i) {
        s[i] = (coords[a][i] + coords[b][i]) % d[i];
        if (coords[a][i] == 0) continue;
        for (std::size_t j = 0; j < t; ++j) {
          if (coords[b][j] == 0) continue;
          long ab = coords[a][i] * coords[b][j];
          for (std::size_t k = 0; k < t; ++k) prod[k] = (prod[k] + ab % d[k] * c[i][j][k]) % d[k];
        }
      }
      tb.add[a * n + b] = static_cast<std::uint16_t>(encode(s));
      tb.mul[a * n + b] = static_cast<std::uint16_t>(encode(prod));
    }
  }
  tb.zero = 0;
  tb.one = static_cast<Idx>(finite_index(p_.unity));
  return std::make_shared<const FiniteRing>(std::move(tb));
}

ZAlgebraPtr make_zalgebra(ZPresentation p) { return std::make_shared<const ZAlgebra>(std::move(p)); }

}  // namespace ringlab
