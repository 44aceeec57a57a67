#include "ringlab/construct.hpp"

#include "ringlab/catalog.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ideals.hpp"

namespace ringlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("ring document is missing \"") + key + "\"");
  return j.at(key);
}

std::size_t count(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SchemaError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

Int integer(const Json& v) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Int out;
    if (out.set_str(v.get<std::string>(), 10) != 0) throw SchemaError("bad integer \"" + v.get<std::string>() + "\"");
    return out;
  }
  throw SchemaError("expected an integer");
}

IntVec int_vec(const Json& v, std::size_t len, const char* what) {
  if (!v.is_array() || v.size() != len)
    throw SchemaError(std::string(what) + " must be an array of length " + std::to_string(len));
  IntVec out;
  for (const Json& x : v) out.push_back(integer(x));
  return out;
}

std::string name_or(const Json& j, std::string fallback) {
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw SchemaError("\"name\" must be a string");
    return j.at("name").get<std::string>();
  }
  return fallback;
}

RingHandle finite_part(const Subject& s, const char* kind) {
  if (s.ring.is_algebra()) {
    if (!s.ring.algebra().is_finite())
      throw SchemaError(std::string(kind) + " needs finite rings; " + s.ring.name() + " is infinite");
    return RingHandle::from_table(s.ring.algebra().to_finite(), Backend::table, s.ring.name());
  }
  return s.ring;
}

std::string wrap(const std::string& s) {
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

ZPresentation zalgebra_payload(const Json& j) {
  ZPresentation p;
  p.r = count(j, "r");
  p.t = count(j, "t");
  const std::size_t m = p.m();
  p.d = int_vec(field(j, "d"), p.t, "\"d\"");
  p.unity = int_vec(field(j, "unity"), m, "\"unity\"");
  const Json& mult = field(j, "mult");
  if (!mult.is_array() || mult.size() != m) throw SchemaError("\"mult\" must be an m x m table of m-vectors");
  p.mult.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!mult[i].is_array() || mult[i].size() != m) throw SchemaError("\"mult\" must be an m x m table of m-vectors");
    for (std::size_t k = 0; k < m; ++k) p.mult[i].push_back(int_vec(mult[i][k], m, "structure constant"));
  }
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || b.size() != m) throw SchemaError("\"basis\" must name every basis vector");
    for (const Json& x : b) {
      if (!x.is_string()) throw SchemaError("basis names must be strings");
      p.names.push_back(x.get<std::string>());
    }
  }
  return p;
}

}  // namespace

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("ring document is not valid JSON: ") + e.what());
  }
}

Subject construct_subject(const Json& j) {
  const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>() : "";

  if (kind == "zmod") {
    const std::size_t n = count(j, "n");
    if (n == 0) throw SchemaError("zmod needs n >= 1");
    return {RingHandle::from_table(finite::zmod(n), Backend::zmod, name_or(j, "Z/" + std::to_string(n))), nullptr};
  }
  if (kind == "gf") {
    const std::size_t q = count(j, "q");
    return {RingHandle::from_table(finite::galois_field(q), Backend::table, name_or(j, "F" + std::to_string(q))), nullptr};
  }
  if (kind == "powerset") {
    const std::size_t g = count(j, "ground");
    return {RingHandle::from_table(finite::powerset(g), Backend::powerset, name_or(j, "P(" + std::to_string(g) + ")")),
            nullptr};
  }
  if (kind == "table") {
    const Json& add = field(j, "add");
    const Json& mul = field(j, "mul");
    FiniteRing::Tables t;
    t.size = add.size();
    if (!add.is_array() || !mul.is_array() || mul.size() != t.size) throw SchemaError("table sizes disagree");
    for (const Json* tab : {&add, &mul})
      for (const Json& row : *tab) {
        if (!row.is_array() || row.size() != t.size) throw SchemaError("tables must be square");
        for (const Json& x : row) {
          if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<std::size_t>() >= t.size)
            throw SchemaError("table entry out of range");
          (tab == &add ? t.add : t.mul).push_back(static_cast<std::uint16_t>(x.get<std::size_t>()));
        }
      }
    t.zero = static_cast<Idx>(count(j, "zero"));
    t.one = static_cast<Idx>(count(j, "one"));
    if (j.contains("labels")) {
      for (const Json& l : j.at("labels")) {
        if (!l.is_string()) throw SchemaError("labels must be strings");
        t.labels.push_back(l.get<std::string>());
      }
    } else {
      for (std::size_t i = 0; i < t.size; ++i) t.labels.push_back("#" + std::to_string(i));
    }
    return {RingHandle::from_table(finite::from_tables(std::move(t)), Backend::table, name_or(j, "table")), nullptr};
  }
  if (kind == "product") {
    const Json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) throw SchemaError("product needs a non-empty \"factors\" array");
    std::vector<Subject> parts;
    for (const Json& f : fs) parts.push_back(construct_subject(f));
    std::string name;
    for (std::size_t i = 0; i < parts.size(); ++i) name += (i ? " x " : "") + wrap(parts[i].ring.name());
    const bool algebra = std::any_of(parts.begin(), parts.end(), [](const Subject& s) {
      return s.ring.is_algebra() && !s.ring.algebra().is_finite();
    });
    if (algebra) {
      std::vector<ZPresentation> pres;
      for (const Subject& s : parts) {
        if (!s.ring.is_algebra()) throw SchemaError("products with an infinite factor need zalgebra factors throughout");
        pres.push_back(s.ring.algebra().presentation());
      }
      return {RingHandle::from_algebra(make_zalgebra(presentation_product(pres)), name_or(j, name)), nullptr};
    }
    std::vector<FiniteRingPtr> tables;
    for (const Subject& s : parts) tables.push_back(finite_part(s, "product").table_ptr());
    return {RingHandle::from_table(finite::product(tables), Backend::product, name_or(j, name)), nullptr};
  }
  if (kind == "quotient") {
    const Subject parent = construct_subject(field(j, "ring"));
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) throw SchemaError("\"generators\" must be an array of element strings");
    std::vector<Element> elems;
    for (const Json& g : gens) {
      if (!g.is_string()) throw SchemaError("generators must be element strings");
      elems.push_back(parent.ring.parse(g.get<std::string>()));
    }
    const Ideal I = ideal_from_generators(parent.ring, elems);
    RingHandle q = quotient_ring(parent.ring, I);
    if (j.contains("name")) {
      q = q.is_algebra() ? RingHandle::from_algebra(q.algebra_ptr(), name_or(j, ""))
                         : RingHandle::from_table(q.table_ptr(), Backend::quotient, name_or(j, ""));
    }
    return {q, nullptr};
  }
  if (kind == "truncation") {
    const RingHandle base = finite_part(construct_subject(field(j, "base")), "truncation");
    const std::size_t k = count(j, "k");
    std::size_t size = 1;
    for (std::size_t i = 0; i < k; ++i)
      if ((size *= base.table().size()) > kMaxFiniteSize) throw CapacityError("truncation too large");
    return {RingHandle::from_table(finite::truncation(base.table_ptr(), k), Backend::table,
                                   name_or(j, wrap(base.name()) + "[x]/(x^" + std::to_string(k) + ")")),
            nullptr};
  }
  if (kind == "poly_quotient") {
    const RingHandle base = finite_part(construct_subject(field(j, "base")), "poly_quotient");
    const Json& cs = field(j, "coeffs");
    if (!cs.is_array() || cs.empty()) throw SchemaError("\"coeffs\" must list c_0 .. c_{k-1}");
    std::vector<Idx> coeffs;
    std::string poly = "x^" + std::to_string(cs.size());
    for (std::size_t i = cs.size(); i-- > 0;) {
      if (!cs[i].is_string()) throw SchemaError("coefficients must be element strings");
      const Element c = base.parse(cs[i].get<std::string>());
      if (!base.is_zero(c))
        poly += " + " + base.format(c) + (i == 0 ? "" : i == 1 ? "*x" : "*x^" + std::to_string(i));
    }
    for (const Json& c : cs) coeffs.push_back(base.parse(c.get<std::string>()).idx);
    std::size_t size = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if ((size *= base.table().size()) > kMaxFiniteSize) throw CapacityError("polynomial quotient too large");
    return {RingHandle::from_table(finite::poly_quotient(base.table_ptr(), coeffs), Backend::table,
                                   name_or(j, wrap(base.name()) + "[x]/(" + poly + ")")),
            nullptr};
  }
  if (kind == "zalgebra") {
    return {RingHandle::from_algebra(make_zalgebra(zalgebra_payload(j)), name_or(j, "zalgebra")), nullptr};
  }
  if (kind == "ultra") {
    const Json& fs = field(j, "factors");
    if (!fs.is_array() || fs.empty()) throw SchemaError("ultra needs a non-empty \"factors\" array");
    std::vector<RingHandle> factors;
    for (const Json& f : fs) factors.push_back(finite_part(construct_subject(f), "ultra"));
    std::vector<std::vector<std::size_t>> subsets;
    if (j.contains("ideal")) {
      for (const Json& s : j.at("ideal")) {
        std::vector<std::size_t> subset;
        for (const Json& x : s) {
          if (!x.is_number_integer()) throw SchemaError("ideal members must be integers");
          subset.push_back(x.get<std::size_t>());
        }
        subsets.push_back(std::move(subset));
      }
    }
    auto U = std::make_shared<UltraRing>(ultra_ring(factors, SetIdeal::generated(factors.size(), subsets)));
    if (j.contains("name")) U->quotient = RingHandle::from_table(U->quotient.table_ptr(), Backend::quotient, name_or(j, ""));
    return {U->quotient, U};
  }
  if (kind == "catalog") {
    const Json& n = field(j, "name");
    if (!n.is_string()) throw SchemaError("catalog name must be a string");
    return construct_subject(catalog_get(n.get<std::string>()).doc);
  }
  throw SchemaError("unknown ring kind \"" + kind + "\"");
}

RingHandle construct_ring(const Json& doc) { return construct_subject(doc).ring; }

ZPresentation zmod_presentation(const Int& n) {
  if (n < 1) throw SchemaError("zmod needs n >= 1");
  ZPresentation p;
  if (n == 1) return p;  // the zero ring
  p.t = 1;
  p.d = {n};
  p.unity = {Int(1)};
  p.mult = {{{Int(1)}}};
  return p;
}

ZPresentation polynomial_presentation(const Int& n, const IntVec& lower) {
  const std::size_t k = lower.size();
  if (k == 0) throw SchemaError("polynomial presentation needs degree >= 1");
  if (n < 0 || n == 1) throw SchemaError("coefficient ring must be Z or Z/n with n >= 2");
  ZPresentation p;
  (n == 0 ? p.r : p.t) = k;
  if (n != 0) p.d.assign(k, n);
  p.unity = unit_vec(k, 0);
  // Coordinates of x^e for e < 2k - 1.
  std::vector<IntVec> power(2 * k - 1, zero_vec(k));
  for (std::size_t e = 0; e < k; ++e) power[e][e] = 1;
  for (std::size_t e = k; e < 2 * k - 1; ++e) {
    // x^e = x * x^(e-1); shift, then fold the x^k term.
    const IntVec& prev = power[e - 1];
    IntVec next = zero_vec(k);
    for (std::size_t i = 0; i + 1 < k; ++i) next[i + 1] = prev[i];
    const Int top = prev[k - 1];
    for (std::size_t i = 0; i < k; ++i) next[i] -= top * lower[i];
    if (n != 0)
      for (Int& c : next) c = mod_floor(c, n);
    power[e] = std::move(next);
  }
  p.mult.assign(k, std::vector<IntVec>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p.mult[i][j] = power[i + j];
  return p;
}

ZPresentation presentation_product(const std::vector<ZPresentation>& factors) {
  ZPresentation p;
  for (const auto& f : factors) {
    p.r += f.r;
    p.t += f.t;
  }
  const std::size_t m = p.m();
  // New position of coordinate c of factor i.
  std::vector<std::vector<std::size_t>> pos(factors.size());
  std::size_t free_at = 0, tors_at = p.r;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t c = 0; c < factors[i].m(); ++c) pos[i].push_back(c < factors[i].r ? free_at++ : tors_at++);
  p.d.resize(p.t);
  p.unity = zero_vec(m);
  p.mult.assign(m, std::vector<IntVec>(m, zero_vec(m)));
  p.names.resize(m);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const ZPresentation& f = factors[i];
    for (std::size_t c = 0; c < f.m(); ++c) {
      if (c >= f.r) p.d[pos[i][c] - p.r] = f.d[c - f.r];
      p.unity[pos[i][c]] = f.unity[c];
      p.names[pos[i][c]] = (f.names.empty() ? "b" + std::to_string(c + 1) : f.names[c]) + "_" + std::to_string(i + 1);
      for (std::size_t c2 = 0; c2 < f.m(); ++c2)
        for (std::size_t k = 0; k < f.m(); ++k) p.mult[pos[i][c]][pos[i][c2]][pos[i][k]] = f.mult[c][c2][k];
    }
  }
  return p;
}

Json presentation_to_json(const ZPresentation& p) {
  auto vec = [](const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) {
      if (x.fits_slong_p())
        a.push_back(x.get_si());
      else
        a.push_back(x.get_str());
    }
    return a;
  };
  Json mult = Json::array();
  for (const auto& row : p.mult) {
    Json r = Json::array();
    for (const IntVec& v : row) r.push_back(vec(v));
    mult.push_back(std::move(r));
  }
  Json j = {{"kind", "zalgebra"}, {"r", p.r}, {"t", p.t}, {"d", vec(p.d)}, {"unity", vec(p.unity)}, {"mult", mult}};
  if (!p.names.empty()) j["basis"] = p.names;
  return j;
}

}  // namespace ringlab
