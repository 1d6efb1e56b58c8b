#include "hopfkit/serialize.hpp"

#include "hopfkit/error.hpp"

namespace hopfkit {

namespace {

[[noreturn]] void violation(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, "at " + (path.empty() ? std::string(".") : path) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) violation(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) violation(path + "." + key, "missing field");
  return *it;
}

const Json& array_of(const Json& j, std::size_t size, const std::string& path) {
  if (!j.is_array()) violation(path, "expected an array");
  if (j.size() != size) violation(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  return j;
}

std::uint64_t unsigned_of(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) violation(path, "expected an integer");
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  const auto v = j.get<std::int64_t>();
  if (v < 0) violation(path, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

}  // namespace

Json ring_to_json(const Ring& ring) {
  Json j;
  j["p"] = ring.p();
  j["n"] = ring.precision();
  j["m"] = ring.degree();
  j["modulus"] = ring.modulus();
  return j;
}

Ring ring_from_json(const Json& j, const std::string& path) {
  const auto p = unsigned_of(field(j, "p", path), path + ".p");
  const auto n = unsigned_of(field(j, "n", path), path + ".n");
  const auto m = unsigned_of(field(j, "m", path), path + ".m");
  std::optional<std::vector<std::uint64_t>> modulus;
  if (j.contains("modulus")) {
    const Json& mj = j["modulus"];
    if (!mj.is_array()) violation(path + ".modulus", "expected an array");
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0; i < mj.size(); ++i) v.push_back(unsigned_of(mj[i], at(path + ".modulus", i)));
    modulus = std::move(v);
  }
  if (n > 64 || m > 64) violation(path, "precision or degree out of range");
  return Ring::make(p, static_cast<unsigned>(n), static_cast<unsigned>(m), modulus);
}

Json element_to_json(const Ring& ring, const RingElement& a) {
  Json j = Json::array();
  for (unsigned i = 0; i < ring.degree(); ++i) j.push_back(a.c[i]);
  return j;
}

RingElement element_from_json(const Ring& ring, const Json& j, const std::string& path) {
  array_of(j, ring.degree(), path);
  RingElement a;
  for (unsigned i = 0; i < ring.degree(); ++i) {
    const auto v = unsigned_of(j[i], at(path, i));
    if (v >= ring.characteristic())
      violation(at(path, i), "coefficient " + std::to_string(v) + " outside [0, " +
                                 std::to_string(ring.characteristic()) + ")");
    a.c[i] = static_cast<Coeff>(v);
  }
  return a;
}

Json multimap_to_json(const MultiMap& f) {
  Json j;
  j["in"] = f.arity_in();
  j["out"] = f.arity_out();
  Json c = Json::array();
  for (const auto& a : f.coeffs()) c.push_back(element_to_json(f.ring(), a));
  j["coeffs"] = std::move(c);
  return j;
}

MultiMap multimap_from_json(const Ring& ring, std::size_t dim_in, std::size_t dim_out, const Json& j,
                            const std::string& path) {
  const auto ai = unsigned_of(field(j, "in", path), path + ".in");
  const auto ao = unsigned_of(field(j, "out", path), path + ".out");
  if (ai > 8 || ao > 8) violation(path, "arity out of range");
  MultiMap f(ring, dim_in, dim_out, static_cast<unsigned>(ai), static_cast<unsigned>(ao));
  const Json& c = array_of(field(j, "coeffs", path), f.coeffs().size(), path + ".coeffs");
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) f.coeffs()[k] = element_from_json(ring, c[k], at(path + ".coeffs", k));
  return f;
}

Json presentation_to_json(const HopfPresentation& h) {
  const std::size_t n = h.dim;
  const Ring& r = h.ring;
  Json j;
  j["ring"] = ring_to_json(r);
  j["dim"] = n;
  Json m = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(element_to_json(r, h.mult.at(k, a * n + b)));
      row.push_back(std::move(cell));
    }
    m.push_back(std::move(row));
  }
  j["m"] = std::move(m);
  Json unit = Json::array();
  for (std::size_t k = 0; k < n; ++k) unit.push_back(element_to_json(r, h.unit.at(k, 0)));
  j["unit"] = std::move(unit);
  Json delta = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t x = 0; x < n; ++x) {
      Json cell = Json::array();
      for (std::size_t y = 0; y < n; ++y) cell.push_back(element_to_json(r, h.comult.at(x * n + y, a)));
      row.push_back(std::move(cell));
    }
    delta.push_back(std::move(row));
  }
  j["delta"] = std::move(delta);
  Json counit = Json::array();
  for (std::size_t k = 0; k < n; ++k) counit.push_back(element_to_json(r, h.counit.at(0, k)));
  j["counit"] = std::move(counit);
  Json s = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(element_to_json(r, h.antipode.at(b, a)));
    s.push_back(std::move(row));
  }
  j["S"] = std::move(s);
  return j;
}

HopfPresentation presentation_from_json(const Json& j, const std::string& path) {
  HopfPresentation h;
  h.ring = ring_from_json(field(j, "ring", path), path + ".ring");
  const auto dim = unsigned_of(field(j, "dim", path), path + ".dim");
  if (dim == 0 || dim > 4096) violation(path + ".dim", "dimension out of range");
  const std::size_t n = dim;
  h.dim = n;
  const Ring& r = h.ring;
  h.mult = MultiMap::zero(r, n, 2, 1);
  h.unit = MultiMap::zero(r, n, 0, 1);
  h.comult = MultiMap::zero(r, n, 1, 2);
  h.counit = MultiMap::zero(r, n, 1, 0);
  h.antipode = MultiMap::zero(r, n, 1, 1);

  const std::string mp = path + ".m";
  const Json& m = array_of(field(j, "m", path), n, mp);
  for (std::size_t a = 0; a < n; ++a) {
    array_of(m[a], n, at(mp, a));
    for (std::size_t b = 0; b < n; ++b) {
      const std::string cp = at(at(mp, a), b);
      array_of(m[a][b], n, cp);
      for (std::size_t k = 0; k < n; ++k) h.mult.at(k, a * n + b) = element_from_json(r, m[a][b][k], at(cp, k));
    }
  }
  const Json& unit = array_of(field(j, "unit", path), n, path + ".unit");
  for (std::size_t k = 0; k < n; ++k) h.unit.at(k, 0) = element_from_json(r, unit[k], at(path + ".unit", k));
  const std::string dp = path + ".delta";
  const Json& delta = array_of(field(j, "delta", path), n, dp);
  for (std::size_t a = 0; a < n; ++a) {
    array_of(delta[a], n, at(dp, a));
    for (std::size_t x = 0; x < n; ++x) {
      const std::string cp = at(at(dp, a), x);
      array_of(delta[a][x], n, cp);
      for (std::size_t y = 0; y < n; ++y) h.comult.at(x * n + y, a) = element_from_json(r, delta[a][x][y], at(cp, y));
    }
  }
  const Json& counit = array_of(field(j, "counit", path), n, path + ".counit");
  for (std::size_t k = 0; k < n; ++k) h.counit.at(0, k) = element_from_json(r, counit[k], at(path + ".counit", k));
  const std::string sp = path + ".S";
  const Json& s = array_of(field(j, "S", path), n, sp);
  for (std::size_t a = 0; a < n; ++a) {
    array_of(s[a], n, at(sp, a));
    for (std::size_t b = 0; b < n; ++b) h.antipode.at(b, a) = element_from_json(r, s[a][b], at(at(sp, a), b));
  }
  return h;
}

Json cochain_to_json(const TotalCochain& x) {
  Json j;
  j["degree"] = x.degree;
  Json comps = Json::array();
  for (std::size_t p = 0; p < x.components.size(); ++p) {
    Json c;
    c["p"] = p;
    c["q"] = x.degree - p;
    c["map"] = multimap_to_json(x.components[p]);
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  return j;
}

TotalCochain cochain_from_json(const BialgebraComplex& complex, const Json& j, const std::string& path) {
  const auto degree = unsigned_of(field(j, "degree", path), path + ".degree");
  if (degree > 6) violation(path + ".degree", "degree out of range");
  TotalCochain x = complex.zero(static_cast<unsigned>(degree));
  const std::string cp = path + ".components";
  const Json& comps = array_of(field(j, "components", path), x.components.size(), cp);
  for (std::size_t p = 0; p < x.components.size(); ++p) {
    const std::string ep = at(cp, p);
    if (unsigned_of(field(comps[p], "p", ep), ep + ".p") != p) violation(ep + ".p", "components must be ordered by p");
    if (unsigned_of(field(comps[p], "q", ep), ep + ".q") != degree - p) violation(ep + ".q", "p + q must equal the degree");
    const MultiMap& shape = x.components[p];
    MultiMap f = multimap_from_json(complex.ring(), complex.source().dim, complex.target().dim, field(comps[p], "map", ep),
                                    ep + ".map");
    if (!f.same_shape(shape)) violation(ep + ".map", "arity does not match (p, q)");
    x.components[p] = std::move(f);
  }
  return x;
}

Json morphism_to_json(const HopfMorphism& f) {
  Json j;
  j["source"] = presentation_to_json(f.source);
  j["target"] = presentation_to_json(f.target);
  j["map"] = multimap_to_json(f.map);
  return j;
}

HopfMorphism morphism_from_json(const Json& j, const std::string& path) {
  HopfMorphism f;
  f.source = presentation_from_json(field(j, "source", path), path + ".source");
  f.target = presentation_from_json(field(j, "target", path), path + ".target");
  if (!(f.source.ring == f.target.ring)) violation(path + ".target.ring", "source and target rings differ");
  f.map = multimap_from_json(f.source.ring, f.source.dim, f.target.dim, field(j, "map", path), path + ".map");
  if (f.map.arity_in() != 1 || f.map.arity_out() != 1) violation(path + ".map", "expected a 1 -> 1 map");
  return f;
}

Json rmatrix_to_json(const MultiMap& r, std::size_t dim) {
  Json j = Json::array();
  for (std::size_t a = 0; a < dim; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < dim; ++b) row.push_back(element_to_json(r.ring(), r.at(a * dim + b, 0)));
    j.push_back(std::move(row));
  }
  return j;
}

MultiMap rmatrix_from_json(const Ring& ring, std::size_t dim, const Json& j, const std::string& path) {
  MultiMap r = MultiMap::zero(ring, dim, 0, 2);
  array_of(j, dim, path);
  for (std::size_t a = 0; a < dim; ++a) {
    array_of(j[a], dim, at(path, a));
    for (std::size_t b = 0; b < dim; ++b) r.at(a * dim + b, 0) = element_from_json(ring, j[a][b], at(at(path, a), b));
  }
  return r;
}

Json lift_step_to_json(const LiftStep& s, bool with_timing) {
  Json j;
  j["precision"] = s.precision;
  j["obstruction_support"] = s.obstruction_support;
  j["correction_support"] = s.correction_support;
  j["solver_rank"] = s.solver_rank;
  if (with_timing) j["seconds"] = s.seconds;
  return j;
}

Json lift_state_to_json(const LiftState& s, const LiftStrategy& strategy) {
  Json j;
  j["base"] = presentation_to_json(s.base);
  j["precision"] = s.precision;
  j["strategy"] = strategy.to_string();
  j["current"] = presentation_to_json(s.current);
  Json t = Json::array();
  for (const auto& step : s.transcript) t.push_back(lift_step_to_json(step, false));
  j["transcript"] = std::move(t);
  return j;
}

LiftState lift_state_from_json(const Json& j, const std::string& path) {
  LiftState s;
  s.base = presentation_from_json(field(j, "base", path), path + ".base");
  const auto prec = unsigned_of(field(j, "precision", path), path + ".precision");
  s.current = presentation_from_json(field(j, "current", path), path + ".current");
  if (!s.base.ring.is_field()) violation(path + ".base.ring", "base must be over a field");
  if (s.current.ring.precision() != prec || !s.current.ring.compatible(s.base.ring) || s.current.dim != s.base.dim)
    violation(path + ".current", "does not match base and precision");
  s.precision = static_cast<unsigned>(prec);
  if (j.contains("transcript")) {
    const Json& t = j["transcript"];
    if (!t.is_array()) violation(path + ".transcript", "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string tp = at(path + ".transcript", i);
      LiftStep step;
      step.precision = static_cast<unsigned>(unsigned_of(field(t[i], "precision", tp), tp + ".precision"));
      step.obstruction_support = unsigned_of(field(t[i], "obstruction_support", tp), tp + ".obstruction_support");
      step.correction_support = unsigned_of(field(t[i], "correction_support", tp), tp + ".correction_support");
      step.solver_rank = unsigned_of(field(t[i], "solver_rank", tp), tp + ".solver_rank");
      if (t[i].contains("seconds")) {
        const Json& sec = t[i]["seconds"];
        if (!sec.is_number()) violation(tp + ".seconds", "expected a number");
        step.seconds = sec.get<double>();
      }
      s.transcript.push_back(step);
    }
  }
  return s;
}

namespace {

Json elements_json(const Ring& ring, const std::vector<RingElement>& v) {
  Json j = Json::array();
  for (const auto& a : v) j.push_back(element_to_json(ring, a));
  return j;
}

}  // namespace

Json axiom_report_to_json(const AxiomReport& rep) {
  Json j;
  j["verified"] = rep.verified();
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["passed"] = c.passed;
    cj["nonzero_residuals"] = c.nonzero_residuals;
    cj["first_failure"] = c.first_failure;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json analysis_to_json(const Ring& ring, const AnalysisReport& a) {
  Json j;
  j["semisimple"] = a.semisimple;
  j["cosemisimple"] = a.cosemisimple;
  j["commutative"] = a.commutative;
  j["cocommutative"] = a.cocommutative;
  j["antipode_order"] = a.antipode_order;
  j["antipode_sq_order"] = a.antipode_sq_order;
  j["trace_s2"] = element_to_json(ring, a.trace_s2);
  j["dim_in_k"] = element_to_json(ring, a.dim_in_k);
  j["grouplikes_computed"] = a.grouplikes_computed;
  Json g = Json::array(), cg = Json::array();
  for (const auto& v : a.grouplikes) g.push_back(elements_json(ring, v));
  for (const auto& v : a.central_grouplikes) cg.push_back(elements_json(ring, v));
  j["grouplikes"] = std::move(g);
  j["central_grouplikes"] = std::move(cg);
  return j;
}

Json lemma_report_to_json(const IntPolynomial& poly, const LemmaReport& rep) {
  Json j;
  j["P"] = poly.to_string();
  j["r"] = rep.r;
  j["p"] = rep.p;
  j["D"] = rep.D.str();
  j["phi_r"] = rep.phi_r;
  j["bound"] = rep.bound.str();
  j["N"] = rep.N.str();
  j["p_exceeds_bound"] = rep.p_exceeds_bound;
  j["p_coprime_to_r"] = rep.p_coprime_to_r;
  j["p_divides_N"] = rep.p_divides_N;
  j["gcd_with_cyclotomic_trivial"] = rep.gcd_with_cyclotomic_trivial;
  j["applicable"] = rep.applicable;
  j["conclusion"] = rep.conclusion;
  return j;
}

Json threshold_to_json(const Threshold& t) {
  Json j;
  j["d"] = t.d;
  j["phi"] = t.phi;
  j["threshold"] = t.value.str();
  return j;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    violation("", std::string("malformed JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(); }

}  // namespace hopfkit
