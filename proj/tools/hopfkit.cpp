// hopfkit command-line front end.
//
// Exit codes: 0 success / predicate holds, 1 predicate fails, 2 usage or IO error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/acceptance.hpp"
#include "hopfkit/arithcheck.hpp"
#include "hopfkit/cohomology.hpp"
#include "hopfkit/error.hpp"
#include "hopfkit/lifting.hpp"
#include "hopfkit/serialize.hpp"

using namespace hopfkit;

namespace {

constexpr int kOk = 0;
constexpr int kPredicateFails = 1;
constexpr int kUsage = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }

void emit(const Json& j) { std::cout << dump_json(j) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Lifting-style predicate failures that are properties of the input.
bool is_predicate_failure(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSemisimpleOrCosemisimple:
    case ErrorCode::NotSemisimple:
    case ErrorCode::NotSplit:
    case ErrorCode::NotACocycle:
    case ErrorCode::NotRealAtRoot:
      return true;
    default:
      return false;
  }
}

struct Options {
  bool json = false;
  std::string input;
  std::string second;
  std::string third;
  std::string group;
  std::uint64_t p = 0;
  unsigned n = 1, m = 1;
  unsigned precision = 2;
  std::string strategy = "canonical";
  std::string transcript;
  std::vector<unsigned> degrees;
  bool invariants = false;
  std::string cocycle;
  bool with_r = false;
  std::string poly;
  unsigned r = 0;
  unsigned dim = 0;
  std::vector<unsigned> only;
};

int cmd_validate(const Options& o) {
  const HopfPresentation h = presentation_from_json(read_json(o.input));
  const AxiomReport rep = verify_hopf(h);
  if (o.json) {
    emit(axiom_report_to_json(rep));
  } else {
    for (const auto& c : rep.checks) {
      std::cout << c.name << ": " << (c.passed ? "ok" : "FAIL");
      if (!c.passed) std::cout << " (" << c.nonzero_residuals << " nonzero residuals, first at " << c.first_failure << ")";
      std::cout << "\n";
    }
    std::cout << (rep.verified() ? "Hopf axioms hold" : "Hopf axioms violated") << "\n";
  }
  return rep.verified() ? kOk : kPredicateFails;
}

int cmd_analyze(const Options& o) {
  const HopfPresentation h = presentation_from_json(read_json(o.input));
  const AnalysisReport a = analyze(h);
  const Ring& r = h.ring;
  if (o.json) {
    emit(analysis_to_json(r, a));
  } else {
    std::cout << "dimension: " << h.dim << " over " << r.describe() << "\n"
              << "semisimple: " << yes_no(a.semisimple) << "\n"
              << "cosemisimple: " << yes_no(a.cosemisimple) << "\n"
              << "commutative: " << yes_no(a.commutative) << "\n"
              << "cocommutative: " << yes_no(a.cocommutative) << "\n"
              << "order of S: " << a.antipode_order << "\n"
              << "order of S^2: " << a.antipode_sq_order << "\n"
              << "tr(S^2): " << dump_json(element_to_json(r, a.trace_s2)) << "  dim: "
              << dump_json(element_to_json(r, a.dim_in_k)) << "\n";
    if (a.grouplikes_computed)
      std::cout << "grouplikes: " << a.grouplikes.size() << " (central: " << a.central_grouplikes.size() << ")\n";
    else
      std::cout << "grouplikes: not computed\n";
  }
  if (!a.semisimple) {
    std::cerr << "not semisimple\n";
    return kPredicateFails;
  }
  if (!a.cosemisimple) {
    std::cerr << "not cosemisimple\n";
    return kPredicateFails;
  }
  return kOk;
}

int cmd_cohomology(const Options& o) {
  const HopfPresentation h = presentation_from_json(read_json(o.input));
  const BialgebraComplex cx(h);
  int code = kOk;
  Json j;
  if (!o.cocycle.empty()) {
    const TotalCochain z = cochain_from_json(cx, read_json(o.cocycle));
    const bool ok = cx.is_cocycle(z);
    j["cocycle"] = ok;
    if (!o.json) std::cout << "cocycle: " << yes_no(ok) << "\n";
    if (!ok) code = kPredicateFails;
  }
  std::vector<unsigned> degrees = o.degrees;
  if (degrees.empty() && o.cocycle.empty()) degrees = {0, 1, 2};
  Json dims = Json::array();
  for (unsigned n : degrees) {
    Json d;
    d["degree"] = n;
    d["dim"] = cx.cohomology_dim(n);
    if (!o.json) std::cout << "H^" << n << ": " << cx.cohomology_dim(n);
    if (o.invariants) {
      d["invariants_dim"] = cx.invariants_complex_dim(n);
      if (!o.json) std::cout << "  (invariants complex: " << cx.invariants_complex_dim(n) << ")";
    }
    if (!o.json) std::cout << "\n";
    dims.push_back(std::move(d));
  }
  j["cohomology"] = std::move(dims);
  if (o.json) emit(j);
  return code;
}

int cmd_lift(const Options& o) {
  const HopfPresentation h = presentation_from_json(read_json(o.input));
  const LiftStrategy strategy = LiftStrategy::parse(o.strategy);
  const LiftState s = lift(h, o.precision, strategy);
  std::ofstream file;
  if (!o.transcript.empty()) {
    file.open(o.transcript);
    if (!file) throw IoError("cannot write " + o.transcript);
  }
  std::ostream& log = o.transcript.empty() ? std::cerr : file;
  for (const auto& step : s.transcript) log << dump_json(lift_step_to_json(step)) << "\n";
  emit(lift_state_to_json(s, strategy));
  return kOk;
}

int cmd_reconcile(const Options& o) {
  const LiftState a = lift_state_from_json(read_json(o.input));
  const LiftState b = lift_state_from_json(read_json(o.second));
  emit(multimap_to_json(reconcile(a, b)));
  return kOk;
}

int cmd_lift_map(const Options& o) {
  const HopfMorphism phi = morphism_from_json(read_json(o.input));
  const LiftState a = lift_state_from_json(read_json(o.second));
  const LiftState b = lift_state_from_json(read_json(o.third));
  emit(morphism_to_json(lift_morphism(phi, a, b)));
  return kOk;
}

int cmd_lift_rmatrix(const Options& o) {
  const Json in = read_json(o.input);
  if (!in.is_object() || !in.contains("hopf"))
    throw Error(ErrorCode::SchemaViolation, "at .hopf: missing field");
  const HopfPresentation h = presentation_from_json(in["hopf"], ".hopf");
  if (!in.contains("R")) throw Error(ErrorCode::SchemaViolation, "at .R: missing field");
  const MultiMap r = rmatrix_from_json(h.ring, h.dim, in["R"], ".R");
  const LiftState s = lift_state_from_json(read_json(o.second));
  const MultiMap rbar = lift_rmatrix(h, r, s);
  Json j;
  j["hopf"] = presentation_to_json(s.current);
  j["R"] = rmatrix_to_json(rbar, h.dim);
  emit(j);
  return kOk;
}

int cmd_double(const Options& o) {
  const HopfPresentation h = presentation_from_json(read_json(o.input));
  const DoubleResult d = drinfeld_double(h);
  if (o.with_r) {
    Json j;
    j["hopf"] = presentation_to_json(d.double_algebra);
    j["R"] = rmatrix_to_json(d.r_matrix, d.double_algebra.dim);
    emit(j);
  } else {
    emit(presentation_to_json(d.double_algebra));
  }
  return kOk;
}

int cmd_dual(const Options& o) {
  emit(presentation_to_json(dual(presentation_from_json(read_json(o.input)))));
  return kOk;
}

int cmd_gen(const Options& o) {
  emit(presentation_to_json(builtin_presentation(o.group, Ring::make(o.p, o.n, o.m))));
  return kOk;
}

std::vector<std::int64_t> parse_poly(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0) throw CLI::ValidationError("--poly", "expected comma-separated integers, got '" + item + "'");
  }
  if (out.empty()) throw CLI::ValidationError("--poly", "empty polynomial");
  return out;
}

int cmd_nonvanishing(const Options& o) {
  const IntPolynomial poly = IntPolynomial::from_ints(parse_poly(o.poly));
  if (o.r <= 2) {
    if (o.json) {
      Json j;
      j["applicable"] = false;
      j["reason"] = "r must exceed 2";
      emit(j);
    } else {
      std::cout << "inapplicable: r must exceed 2\n";
    }
    return kPredicateFails;
  }
  const LemmaReport rep = nonvanishing_verdict(poly, o.r, o.p);
  if (o.json) {
    emit(lemma_report_to_json(poly, rep));
  } else {
    std::cout << "P = " << poly.to_string() << ", r = " << rep.r << ", p = " << rep.p << "\n"
              << "D = " << rep.D << ", phi(r) = " << rep.phi_r << ", bound D^(phi/2) = " << rep.bound << "\n"
              << "N = " << rep.N << "\n"
              << "p > bound: " << yes_no(rep.p_exceeds_bound) << "\n"
              << "p coprime to r: " << yes_no(rep.p_coprime_to_r) << "\n"
              << "p divides N: " << yes_no(rep.p_divides_N) << "\n"
              << "gcd(P, Phi_r) trivial mod p: " << yes_no(rep.gcd_with_cyclotomic_trivial) << "\n";
    if (!rep.p_coprime_to_r)
      std::cout << "inapplicable: p divides r\n";
    else if (!rep.p_exceeds_bound)
      std::cout << "inapplicable: p does not exceed the bound\n";
    else
      std::cout << (rep.conclusion ? "P(zeta) is nonzero mod p" : "P(zeta) vanishes mod p") << "\n";
  }
  return rep.conclusion ? kOk : kPredicateFails;
}

int cmd_threshold(const Options& o) {
  const Threshold t = kaplansky_threshold(o.dim);
  if (o.json) {
    emit(threshold_to_json(t));
  } else {
    std::cout << t.value << "\n";
  }
  return kOk;
}

int cmd_accept(const Options& o) {
  const auto results = run_acceptance(o.only, o.json ? nullptr : &std::cout);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    Json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  if (o.json) emit(arr);
  return ok ? kOk : kPredicateFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional Hopf algebras over finite fields and Galois rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.footer(
      "Environment: HOPFKIT_ROOT_SEARCH_BOUND, HOPFKIT_COHOMOLOGY_MAX_DIM, HOPFKIT_SOLVE_MAX_DIM.\n"
      "Exit codes: 0 success, 1 predicate fails, 2 usage or IO error.");

  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", o.input, what)->default_val("-");
  };

  auto* validate = app.add_subcommand("validate", "Check the Hopf axioms of a presentation");
  input(validate, "Presentation JSON (default stdin)");
  auto* analyze_cmd = app.add_subcommand("analyze", "Semisimplicity, antipode order, grouplikes");
  input(analyze_cmd, "Presentation JSON (default stdin)");
  auto* cohomology = app.add_subcommand("cohomology", "Bialgebra cohomology dimensions and cocycle checks");
  input(cohomology, "Presentation JSON (default stdin)");
  cohomology->add_option("--degree", o.degrees, "Degrees to compute (0..2)")->check(CLI::Range(0, 2))->allow_extra_args(false)->delimiter(',');
  cohomology->add_flag("--invariants", o.invariants, "Also compute through the invariants complex");
  cohomology->add_option("--cocycle", o.cocycle, "Cochain JSON to test for d(z) = 0");
  auto* lift_cmd = app.add_subcommand("lift", "Lift a presentation over F_q to GR(p^n, m)");
  input(lift_cmd, "Presentation JSON (default stdin)");
  lift_cmd->add_option("--precision", o.precision, "Target precision n")->check(CLI::Range(1, 30));
  lift_cmd->add_option("--strategy", o.strategy, "canonical or perturbed:SEED");
  lift_cmd->add_option("--transcript", o.transcript, "Write per-level records here instead of stderr");
  auto* reconcile_cmd = app.add_subcommand("reconcile", "Isomorphism between two lifts of the same base");
  reconcile_cmd->add_option("first", o.input, "Lift JSON")->required();
  reconcile_cmd->add_option("second", o.second, "Lift JSON")->required();
  auto* lift_map = app.add_subcommand("lift-map", "Lift a Hopf morphism between two lifts");
  lift_map->add_option("morphism", o.input, "Morphism JSON")->required();
  lift_map->add_option("source-lift", o.second, "Lift of the source")->required();
  lift_map->add_option("target-lift", o.third, "Lift of the target")->required();
  auto* lift_r = app.add_subcommand("lift-rmatrix", "Lift a quasitriangular structure");
  lift_r->add_option("rmatrix", o.input, "JSON with \"hopf\" and \"R\"")->required();
  lift_r->add_option("lift", o.second, "Lift of the Hopf algebra")->required();
  auto* double_cmd = app.add_subcommand("double", "Drinfeld double");
  input(double_cmd, "Presentation JSON (default stdin)");
  double_cmd->add_flag("--with-r", o.with_r, "Emit {\"hopf\", \"R\"} including the canonical R-matrix");
  auto* dual_cmd = app.add_subcommand("dual", "Dual Hopf algebra");
  input(dual_cmd, "Presentation JSON (default stdin)");
  auto* gen = app.add_subcommand("gen", "Built-in example: G, dual:G or double:G");
  gen->add_option("name", o.group, "C2..C8, C2xC2, S3, D4, Q8 with optional dual: or double: prefix")->required();
  gen->add_option("--p", o.p, "Characteristic")->required();
  gen->add_option("--n", o.n, "Precision");
  gen->add_option("--m", o.m, "Extension degree");
  auto* lemma = app.add_subcommand("nonvanishing", "Nonvanishing of P at primitive r-th roots of unity mod p");
  lemma->alias("lemma41");
  lemma->add_option("--poly", o.poly, "Coefficients a0,a1,...")->required();
  lemma->add_option("--r", o.r, "Order of the root of unity")->required();
  lemma->add_option("--p", o.p, "Prime")->required();
  auto* threshold = app.add_subcommand("threshold", "Characteristic threshold d^(phi(d)/2)");
  threshold->add_option("--dim", o.dim, "Dimension d > 2")->required();
  auto* accept = app.add_subcommand("accept", "Run the acceptance suite");
  accept->add_option("--only", o.only, "Criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*cohomology) return cmd_cohomology(o);
    if (*lift_cmd) return cmd_lift(o);
    if (*reconcile_cmd) return cmd_reconcile(o);
    if (*lift_map) return cmd_lift_map(o);
    if (*lift_r) return cmd_lift_rmatrix(o);
    if (*double_cmd) return cmd_double(o);
    if (*dual_cmd) return cmd_dual(o);
    if (*gen) return cmd_gen(o);
    if (*lemma) return cmd_nonvanishing(o);
    if (*threshold) return cmd_threshold(o);
    if (*accept) return cmd_accept(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_predicate_failure(e.code()) ? kPredicateFails : kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
