#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mps/canonical.hpp"
#include "mps/constructions.hpp"
#include "mps/json_io.hpp"
#include "mps/matrix_core.hpp"
#include "mps/real_theory.hpp"
#include "mps/search.hpp"
#include "mps/unitary_param.hpp"

namespace mps::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "json";
  std::string out_path;
  unsigned threads = 1;
  double eps = 1e-9;
};

class Context {
 public:
  Context(std::istream& in, std::ostream& out, const Globals& g) : in_(in), out_(out), g_(g) {}

  std::string read(const std::string& path) const {
    std::ostringstream ss;
    if (path == "-") {
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw IoError("cannot read '" + path + "'");
    ss << f.rdbuf();
    return ss.str();
  }

  void write(const std::string& text) const {
    const char* end = !text.empty() && text.back() == '\n' ? "" : "\n";
    if (g_.out_path.empty()) {
      out_ << text << end;
      return;
    }
    std::ofstream f(g_.out_path);
    if (!f || !(f << text << end)) throw IoError("cannot write '" + g_.out_path + "'");
  }

  void write(const json& j) const { write(j.dump()); }
  bool csv() const { return g_.format == "csv"; }
  Tolerance tol() const { return Tolerance(g_.eps); }
  unsigned threads() const { return g_.threads; }

 private:
  std::istream& in_;
  std::ostream& out_;
  const Globals& g_;
};

json doc(const std::string& text) { return json::parse(text); }

Rational parse_ratio(const std::string& text) {
  const Rational d = Rational::parse(text);
  if (d < Rational(0)) throw Error(ErrorCode::InvalidArgument, "d must be non-negative");
  return d;
}

// Fills whichever auxiliary slot the document fits.
void load_aux(const std::string& text, FamilyAux& aux) {
  const json j = doc(text);
  if (j.is_object() && j.contains("v")) {
    aux.design = parse_design(text, true);
    return;
  }
  const MatrixDocument m = parse_matrix(text);
  if (m.real_exact) {
    const IntMatrix a = as_integer_matrix(m);
    if (is_hadamard(a)) {
      aux.hadamard = RealHadamard(a);
    } else if (is_conference(a)) {
      aux.conference = ConferenceMatrix(a);
      if (a == a.transpose()) aux.hermitian_conference = HermitianConference(to_complex(a));
    } else {
      throw Error(ErrorCode::InvalidArgument, "auxiliary matrix is neither Hadamard nor conference");
    }
    return;
  }
  bool unimodular = true;
  for (const auto& z : m.values.values()) unimodular = unimodular && std::fabs(std::abs(z) - 1.0) <= 1e-9;
  if (unimodular)
    throw Error(ErrorCode::InvalidArgument, "complex Hadamard auxiliary input is not used by any family");
  aux.hermitian_conference = HermitianConference(m.values);
}

int cmd_construct(const Context& ctx, const std::string& family, std::size_t n, const std::string& d_text,
                  std::optional<double> alpha, const std::string& aux_path) {
  FamilySpec spec;
  spec.family = parse_family(family);
  spec.n = n;
  if (!d_text.empty()) spec.d = parse_ratio(d_text);
  spec.alpha = alpha;
  FamilyAux aux;
  if (!aux_path.empty()) load_aux(ctx.read(aux_path), aux);
  const Constructed c = construct(spec, aux);
  if (ctx.csv()) {
    ctx.write(c.exact ? to_csv(*c.exact) : to_csv(c.matrix));
    return kOk;
  }
  json j = doc(c.exact ? to_json(*c.exact) : to_json(c.matrix));
  j["family"] = family;
  j["ratio"] = c.d;
  if (c.degenerate) j["degenerate"] = true;
  ctx.write(j);
  return kOk;
}

int cmd_verify(const Context& ctx, const std::string& path) {
  const MatrixDocument m = parse_matrix(ctx.read(path));
  const ComplexMatrix s = as_complex(m);
  const Tolerance tol = ctx.tol();
  json checks;
  checks["hermitian"] = is_hermitian(s, tol);
  checks["unitary"] = is_unitary(s, tol);
  json out;
  bool pass = checks["hermitian"].get<bool>() && checks["unitary"].get<bool>();
  try {
    const MpsProfile prof = mps_profile(s, tol);
    checks["mps"] = true;
    checks["d_bound"] = check_d_bound(prof.n, prof.d, tol);
    checks["trace_identity"] = check_trace_identity(prof, tol);
    pass = pass && checks["d_bound"].get<bool>() && checks["trace_identity"].get<bool>();
    out["profile"] = doc(to_json(prof));
  } catch (const Error& e) {
    checks["mps"] = false;
    out["reason"] = e.what();
    pass = false;
  }
  if (m.real_exact && m.d) {
    bool exact = false;
    try {
      (void)as_integer_mps(m);
      exact = true;
    } catch (const Error&) {
    }
    checks["exact"] = exact;
    pass = pass && exact;
  }
  out["checks"] = checks;
  out["pass"] = pass;
  ctx.write(out);
  return pass ? kOk : kNegative;
}

int verdict_code(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::exists_with_witness: return kOk;
    case VerdictStatus::impossible: return kNegative;
    case VerdictStatus::open: return kOpen;
  }
  return kOpen;
}

int cmd_classify(const Context& ctx, std::size_t n, const std::string& d_text) {
  const Verdict v = necessary_conditions(n, parse_ratio(d_text));
  ctx.write(to_json(v));
  return verdict_code(v.status);
}

int cmd_search(const Context& ctx, std::size_t n, const std::string& d_text, bool canonical, std::size_t max_results,
               double budget, std::size_t max_n) {
  SearchOptions opt;
  opt.mode = canonical ? SearchMode::up_to_equivalence : SearchMode::all;
  opt.budget_seconds = budget;
  opt.threads = ctx.threads();
  opt.max_n = max_n;
  opt.max_results = max_results;
  std::vector<Rational> ds = d_text.empty() ? candidate_ratios(n) : std::vector<Rational>{parse_ratio(d_text)};
  json results = json::array();
  std::string csv = "d,count,partial\n";
  bool partial = false;
  for (const Rational& d : ds) {
    const SearchResult r = exhaustive_search(n, d, opt);
    partial = partial || r.partial;
    json mats = json::array();
    for (const auto& m : r.matrices) mats.push_back(doc(to_json(m)));
    results.push_back(json{{"d", d.str()}, {"count", r.matrices.size()}, {"partial", r.partial}, {"matrices", mats}});
    csv += d.str() + "," + std::to_string(r.matrices.size()) + "," + (r.partial ? "true" : "false") + "\n";
  }
  if (ctx.csv()) {
    ctx.write(csv);
  } else {
    ctx.write(json{{"n", n}, {"mode", canonical ? "up_to_equivalence" : "all"}, {"results", results}});
  }
  return partial ? kOpen : kOk;
}

int cmd_canon(const Context& ctx, const std::string& path, std::size_t max_n) {
  const IntegerMps m = as_integer_mps(parse_matrix(ctx.read(path)));
  const CanonicalResult c = canonical_form(m, CanonicalOptions{max_n});
  if (ctx.csv()) {
    ctx.write(to_csv(c.form));
    return kOk;
  }
  ctx.write(json{{"form", doc(to_json(c.form))}, {"witness", doc(to_json(c.witness))}});
  return kOk;
}

int cmd_equiv(const Context& ctx, const std::string& a, const std::string& b, std::size_t max_n) {
  const IntegerMps m1 = as_integer_mps(parse_matrix(ctx.read(a)));
  const IntegerMps m2 = as_integer_mps(parse_matrix(ctx.read(b)));
  const auto w = are_equivalent(m1, m2, CanonicalOptions{max_n});
  json out{{"equivalent", w.has_value()}};
  if (w) out["witness"] = doc(to_json(*w));
  ctx.write(out);
  return w ? kOk : kNegative;
}

int cmd_param_encode(const Context& ctx, const std::string& path, bool general) {
  const ComplexMatrix s = as_complex(parse_matrix(ctx.read(path)));
  const Tolerance tol = ctx.tol();
  if (!general && is_hermitian(s, tol) && is_unitary(s, tol)) {
    ctx.write(to_json(decompose_hermitian_unitary(s, tol)));
  } else {
    ctx.write(to_json(decompose_unitary(s, tol)));
  }
  return kOk;
}

int cmd_param_decode(const Context& ctx, const std::string& path) {
  const ParamDocument p = parse_param(ctx.read(path));
  ComplexMatrix s = p.hermitian ? build_hermitian_unitary(HermitianUnitaryParam{p.param.n, p.param.m, p.param.t, p.param.p})
                                : build_unitary(p.param);
  ctx.write(ctx.csv() ? to_csv(s) : to_json(s));
  return kOk;
}

int cmd_designs_make(const Context& ctx, std::size_t hadamard, std::size_t conference, std::size_t fourier) {
  const int chosen = (hadamard > 0) + (conference > 0) + (fourier > 0);
  if (chosen != 1) throw CLI::ValidationError("designs make", "give exactly one of --hadamard, --conference, --fourier");
  if (hadamard > 0) {
    const RealHadamard h = sylvester_hadamard(hadamard);
    ctx.write(ctx.csv() ? to_csv(h.matrix()) : to_json(h));
  } else if (conference > 0) {
    const ConferenceMatrix c = paley_conference(conference);
    ctx.write(ctx.csv() ? to_csv(c.matrix()) : to_json(c));
  } else {
    const ComplexHadamard f = fourier_complex_hadamard(fourier);
    ctx.write(ctx.csv() ? to_csv(ComplexMatrix(f.matrix())) : to_json(f));
  }
  return kOk;
}

int cmd_designs_verify(const Context& ctx, const std::string& path) {
  const std::string text = ctx.read(path);
  const json j = doc(text);
  json out;
  bool ok = false;
  if (j.is_object() && j.contains("v")) {
    out["kind"] = "design";
    try {
      const SymmetricDesign d = parse_design(text, true);
      ok = true;
      out["degenerate"] = d.degenerate();
    } catch (const Error& e) {
      out["reason"] = e.what();
    }
  } else {
    const MatrixDocument m = parse_matrix(text);
    if (m.real_exact) {
      const IntMatrix a = as_integer_matrix(m);
      if (is_hadamard(a)) {
        out["kind"] = "hadamard";
        ok = true;
      } else if (is_conference(a)) {
        out["kind"] = "conference";
        out["symmetric"] = a == a.transpose();
        ok = true;
      } else {
        out["kind"] = "unknown";
      }
    } else {
      try {
        (void)ComplexHadamard(m.values, ctx.tol());
        out["kind"] = "complex-hadamard";
        ok = true;
      } catch (const Error&) {
        try {
          (void)HermitianConference(m.values, ctx.tol());
          out["kind"] = "hermitian-conference";
          ok = true;
        } catch (const Error&) {
          out["kind"] = "unknown";
        }
      }
    }
  }
  out["valid"] = ok;
  ctx.write(out);
  return ok ? kOk : kNegative;
}

int cmd_designs_from_hadamard(const Context& ctx, const std::string& path) {
  const RealHadamard h(as_integer_matrix(parse_matrix(ctx.read(path))));
  const SymmetricDesign d = hadamard_to_design(h);
  json j = doc(to_json(d));
  if (d.degenerate()) j["degenerate"] = true;
  ctx.write(j);
  return kOk;
}

int cmd_extract_design(const Context& ctx, const std::string& path) {
  const SymmetricDesign d = extract_design(as_integer_mps(parse_matrix(ctx.read(path))));
  json j = doc(to_json(d));
  if (d.degenerate()) j["degenerate"] = true;
  ctx.write(j);
  return kOk;
}

int cmd_bridge(const Context& ctx, const std::string& path) {
  const MatrixDocument m = parse_matrix(ctx.read(path));
  if (m.d) {
    const RealHadamard h = hadamard_bridge(as_integer_mps(m));
    ctx.write(ctx.csv() ? to_csv(h.matrix()) : to_json(h));
  } else {
    const IntegerMps s = hadamard_to_mps(RealHadamard(as_integer_matrix(m)));
    ctx.write(ctx.csv() ? to_csv(s) : to_json(s));
  }
  return kOk;
}

int cmd_scatter(const Context& ctx, const std::string& path, std::size_t edge) {
  const ComplexMatrix s = as_complex(parse_matrix(ctx.read(path)));
  if (edge == 0 || edge > s.n()) throw Error(ErrorCode::IndexOutOfRange, "edge must be in 1.." + std::to_string(s.n()));
  const std::vector<double> prob = scattering_probabilities(s, edge - 1, ctx.tol());
  double total = 0.0;
  for (const double x : prob) total += x;
  json out{{"edge", edge}, {"probabilities", prob}, {"sum", total}, {"reflection", prob[edge - 1]}};
  if (s.n() > 1) {
    const std::size_t other = edge == 1 ? 1 : 0;
    if (prob[other] > 0.0) out["reflection_transmission_ratio"] = prob[edge - 1] / prob[other];
  }
  try {
    const MpsProfile prof = mps_profile(s, ctx.tol());
    out["d_squared"] = prof.d * prof.d;
    out["expected_reflection"] = prof.d * prof.d / (prof.d * prof.d + static_cast<double>(prof.n) - 1.0);
  } catch (const Error&) {
  }
  ctx.write(out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hermitian unitary MPS matrices: construction, verification, classification and search", "mpstool"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out_path, "Write output to FILE instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads for search")->check(CLI::Range(1u, 256u));
  app.add_option("--eps", g.eps, "Numerical tolerance")->check(CLI::PositiveNumber);

  std::function<int()> action;
  Context ctx(in, out, g);

  // construct
  std::string family, d_text, aux_path;
  std::size_t n = 0;
  std::optional<double> alpha;
  auto* construct = app.add_subcommand("construct", "Build a member of a construction family");
  std::vector<std::string> family_names;
  for (const Family f : kAllFamilies) family_names.emplace_back(family_name(f));
  construct->add_option("--family", family, "Family name")->required()->check(CLI::IsMember(family_names));
  construct->add_option("--n", n, "Order")->required();
  construct->add_option("--d", d_text, "Ratio d (rational or decimal)");
  construct->add_option("--alpha", alpha, "Angle for design_complex");
  construct->add_option("--aux", aux_path, "Auxiliary Hadamard/conference matrix or design (JSON)");
  construct->callback([&] { action = [&] { return cmd_construct(ctx, family, n, d_text, alpha, aux_path); }; });

  std::string file, file2;
  auto* verify = app.add_subcommand("verify", "Check hermiticity, unitarity, MPS, d-bound and trace identity");
  verify->add_option("file", file, "Matrix JSON ('-' for stdin)")->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, file); }; });

  auto* classify = app.add_subcommand("classify", "Decide existence of a real matrix for (n, d)");
  classify->add_option("--n", n, "Order")->required();
  classify->add_option("--d", d_text, "Ratio d")->required();
  classify->callback([&] { action = [&] { return cmd_classify(ctx, n, d_text); }; });

  bool canonical = false;
  std::size_t max_results = 0, max_n = 8;
  double budget = 0.0;
  auto* search = app.add_subcommand("search", "Exhaustive search for real matrices");
  search->add_option("--n", n, "Order")->required();
  search->add_option("--d", d_text, "Ratio d (default: every j/2 up to n/2 - 1)");
  search->add_flag("--canonical", canonical, "One canonical representative per equivalence class");
  search->add_option("--max-results", max_results, "Keep at most K matrices per d");
  search->add_option("--budget", budget, "Time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  search->add_option("--max-n", max_n, "Largest order accepted");
  search->callback([&] { action = [&] { return cmd_search(ctx, n, d_text, canonical, max_results, budget, max_n); }; });

  auto* canon = app.add_subcommand("canon", "Canonical form of a real-exact matrix");
  canon->add_option("file", file, "Matrix JSON")->required();
  canon->add_option("--max-n", max_n, "Largest order accepted");
  canon->callback([&] { action = [&] { return cmd_canon(ctx, file, max_n); }; });

  auto* equiv = app.add_subcommand("equiv", "Test equivalence of two real-exact matrices");
  equiv->add_option("first", file, "Matrix JSON")->required();
  equiv->add_option("second", file2, "Matrix JSON")->required();
  equiv->add_option("--max-n", max_n, "Largest order accepted");
  equiv->callback([&] { action = [&] { return cmd_equiv(ctx, file, file2, max_n); }; });

  bool general = false;
  auto* param = app.add_subcommand("param", "Unitary parametrization");
  param->require_subcommand(1);
  auto* encode = param->add_subcommand("encode", "Matrix -> parameters");
  encode->add_option("file", file, "Matrix JSON")->required();
  encode->add_flag("--general", general, "Use the general unitary form even for Hermitian input");
  encode->callback([&] { action = [&] { return cmd_param_encode(ctx, file, general); }; });
  auto* decode = param->add_subcommand("decode", "Parameters -> matrix");
  decode->add_option("file", file, "Parameter JSON")->required();
  decode->callback([&] { action = [&] { return cmd_param_decode(ctx, file); }; });

  std::size_t had = 0, conf = 0, four = 0;
  auto* designs = app.add_subcommand("designs", "Hadamard, conference matrices and symmetric designs");
  designs->require_subcommand(1);
  auto* make = designs->add_subcommand("make", "Sylvester Hadamard, Paley conference or Fourier matrix");
  auto* o_had = make->add_option("--hadamard", had, "Sylvester Hadamard matrix of order N");
  auto* o_conf = make->add_option("--conference", conf, "Paley conference matrix of order N");
  auto* o_four = make->add_option("--fourier", four, "Fourier complex Hadamard matrix of order N");
  o_had->excludes(o_conf)->excludes(o_four);
  o_conf->excludes(o_four);
  make->callback([&] { action = [&] { return cmd_designs_make(ctx, had, conf, four); }; });
  auto* dverify = designs->add_subcommand("verify", "Verify a design, Hadamard or conference matrix");
  dverify->add_option("file", file, "JSON file")->required();
  dverify->callback([&] { action = [&] { return cmd_designs_verify(ctx, file); }; });
  auto* from_h = designs->add_subcommand("from-hadamard", "Design from a Hadamard matrix");
  from_h->add_option("file", file, "Hadamard matrix JSON")->required();
  from_h->callback([&] { action = [&] { return cmd_designs_from_hadamard(ctx, file); }; });

  auto* extract = app.add_subcommand("extract-design", "Design hidden in a real matrix");
  extract->add_option("file", file, "Matrix JSON")->required();
  extract->callback([&] { action = [&] { return cmd_extract_design(ctx, file); }; });

  auto* bridge = app.add_subcommand("bridge", "Real matrix with d = n/4 - 3/2 <-> Hadamard matrix of order n/2 + 1");
  bridge->add_option("file", file, "Matrix JSON (real-exact, with or without d)")->required();
  bridge->callback([&] { action = [&] { return cmd_bridge(ctx, file); }; });

  std::size_t edge = 0;
  auto* scatter = app.add_subcommand("scatter", "Scattering probabilities for one incoming edge");
  scatter->add_option("file", file, "Matrix JSON")->required();
  scatter->add_option("--edge", edge, "Incoming edge (1-based)")->required();
  scatter->callback([&] { action = [&] { return cmd_scatter(ctx, file, edge); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  if (!action) {
    err << "usage error: no subcommand\n";
    return kUsage;
  }
  try {
    return action();
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::TooLarge ? kOpen : kNegative;
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kNegative;
  }
}

}  // namespace mps::cli
