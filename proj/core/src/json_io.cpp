#include "mps/json_io.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace mps {

namespace {

using nlohmann::json;

json complex_entries(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

json integer_entries(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(Rational(m(i, j)).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json exact_doc(const IntMatrix& m) {
  return json{{"n", m.rows()}, {"kind", "real-exact"}, {"q_entries", integer_entries(m)}};
}

json mps_doc(const IntegerMps& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.entry(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"n", m.n()}, {"kind", "real-exact"}, {"d", m.d().str()}, {"q_entries", std::move(rows)}};
}

json one_based(const Permutation& p) { return p.to_one_based(); }

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    parse_fail(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Rational rational_value(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  parse_fail("expected a rational string");
}

Complex complex_value(const json& v) {
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  if (v.is_number()) return {v.get<double>(), 0.0};
  parse_fail("expected [re, im]");
}

CMatrix complex_matrix(const json& rows, std::size_t r, std::size_t c, const char* name) {
  if (!rows.is_array() || rows.size() != r) parse_fail(std::string("'") + name + "' has the wrong number of rows");
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) parse_fail(std::string("'") + name + "' has a malformed row");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = complex_value(rows[i][j]);
  }
  return m;
}

Permutation permutation_field(const json& j, const char* key, std::size_t n) {
  const json& v = field(j, key);
  if (!v.is_array() || v.size() != n) parse_fail(std::string("'") + key + "' must list n images");
  std::vector<long long> img;
  for (const auto& x : v) {
    if (!x.is_number_integer()) parse_fail(std::string("'") + key + "' entries must be integers");
    img.push_back(x.get<long long>());
  }
  try {
    return Permutation::from_one_based(img);
  } catch (const Error& e) {
    parse_fail(e.what());
  }
}

std::string complex_cell(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::fabs(z.imag()) << "i";
  return os.str();
}

}  // namespace

std::string to_json(const ComplexMatrix& m) {
  return json{{"n", m.n()}, {"kind", "complex"}, {"entries", complex_entries(m.values())}}.dump();
}

std::string to_json(const IntegerMps& m) { return mps_doc(m).dump(); }
std::string to_json(const RealHadamard& h) { return exact_doc(h.matrix()).dump(); }
std::string to_json(const ConferenceMatrix& c) { return exact_doc(c.matrix()).dump(); }

std::string to_json(const ComplexHadamard& h) {
  return json{{"n", h.order()}, {"kind", "complex"}, {"entries", complex_entries(h.matrix())}}.dump();
}

std::string to_json(const SymmetricDesign& d) {
  json rows = json::array();
  for (std::size_t i = 0; i < d.incidence().rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < d.incidence().cols(); ++j) row.push_back(d.incidence()(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"v", d.v()}, {"k", d.k()}, {"lambda", d.lambda()}, {"incidence", std::move(rows)}}.dump();
}

std::string to_json(const HermitianUnitaryParam& p) {
  return json{{"n", p.n}, {"m", p.m}, {"T", complex_entries(p.t)}, {"P", one_based(p.p)}}.dump();
}

std::string to_json(const UnitaryParam& p) {
  return json{{"n", p.n}, {"m", p.m}, {"T", complex_entries(p.t)}, {"S_h", complex_entries(p.s_h)}, {"P", one_based(p.p)}}
      .dump();
}

std::string to_json(const EquivalenceWitness& w) {
  return json{{"P", one_based(w.perm)}, {"signs", w.signs}, {"global", w.global}}.dump();
}

std::string to_json(const MpsProfile& p) {
  return json{{"n", p.n}, {"r", p.r}, {"t", p.t}, {"d", p.d}, {"diag_signs", p.diag_signs}, {"p", p.p}, {"m", p.m}}.dump();
}

std::string to_json(const Verdict& v) {
  json j{{"status", std::string(status_name(v.status))}, {"rule", v.rule}};
  if (v.witness) j["witness"] = mps_doc(*v.witness);
  if (v.degenerate) j["degenerate"] = true;
  return j.dump();
}

MatrixDocument parse_matrix(std::string_view text) {
  const json j = parse_text(text);
  MatrixDocument doc;
  doc.n = size_field(j, "n");
  if (doc.n == 0) parse_fail("n must be positive");
  const std::string kind = field(j, "kind").is_string() ? field(j, "kind").get<std::string>() : "";
  if (kind == "complex") {
    doc.values = complex_matrix(field(j, "entries"), doc.n, doc.n, "entries");
    return doc;
  }
  if (kind != "real-exact") parse_fail("kind must be 'complex' or 'real-exact'");
  doc.real_exact = true;
  if (j.contains("d")) doc.d = rational_value(j.at("d"));
  const json& rows = field(j, "q_entries");
  if (!rows.is_array() || rows.size() != doc.n) parse_fail("'q_entries' has the wrong number of rows");
  Matrix<Rational> q(doc.n, doc.n);
  doc.values = CMatrix(doc.n, doc.n);
  for (std::size_t i = 0; i < doc.n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != doc.n) parse_fail("'q_entries' has a malformed row");
    for (std::size_t k = 0; k < doc.n; ++k) {
      q(i, k) = rational_value(rows[i][k]);
      doc.values(i, k) = Complex(q(i, k).to_double(), 0.0);
    }
  }
  doc.rational_entries = std::move(q);
  if (doc.d) {
    // Stored entries are Q; S = Q / sqrt(d^2 + n - 1).
    const double scale = 1.0 / std::sqrt((*doc.d * *doc.d + Rational(static_cast<std::int64_t>(doc.n) - 1)).to_double());
    doc.values = doc.values * Complex(scale, 0.0);
  }
  return doc;
}

ComplexMatrix as_complex(const MatrixDocument& doc) { return ComplexMatrix(doc.values); }

IntegerMps as_integer_mps(const MatrixDocument& doc) {
  if (!doc.real_exact || !doc.d || !doc.rational_entries)
    throw Error(ErrorCode::ParseError, "expected a real-exact matrix with d");
  const Rational& d = *doc.d;
  const auto& q = *doc.rational_entries;
  IntMatrix signs(doc.n, doc.n);
  for (std::size_t i = 0; i < doc.n; ++i)
    for (std::size_t j = 0; j < doc.n; ++j) {
      const Rational mag = i == j ? d : Rational(1);
      if (q(i, j) == mag) signs(i, j) = 1;
      else if (q(i, j) == -mag) signs(i, j) = -1;
      else throw Error(ErrorCode::NotMps, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is not ±" + mag.str());
    }
  return IntegerMps(d, std::move(signs));
}

IntMatrix as_integer_matrix(const MatrixDocument& doc) {
  if (!doc.real_exact || !doc.rational_entries) throw Error(ErrorCode::ParseError, "expected a real-exact matrix");
  IntMatrix m(doc.n, doc.n);
  for (std::size_t i = 0; i < doc.n; ++i)
    for (std::size_t j = 0; j < doc.n; ++j) {
      const Rational& x = (*doc.rational_entries)(i, j);
      if (!x.is_integer()) throw Error(ErrorCode::ParseError, "entries must be integers");
      m(i, j) = x.num();
    }
  return m;
}

ParamDocument parse_param(std::string_view text) {
  const json j = parse_text(text);
  ParamDocument doc;
  UnitaryParam& p = doc.param;
  p.n = size_field(j, "n");
  p.m = size_field(j, "m");
  if (p.m > p.n) parse_fail("m must not exceed n");
  if (p.m < p.n) p.t = complex_matrix(field(j, "T"), p.m, p.n - p.m, "T");
  p.p = permutation_field(j, "P", p.n);
  doc.hermitian = !j.contains("S_h");
  p.s_h = doc.hermitian ? CMatrix(p.m, p.m) : complex_matrix(j.at("S_h"), p.m, p.m, "S_h");
  return doc;
}

SymmetricDesign parse_design(std::string_view text, bool allow_degenerate) {
  const json j = parse_text(text);
  const long long v = static_cast<long long>(size_field(j, "v"));
  const long long k = static_cast<long long>(size_field(j, "k"));
  const long long lambda = static_cast<long long>(size_field(j, "lambda"));
  const json& rows = field(j, "incidence");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(v)) parse_fail("'incidence' must have v rows");
  IntMatrix a(static_cast<std::size_t>(v), static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != a.cols()) parse_fail("'incidence' has a malformed row");
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!rows[i][c].is_number_integer()) parse_fail("'incidence' entries must be 0 or 1");
      a(i, c) = rows[i][c].get<long long>();
    }
  }
  return SymmetricDesign(std::move(a), v, k, lambda, allow_degenerate);
}

EquivalenceWitness parse_witness(std::string_view text) {
  const json j = parse_text(text);
  const json& s = field(j, "signs");
  if (!s.is_array()) parse_fail("'signs' must be an array");
  EquivalenceWitness w;
  w.perm = permutation_field(j, "P", s.size());
  for (const auto& x : s) w.signs.push_back(x.get<int>());
  w.global = field(j, "global").get<int>();
  w.validate();
  return w;
}

std::string to_csv(const ComplexMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ',';
      out += complex_cell(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const IntegerMps& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out += ',';
      out += m.entry(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string to_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += Rational(m(i, j)).str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace mps
