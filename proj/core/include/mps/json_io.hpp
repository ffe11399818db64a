#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mps/complex_matrix.hpp"
#include "mps/designs.hpp"
#include "mps/integer_mps.hpp"
#include "mps/matrix_core.hpp"
#include "mps/real_theory.hpp"
#include "mps/unitary_param.hpp"

namespace mps {

// Matrix documents:
//   {"n": N, "kind": "complex", "entries": [[[re, im], ...], ...]}
//   {"n": N, "kind": "real-exact", "d": "num/den", "q_entries": [["num/den", ...], ...]}
// Hadamard and conference matrices use "real-exact" without "d".
// All serializers return compact JSON text.

std::string to_json(const ComplexMatrix& m);
std::string to_json(const IntegerMps& m);
std::string to_json(const RealHadamard& h);
std::string to_json(const ConferenceMatrix& c);
std::string to_json(const ComplexHadamard& h);
std::string to_json(const SymmetricDesign& d);
/// {"n", "m", "T", "P"}; P one-based.
std::string to_json(const HermitianUnitaryParam& p);
/// {"n", "m", "T", "S_h", "P"}.
std::string to_json(const UnitaryParam& p);
/// {"P", "signs", "global"}; P one-based.
std::string to_json(const EquivalenceWitness& w);
std::string to_json(const MpsProfile& p);
/// {"status", "rule", "witness"?, "degenerate"?}.
std::string to_json(const Verdict& v);

struct MatrixDocument {
  std::size_t n = 0;
  bool real_exact = false;
  std::optional<Rational> d;
  std::optional<Matrix<Rational>> rational_entries;  ///< real-exact only
  CMatrix values;                                   ///< entries as complex numbers
};

/// Throws ParseError on malformed input.
MatrixDocument parse_matrix(std::string_view text);
ComplexMatrix as_complex(const MatrixDocument& doc);
/// Entries must be ±d on the diagonal and ±1 elsewhere; needs "d".
IntegerMps as_integer_mps(const MatrixDocument& doc);
/// Entries must be integers.
IntMatrix as_integer_matrix(const MatrixDocument& doc);

struct ParamDocument {
  UnitaryParam param;
  bool hermitian = false;  ///< no "S_h" field
};
ParamDocument parse_param(std::string_view text);

SymmetricDesign parse_design(std::string_view text, bool allow_degenerate = true);
EquivalenceWitness parse_witness(std::string_view text);

/// CSV: one row per line; complex entries as "re+imi", exact entries as rationals.
std::string to_csv(const ComplexMatrix& m);
std::string to_csv(const IntegerMps& m);
std::string to_csv(const IntMatrix& m);

}  // namespace mps
