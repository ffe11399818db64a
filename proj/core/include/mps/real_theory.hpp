#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mps/designs.hpp"
#include "mps/integer_mps.hpp"

namespace mps {

/// Equivalent copy with the +d diagonal entries first (p >= n/2), the first
/// row of the leading p x p block equal to -1 off the diagonal and the first
/// row of the trailing block equal to +1 off the diagonal.
struct StandardForm {
  IntegerMps matrix;
  std::size_t p = 0;
  EquivalenceWitness witness;  ///< maps the input to `matrix`

  enum class Block { I, II, III, IV };
  /// Sign pattern of one of the four blocks.
  IntMatrix block(Block b) const;
};

StandardForm to_standard_form(const IntegerMps& m);

enum class VerdictStatus { exists_with_witness, impossible, open };
std::string_view status_name(VerdictStatus s) noexcept;

struct Verdict {
  VerdictStatus status = VerdictStatus::open;
  std::string rule;                   ///< deciding rule, witness family, or "undecided"
  std::optional<IntegerMps> witness;  ///< present iff status == exists_with_witness
  bool degenerate = false;            ///< design condition met only by a lambda = 0 design
};

/// Existence of a real matrix for (n, d). Rules, in order:
/// range-of-r, small-n, real-parity, design-gap, design-nonexistence;
/// then a witness from full_j, n2, upper_interval (alpha = pi), real_from_design,
/// conference_block (alpha = 0) or a Paley conference matrix; otherwise open.
Verdict necessary_conditions(std::size_t n, const Rational& d);

struct LemmaCounts {
  long long ell1 = 0, ell2 = 0, ell3 = 0, ell4 = 0;
  int branch = 0;         ///< 1 when Q_jk = +1, 2 when Q_jk = -1
  bool congruence = false;  ///< n + 2d - 2 = 0 mod 4 (branch 1) or n - 2d - 2 = 0 mod 4 (branch 2)
  bool inequality = true;   ///< n - 6d - 6 >= 0 (branch 1 only)
};

/// Counts ell1..ell4 of sign pairs (Q_jc, Q_kc) = (+,+), (+,-), (-,+), (-,-) over
/// the n - 3 columns c other than 0, j, k (zero-based, 1 <= j < k < p), after
/// the trailing columns are negated to make row 0 equal to -1. Throws
/// BlockTooSmall when p < 3 and IndexOutOfRange for bad j, k.
LemmaCounts lemma_counts(const StandardForm& sf, std::size_t j, std::size_t k);

/// Block form [[(d+1)I - J, G], [G^T, -(d+1)I + J]] reached by equivalence.
struct GreatDForm {
  IntegerMps matrix;
  IntMatrix g;
  EquivalenceWitness witness;
};

/// None if m has no equivalent copy of that shape.
std::optional<GreatDForm> great_d_form(const IntegerMps& m);

struct StructureReport {
  IntMatrix g;
  bool normal = false;
  bool commutes_with_j = false;
  bool gram_identity = false;  ///< G G^T = (n-2d-2) I + (2d+2-n/2) J
};

/// Requires n/6 - 1 < d < n/2 - 1 (NotInRange otherwise). Throws
/// StructureViolation if the block form is unreachable or any identity fails.
StructureReport structure_check(const IntegerMps& m);

/// Requires n/4 - 3/2 <= d < n/2 - 1 (NotInRange otherwise).
SymmetricDesign extract_design(const IntegerMps& m);

/// d must equal n/4 - 3/2 (WrongRatio). Returns [[-mu, 1...], [1..., G]].
RealHadamard hadamard_bridge(const IntegerMps& m);

/// Order N Hadamard matrix -> member of M_{2N-2}(N/2 - 2) via the
/// (N-1, N/2-1, N/4-1)-design.
IntegerMps hadamard_to_mps(const RealHadamard& h);

}  // namespace mps
