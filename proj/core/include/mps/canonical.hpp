#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mps/integer_mps.hpp"

namespace mps {

/// Row-major entry codes: +d -> 0, +1 -> 1, -1 -> 2, -d -> 3. For d = 0 the
/// diagonal is always coded 0.
std::vector<std::uint8_t> code_sequence(const IntegerMps& m);

/// Lexicographic order on code sequences (shorter orders first).
bool lex_less(const IntegerMps& a, const IntegerMps& b);

struct CanonicalOptions {
  std::size_t max_n = 8;
};

struct CanonicalResult {
  IntegerMps form;
  EquivalenceWitness witness;  ///< maps the input to `form`
};

/// Lexicographically smallest matrix in the equivalence class under
/// permutations, ±1 switchings and global negation. Throws TooLarge if
/// n > options.max_n.
CanonicalResult canonical_form(const IntegerMps& m, CanonicalOptions options = {});

/// Witness mapping a to b, verified by applying it; none if the matrices are
/// not equivalent (including different n or d).
std::optional<EquivalenceWitness> are_equivalent(const IntegerMps& a, const IntegerMps& b, CanonicalOptions options = {});

}  // namespace mps
