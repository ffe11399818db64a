#include "mps/real_theory.hpp"

#include <algorithm>
#include <numeric>

#include "mps/constructions.hpp"

namespace mps {

namespace {

// Sign pattern after global sign g and moving original index order[k] to k.
IntMatrix reorder(const IntegerMps& m, const std::vector<std::size_t>& order, int g) {
  const std::size_t n = m.n();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = g * m.signs()(order[i], order[j]);
  return out;
}

// Signs switching row `anchor` of [lo, hi) to `target` off the diagonal; D_anchor = 1.
void anchor_block(const IntMatrix& a, std::size_t lo, std::size_t hi, int target, std::vector<int>& signs) {
  if (lo >= hi) return;
  signs[lo] = 1;
  for (std::size_t j = lo + 1; j < hi; ++j) signs[j] = static_cast<int>(target * a(lo, j));
}

Rational rat(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

// Builds a great-d form from a split where `order` puts block I first (size m = n/2).
std::optional<GreatDForm> try_split(const IntegerMps& m, const std::vector<std::size_t>& order) {
  const std::size_t n = m.n(), h = n / 2;
  const IntMatrix a = reorder(m, order, 1);
  std::vector<int> signs(n, 1);
  anchor_block(a, 0, h, -1, signs);
  anchor_block(a, h, n, 1, signs);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool same_i = i < h, same_j = j < h;
      if (same_i != same_j) continue;
      const long long want = same_i ? -1 : 1;
      if (signs[i] * signs[j] * a(i, j) != want) return std::nullopt;
    }
  for (std::size_t i = 0; i < n; ++i)
    if (m.d().num() != 0 && a(i, i) != (i < h ? 1 : -1)) return std::nullopt;
  EquivalenceWitness w = witness_from_order(order, signs, 1);
  IntegerMps form = w.apply(m);
  IntMatrix g(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) g(i, j) = form.signs()(i, h + j);
  return GreatDForm{std::move(form), std::move(g), std::move(w)};
}

// Verdict witnesses, tried in order.
std::optional<std::pair<IntegerMps, std::pair<std::string, bool>>> find_witness(std::size_t n, const Rational& d) {
  using Result = std::pair<IntegerMps, std::pair<std::string, bool>>;
  const Rational top = Rational(static_cast<std::int64_t>(n) - 2, 2);
  if (n >= 2 && d == top) return Result{full_j_exact(n), {"full_j", false}};
  if (n == 2) {
    Constructed c = construct(FamilySpec{Family::n2, 2, d, std::nullopt});
    if (c.exact) return Result{*c.exact, {"n2", false}};
  }
  if (n % 2 == 0 && n >= 6 && d == top - Rational(2)) {
    Constructed c = construct(FamilySpec{Family::upper_interval, n, d, std::nullopt});
    if (c.exact) return Result{*c.exact, {"upper_interval", false}};
  }
  if (const auto params = design_params_for(n, d)) {
    if (auto design = default_design(static_cast<long long>(n / 2), params->k, params->lambda))
      return Result{real_from_design(n, d, *design), {"design_real", design->degenerate()}};
  }
  if (n % 2 == 0 && n >= 4 && d == Rational(1)) {
    if (auto c = default_hermitian_conference(n / 2)) {
      FamilyAux aux;
      aux.hermitian_conference = *c;
      Constructed out = construct(FamilySpec{Family::conference_block, n, d, std::nullopt}, aux);
      if (out.exact) return Result{*out.exact, {"conference_block", false}};
    }
  }
  if (d == Rational(0)) {
    if (auto c = default_symmetric_conference(n)) return Result{IntegerMps(Rational(0), c->matrix()), {"paley_conference", false}};
  }
  return std::nullopt;
}

}  // namespace

IntMatrix StandardForm::block(Block b) const {
  const std::size_t n = matrix.n();
  switch (b) {
    case Block::I: return matrix.signs().block(0, 0, p, p);
    case Block::II: return matrix.signs().block(0, p, p, n - p);
    case Block::III: return matrix.signs().block(p, 0, n - p, p);
    case Block::IV: return matrix.signs().block(p, p, n - p, n - p);
  }
  return {};
}

StandardForm to_standard_form(const IntegerMps& m) {
  const std::size_t n = m.n();
  const int g = 2 * m.p() < n ? -1 : 1;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g * m.signs()(a, a) > g * m.signs()(b, b);
  });
  const IntMatrix a = reorder(m, order, g);
  std::size_t p = 0;
  while (p < n && a(p, p) > 0) ++p;
  std::vector<int> signs(n, 1);
  anchor_block(a, 0, p, -1, signs);
  anchor_block(a, p, n, 1, signs);
  EquivalenceWitness w = witness_from_order(order, std::move(signs), g);
  IntegerMps form = w.apply(m);
  return StandardForm{std::move(form), p, std::move(w)};
}

std::string_view status_name(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::exists_with_witness: return "exists_with_witness";
    case VerdictStatus::impossible: return "impossible";
    case VerdictStatus::open: return "open";
  }
  return "?";
}

Verdict necessary_conditions(std::size_t n, const Rational& d) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (d < Rational(0)) throw Error(ErrorCode::InvalidArgument, "d must be >= 0");
  auto impossible = [](const char* rule) { return Verdict{VerdictStatus::impossible, rule, std::nullopt, false}; };
  const Rational nn = rat(n);
  const Rational top = nn / Rational(2) - Rational(1);

  if (n > 2 && d > top) return impossible("range-of-r");
  if ((n == 3 && d != Rational(1, 2)) || (n == 4 && d != Rational(1)) || (n == 5 && d != Rational(3, 2)))
    return impossible("small-n");
  if (d < top) {
    const bool parity_ok = n % 2 == 0 && d.is_integer() && (static_cast<std::int64_t>(n / 2) + d.num()) % 2 != 0;
    if (!parity_ok) return impossible("real-parity");
    const Rational gap_lo = nn / Rational(6) - Rational(1);
    const Rational gap_hi = nn / Rational(4) - Rational(3, 2);
    if (d > gap_lo && d < gap_hi) return impossible("design-gap");
    if (d >= gap_hi && !design_params_for(n, d)) return impossible("design-nonexistence");
  }
  // The design condition counts lambda = 0 designs; such cases are flagged.
  bool degenerate = false;
  if (n > 2 && d < top) {
    const auto params = design_params_for(n, d);
    degenerate = params && params->lambda == 0;
  }
  if (auto w = find_witness(n, d))
    return Verdict{VerdictStatus::exists_with_witness, w->second.first, std::move(w->first), w->second.second || degenerate};
  return Verdict{VerdictStatus::open, "undecided", std::nullopt, degenerate};
}

LemmaCounts lemma_counts(const StandardForm& sf, std::size_t j, std::size_t k) {
  const std::size_t n = sf.matrix.n(), p = sf.p;
  if (p < 3) throw Error(ErrorCode::BlockTooSmall, "leading block needs p >= 3, got p = " + std::to_string(p));
  if (!(1 <= j && j < k && k < p))
    throw Error(ErrorCode::IndexOutOfRange, "need 1 <= j < k < p (zero-based)");
  const IntMatrix& q = sf.matrix.signs();
  std::vector<int> flip(n, 1);
  for (std::size_t c = p; c < n; ++c) flip[c] = static_cast<int>(-q(0, c));
  LemmaCounts out;
  for (std::size_t c = 0; c < n; ++c) {
    if (c == 0 || c == j || c == k) continue;
    const long long a = q(j, c) * flip[c], b = q(k, c) * flip[c];
    if (a > 0 && b > 0) ++out.ell1;
    else if (a > 0) ++out.ell2;
    else if (b > 0) ++out.ell3;
    else ++out.ell4;
  }
  const Rational nn = rat(n), d = sf.matrix.d();
  const auto l1 = Rational(out.ell1), l4 = Rational(out.ell4);
  bool identities;
  if (q(j, k) > 0) {
    out.branch = 1;
    identities = nn == Rational(2) - Rational(2) * d + Rational(4) * l4 && nn == Rational(6) + Rational(6) * d + Rational(4) * l1;
    const Rational c = (nn + Rational(2) * d - Rational(2)) / Rational(4);
    out.congruence = c.is_integer();
    out.inequality = nn - Rational(6) * d - Rational(6) >= Rational(0);
  } else {
    out.branch = 2;
    identities = nn == Rational(6) - Rational(6) * d + Rational(4) * l4 && nn == Rational(2) + Rational(2) * d + Rational(4) * l1;
    const Rational c = (nn - Rational(2) * d - Rational(2)) / Rational(4);
    out.congruence = c.is_integer();
  }
  if (out.ell1 + out.ell2 + out.ell3 + out.ell4 != static_cast<long long>(n) - 3 || !identities)
    throw Error(ErrorCode::StructureViolation, "column counts contradict row orthogonality");
  return out;
}

std::optional<GreatDForm> great_d_form(const IntegerMps& m) {
  const std::size_t n = m.n();
  if (n % 2 != 0 || n < 2) return std::nullopt;
  const std::size_t h = n / 2;
  if (m.d().num() != 0) {
    const std::size_t p = m.p();
    if (p != h) {
      if (n - p != h) return std::nullopt;
    }
    // Put the +d indices first; with p = n/2 no global flip is needed.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i)
      if (m.signs()(i, i) > 0) order.push_back(i);
    for (std::size_t i = 0; i < n; ++i)
      if (m.signs()(i, i) < 0) order.push_back(i);
    return try_split(m, order);
  }
  // d = 0: the split is not visible on the diagonal; try every half containing index 0.
  if (n > 24) throw Error(ErrorCode::TooLarge, "block split search limited to n <= 24 when d = 0");
  std::vector<bool> pick(n - 1, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(h - 1), true);
  do {
    std::vector<std::size_t> order{0};
    for (std::size_t i = 1; i < n; ++i)
      if (pick[i - 1]) order.push_back(i);
    for (std::size_t i = 1; i < n; ++i)
      if (!pick[i - 1]) order.push_back(i);
    if (auto f = try_split(m, order)) return f;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

StructureReport structure_check(const IntegerMps& m) {
  const std::size_t n = m.n();
  const Rational nn = rat(n), d = m.d();
  if (!(d > nn / Rational(6) - Rational(1) && d < nn / Rational(2) - Rational(1)))
    throw Error(ErrorCode::NotInRange, "structure_check needs n/6 - 1 < d < n/2 - 1");
  auto form = great_d_form(m);
  if (!form) throw Error(ErrorCode::StructureViolation, "no equivalent block form with p = n/2");
  const IntMatrix& g = form->g;
  const IntMatrix gt = g.transpose();
  const std::size_t h = g.rows();
  const IntMatrix j = IntMatrix::ones(h, h);
  StructureReport r;
  r.g = g;
  r.normal = g * gt == gt * g;
  r.commutes_with_j = g * j == j * g;
  // (n - 2d - 2) I + (2d + 2 - n/2) J; d is an integer here (n even, d < n/2 - 1).
  const Rational a = nn - Rational(2) * d - Rational(2), b = Rational(2) * d + Rational(2) - nn / Rational(2);
  bool gram = a.is_integer() && b.is_integer();
  if (gram) {
    const IntMatrix target = a.num() * IntMatrix::identity(h) + b.num() * j;
    gram = g * gt == target;
  }
  r.gram_identity = gram;
  if (!(r.normal && r.commutes_with_j && r.gram_identity))
    throw Error(ErrorCode::StructureViolation, "block G violates the required identities");
  return r;
}

SymmetricDesign extract_design(const IntegerMps& m) {
  const std::size_t n = m.n();
  const Rational nn = rat(n), d = m.d();
  if (n % 2 != 0 || !(d >= nn / Rational(4) - Rational(3, 2) && d < nn / Rational(2) - Rational(1)))
    throw Error(ErrorCode::NotInRange, "extract_design needs n/4 - 3/2 <= d < n/2 - 1");
  auto form = great_d_form(m);
  if (!form) throw Error(ErrorCode::StructureViolation, "no equivalent block form with p = n/2");
  IntMatrix g = form->g;
  const std::size_t h = g.rows();
  long long mu = 0;
  for (std::size_t i = 0; i < h; ++i) {
    long long s = 0;
    for (std::size_t jj = 0; jj < h; ++jj) s += g(i, jj);
    if (i == 0) mu = s;
    else if (s != mu) throw Error(ErrorCode::NonConstantRowSum, "rows of G have different sums");
  }
  const auto params = design_params_for(n, d);
  if (!params || (mu != params->q && mu != -params->q))
    throw Error(ErrorCode::StructureViolation, "row sum of G does not match the design parameters");
  if (mu > 0) g = -g;
  IntMatrix a(h, h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t jj = 0; jj < h; ++jj) a(i, jj) = (g(i, jj) + 1) / 2;
  return SymmetricDesign(std::move(a), static_cast<long long>(h), params->k, params->lambda, true);
}

RealHadamard hadamard_bridge(const IntegerMps& m) {
  const std::size_t n = m.n();
  if (n < 6 || n % 2 != 0 || Rational(4) * m.d() != rat(n) - Rational(6))
    throw Error(ErrorCode::WrongRatio, "bridge needs d = n/4 - 3/2, got d = " + m.d().str());
  auto form = great_d_form(m);
  if (!form) throw Error(ErrorCode::StructureViolation, "no equivalent block form with p = n/2");
  const IntMatrix& g = form->g;
  const std::size_t h = g.rows();
  long long mu = 0;
  for (std::size_t jj = 0; jj < h; ++jj) mu += g(0, jj);
  IntMatrix hm(h + 1, h + 1, 1);
  hm(0, 0) = -mu;
  hm.set_block(1, 1, g);
  return RealHadamard(std::move(hm));
}

IntegerMps hadamard_to_mps(const RealHadamard& h) {
  const std::size_t big_n = h.order();
  if (big_n < 4 || big_n % 4 != 0)
    throw Error(ErrorCode::BadOrder, "Hadamard order must be a positive multiple of 4");
  const std::size_t n = 2 * big_n - 2;
  const Rational d(static_cast<std::int64_t>(big_n) / 2 - 2);
  return real_from_design(n, d, hadamard_to_design(h));
}

}  // namespace mps
