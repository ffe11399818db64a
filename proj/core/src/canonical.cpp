#include "mps/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mps {

namespace {

using Code = std::uint8_t;

Code entry_code(long long sign, bool diagonal, bool d_zero) {
  if (diagonal) return (d_zero || sign > 0) ? 0 : 3;
  return sign > 0 ? 1 : 2;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Branch-and-bound over vertex orderings of one switched matrix N (fixed
// global sign and first vertex). Shares the incumbent across branches.
class Canonicalizer {
 public:
  explicit Canonicalizer(const IntegerMps& m) : m_(m), n_(m.n()), d_zero_(m.d().num() == 0) {}

  CanonicalResult run() {
    int min_code = 4;
    for (int g : {1, -1})
      for (std::size_t r = 0; r < n_; ++r)
        min_code = std::min<int>(min_code, entry_code(g * m_.signs()(r, r), true, d_zero_));
    for (int g : {1, -1})
      for (std::size_t r = 0; r < n_; ++r)
        if (entry_code(g * m_.signs()(r, r), true, d_zero_) == min_code) branch(g, r);
    std::vector<int> signs(n_);
    for (std::size_t k = 0; k < n_; ++k) signs[k] = best_switch_[best_order_[k]];
    EquivalenceWitness w = witness_from_order(best_order_, std::move(signs), best_g_);
    IntegerMps form = w.apply(m_);
    return CanonicalResult{std::move(form), std::move(w)};
  }

 private:
  void branch(int g, std::size_t r) {
    g_ = g;
    sw_.assign(n_, 1);
    for (std::size_t u = 0; u < n_; ++u)
      if (u != r) sw_[u] = static_cast<int>(g * m_.signs()(r, u));
    codes_.assign(n_ * n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        codes_[i * n_ + j] = entry_code(g * sw_[i] * sw_[j] * m_.signs()(i, j), i == j, d_zero_);
    autos_.clear();
    branch_ref_.clear();

    cur_.assign(n_ * n_, 0);
    order_.assign(1, r);
    std::vector<std::vector<std::size_t>> cells;
    std::vector<std::size_t> rest;
    for (std::size_t u = 0; u < n_; ++u)
      if (u != r) rest.push_back(u);
    if (!rest.empty()) cells.push_back(std::move(rest));
    const int state = emit_row(0, cells, 0);
    if (state > 0) return;
    descend(1, cells, state);
  }

  // Writes row `i` of the current candidate and compares it with the incumbent.
  // Returns -1 (smaller), 0 (equal) or +1 (larger); `state` < 0 means an
  // earlier row was already smaller.
  int emit_row(std::size_t i, const std::vector<std::vector<std::size_t>>& cells, int state) {
    const std::size_t v = order_[i];
    Code* row = &cur_[i * n_];
    std::size_t col = 0;
    for (std::size_t k = 0; k <= i; ++k) row[col++] = codes_[v * n_ + order_[k]];
    for (const auto& cell : cells)
      for (const std::size_t u : cell) row[col++] = codes_[v * n_ + u];
    if (state < 0 || !has_best_) return -1;
    return compare_row(row, &best_[i * n_]);
  }

  int compare_row(const Code* a, const Code* b) const {
    for (std::size_t k = 0; k < n_; ++k)
      if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
    return 0;
  }

  void descend(std::size_t i, const std::vector<std::vector<std::size_t>>& cells, int state) {
    if (i == n_) {
      leaf(state);
      return;
    }
    const std::vector<std::size_t>& first = cells.front();
    Code min_diag = 4;
    for (const std::size_t u : first) min_diag = std::min(min_diag, codes_[u * n_ + u]);
    std::vector<std::size_t> candidates;
    for (const std::size_t u : first)
      if (codes_[u * n_ + u] == min_diag) candidates.push_back(u);

    std::vector<std::size_t> explored;
    for (const std::size_t c : candidates) {
      if (!explored.empty() && same_orbit(i, c, explored)) continue;
      explored.push_back(c);
      std::vector<std::vector<std::size_t>> next;
      next.reserve(cells.size() + 1);
      for (const auto& cell : cells) {
        std::vector<std::size_t> plus, minus;
        for (const std::size_t u : cell) {
          if (u == c) continue;
          (codes_[c * n_ + u] == 1 ? plus : minus).push_back(u);
        }
        if (!plus.empty()) next.push_back(std::move(plus));
        if (!minus.empty()) next.push_back(std::move(minus));
      }
      order_.push_back(c);
      const int s = emit_row(i, next, state);
      if (s <= 0) descend(i + 1, next, s);
      order_.pop_back();
    }
  }

  // True when c lies in the orbit of an explored candidate under stored
  // automorphisms that fix the current prefix pointwise.
  bool same_orbit(std::size_t depth, std::size_t c, const std::vector<std::size_t>& explored) {
    if (autos_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& a : autos_) {
      bool fixes = true;
      for (std::size_t k = 0; k < depth && fixes; ++k) fixes = a[order_[k]] == order_[k];
      if (!fixes) continue;
      for (std::size_t u = 0; u < n_; ++u) uf.unite(u, a[u]);
    }
    for (const std::size_t e : explored)
      if (uf.find(e) == uf.find(c)) return true;
    return false;
  }

  void leaf(int state) {
    if (state < 0 || !has_best_) {
      best_ = cur_;
      has_best_ = true;
      best_order_ = order_;
      best_switch_ = sw_;
      best_g_ = g_;
      branch_ref_ = order_;
      return;
    }
    // Equal to the incumbent.
    if (branch_ref_.empty()) {
      branch_ref_ = order_;
      return;
    }
    std::vector<std::size_t> a(n_);
    for (std::size_t k = 0; k < n_; ++k) a[branch_ref_[k]] = order_[k];
    if (autos_.size() < 4096) autos_.push_back(std::move(a));
  }

  const IntegerMps& m_;
  std::size_t n_;
  bool d_zero_;

  int g_ = 1;
  std::vector<int> sw_;
  std::vector<Code> codes_;
  std::vector<Code> cur_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> autos_;
  std::vector<std::size_t> branch_ref_;

  bool has_best_ = false;
  std::vector<Code> best_;
  std::vector<std::size_t> best_order_;
  std::vector<int> best_switch_;
  int best_g_ = 1;
};

}  // namespace

std::vector<std::uint8_t> code_sequence(const IntegerMps& m) {
  const std::size_t n = m.n();
  const bool dz = m.d().num() == 0;
  std::vector<std::uint8_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = entry_code(m.signs()(i, j), i == j, dz);
  return out;
}

bool lex_less(const IntegerMps& a, const IntegerMps& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.d() != b.d()) return a.d() < b.d();
  return code_sequence(a) < code_sequence(b);
}

CanonicalResult canonical_form(const IntegerMps& m, CanonicalOptions options) {
  if (m.n() > options.max_n)
    throw Error(ErrorCode::TooLarge, "canonical form limited to n <= " + std::to_string(options.max_n));
  return Canonicalizer(m).run();
}

std::optional<EquivalenceWitness> are_equivalent(const IntegerMps& a, const IntegerMps& b, CanonicalOptions options) {
  if (a.n() != b.n() || a.d() != b.d()) return std::nullopt;
  const CanonicalResult ca = canonical_form(a, options);
  const CanonicalResult cb = canonical_form(b, options);
  if (!(ca.form == cb.form)) return std::nullopt;
  EquivalenceWitness w = cb.witness.inverse().after(ca.witness);
  if (!(w.apply(a) == b)) throw Error(ErrorCode::StructureViolation, "equivalence witness failed verification");
  return w;
}

}  // namespace mps
