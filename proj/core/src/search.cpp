#include "mps/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "mps/canonical.hpp"

namespace mps {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

struct WorkItem {
  Mask diag;  // bit i set: Q_ii = -d
  Mask row0;  // bit k set: Q_0k = -1 (k >= 1)
  std::size_t p;
};

class Searcher {
 public:
  Searcher(std::size_t n, const Rational& d, const SearchOptions& opt)
      : n_(n), num_(d.num()), den_(d.den()), opt_(opt), full_(n == 64 ? ~Mask{0} : (Mask{1} << n) - 1) {
    if (opt.budget_seconds > 0.0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(opt.budget_seconds));
  }

  SearchResult run() {
    const std::vector<WorkItem> items = work_items();
    const unsigned threads = std::max(1u, std::min<unsigned>(opt_.threads, static_cast<unsigned>(items.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::map<std::vector<std::uint8_t>, IntegerMps>> found(threads);
    std::vector<std::uint64_t> nodes(threads, 0);
    auto worker = [&](unsigned t) {
      std::vector<Mask> rows(n_);
      for (;;) {
        const std::size_t k = next.fetch_add(1);
        if (k >= items.size() || stop_.load()) break;
        const WorkItem& w = items[k];
        rows[0] = w.row0 | (w.diag & 1);
        if (!row_ok(rows, 0)) continue;
        descend(rows, 1, w, found[t], nodes[t]);
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }

    std::map<std::vector<std::uint8_t>, IntegerMps> merged;
    SearchResult out;
    for (unsigned t = 0; t < threads; ++t) {
      out.nodes += nodes[t];
      merged.merge(found[t]);
    }
    for (auto& [key, m] : merged) out.matrices.push_back(std::move(m));
    if (opt_.max_results > 0 && out.matrices.size() > opt_.max_results)
      out.matrices.erase(out.matrices.begin() + static_cast<std::ptrdiff_t>(opt_.max_results), out.matrices.end());
    out.partial = stop_.load();
    return out;
  }

 private:
  std::vector<WorkItem> work_items() const {
    std::vector<WorkItem> items;
    const bool restricted = opt_.mode == SearchMode::up_to_equivalence;
    std::vector<std::pair<Mask, std::size_t>> diags;
    if (num_ == 0) {
      diags.emplace_back(0, n_);
    } else if (restricted) {
      for (std::size_t p = (n_ + 1) / 2; p <= n_; ++p) diags.emplace_back(full_ & ~((Mask{1} << p) - 1), p);
    } else {
      for (Mask m = 0; m <= full_; ++m) {
        diags.emplace_back(m, 0);
        if (m == full_) break;
      }
    }
    for (const auto& [diag, p] : diags) {
      if (restricted) {
        // Row 0: -1 on the rest of the leading block, free on the trailing block.
        Mask fixed = 0;
        for (std::size_t k = 1; k < p; ++k) fixed |= Mask{1} << k;
        const std::size_t free = n_ - p;
        for (Mask v = 0; v < (Mask{1} << free); ++v) items.push_back({diag, fixed | (v << p), p});
      } else {
        const std::size_t free = n_ - 1;
        for (Mask v = 0; v < (Mask{1} << free); ++v) items.push_back({diag, v << 1, p});
      }
    }
    return items;
  }

  // Row i against all earlier rows.
  bool row_ok(const std::vector<Mask>& rows, std::size_t i) const {
    const long long others = static_cast<long long>(n_) - 2;
    for (std::size_t j = 0; j < i; ++j) {
      const Mask ex = full_ & ~((Mask{1} << i) | (Mask{1} << j));
      const long long x = others - 2 * std::popcount((rows[i] ^ rows[j]) & ex);
      const long long sij = (rows[i] >> j) & 1 ? -1 : 1;
      const long long sii = (rows[i] >> i) & 1 ? -1 : 1;
      const long long sjj = (rows[j] >> j) & 1 ? -1 : 1;
      if (den_ * x + num_ * sij * (sii + sjj) != 0) return false;
    }
    return true;
  }

  void descend(std::vector<Mask>& rows, std::size_t i, const WorkItem& w,
               std::map<std::vector<std::uint8_t>, IntegerMps>& found, std::uint64_t& nodes) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (i == n_) {
      record(rows, found);
      return;
    }
    Mask base = w.diag & (Mask{1} << i);
    for (std::size_t k = 0; k < i; ++k)
      if ((rows[k] >> i) & 1) base |= Mask{1} << k;
    const std::size_t free = n_ - 1 - i;
    const bool anchor = opt_.mode == SearchMode::up_to_equivalence && i == w.p && w.p < n_;
    const Mask limit = anchor ? 1 : (Mask{1} << free);
    for (Mask v = 0; v < limit; ++v) {
      rows[i] = base | (v << (i + 1));
      if ((++nodes & 0x3ff) == 0 && over_budget()) return;
      if (row_ok(rows, i)) descend(rows, i + 1, w, found, nodes);
    }
  }

  bool over_budget() {
    if (deadline_ && Clock::now() > *deadline_) stop_.store(true);
    return stop_.load();
  }

  void record(const std::vector<Mask>& rows, std::map<std::vector<std::uint8_t>, IntegerMps>& found) const {
    IntMatrix signs(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) signs(i, j) = (rows[i] >> j) & 1 ? -1 : 1;
    IntegerMps m(Rational(num_, den_), std::move(signs));
    if (opt_.mode == SearchMode::up_to_equivalence) {
      CanonicalOptions co;
      co.max_n = std::max(co.max_n, n_);
      m = canonical_form(m, co).form;
    }
    auto key = code_sequence(m);
    found.try_emplace(std::move(key), std::move(m));
  }

  std::size_t n_;
  long long num_, den_;
  SearchOptions opt_;
  Mask full_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool> stop_{false};
};

}  // namespace

std::vector<Rational> candidate_ratios(std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t j = 0; j + 2 <= n; ++j) out.emplace_back(static_cast<std::int64_t>(j), 2);
  return out;
}

SearchResult exhaustive_search(std::size_t n, const Rational& d, const SearchOptions& options) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (n > options.max_n || n > 30)
    throw Error(ErrorCode::TooLarge, "search limited to n <= " + std::to_string(std::min<std::size_t>(options.max_n, 30)));
  if (d < Rational(0)) throw Error(ErrorCode::InvalidArgument, "d must be non-negative");
  if (options.budget_seconds < 0.0) throw Error(ErrorCode::InvalidArgument, "budget must be non-negative");
  return Searcher(n, d, options).run();
}

}  // namespace mps
