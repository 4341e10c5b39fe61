#include "smallcover/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

bool independent_words(std::span<const std::uint64_t> words) {
  std::uint64_t basis[64] = {};
  for (std::uint64_t v : words) {
    while (v != 0) {
      const int top = 63 - std::countl_zero(v);
      if (basis[top] == 0) {
        basis[top] = v;
        break;
      }
      v ^= basis[top];
    }
    if (v == 0) return false;
  }
  return true;
}

/// Column-by-column search. Columns of the base vertex are the identity;
/// every other facet ranges over the nonzero vectors, and each vertex is
/// checked as soon as its last facet is assigned.
class Search {
 public:
  explicit Search(const PolygonProduct& p) : p_(p), dim_(p.dimension()) {
    const std::vector<int> base_edges(p.factor_count(), 0);
    const auto base = p.vertex_facets(base_edges);
    column_.assign(p.facet_count(), 0);
    std::vector<int> rank(p.facet_count(), -1);
    for (int k = 0; k < dim_; ++k) {
      column_[base[k]] = std::uint64_t{1} << k;
      rank[base[k]] = k;
    }
    int next = dim_;
    for (int f = 0; f < p.facet_count(); ++f) {
      if (rank[f] < 0) {
        rank[f] = next++;
        free_.push_back(f);
      }
    }
    checks_.resize(free_.size());
    p.for_each_vertex([&](std::span<const int> edges) {
      const auto facets = p.vertex_facets(edges);
      int last = -1;
      for (int f : facets) last = std::max(last, rank[f]);
      if (last >= dim_) checks_[last - dim_].push_back(facets);
    });
  }

  std::size_t free_count() const { return free_.size(); }
  std::uint64_t values() const { return (std::uint64_t{1} << dim_) - 1; }

  /// All completions with the first free column fixed to `first` (or all of
  /// them when free_count() == 0).
  std::vector<CharMatrix> run(std::uint64_t first) {
    std::vector<CharMatrix> out;
    if (free_.empty()) {
      emit(out);
      return out;
    }
    column_[free_[0]] = first;
    if (consistent(0)) descend(1, out);
    return out;
  }

 private:
  bool consistent(std::size_t level) const {
    std::uint64_t words[64];
    for (const auto& facets : checks_[level]) {
      for (std::size_t k = 0; k < facets.size(); ++k) words[k] = column_[facets[k]];
      if (!independent_words(std::span(words, facets.size()))) return false;
    }
    return true;
  }

  void descend(std::size_t level, std::vector<CharMatrix>& out) {
    if (level == free_.size()) {
      emit(out);
      return;
    }
    for (std::uint64_t v = 1; v <= values(); ++v) {
      column_[free_[level]] = v;
      if (consistent(level)) descend(level + 1, out);
    }
  }

  void emit(std::vector<CharMatrix>& out) const {
    std::vector<BitVector> cols;
    for (std::uint64_t c : column_) cols.emplace_back(dim_, c);
    const BitMatrix m = BitMatrix::from_columns(dim_, cols);
    out.emplace_back(p_, gf2::rref(m).reduced);
  }

  const PolygonProduct& p_;
  int dim_;
  std::vector<std::uint64_t> column_;
  std::vector<int> free_;
  std::vector<std::vector<std::vector<int>>> checks_;
};

bool rows_less(const CharMatrix& a, const CharMatrix& b) {
  return a.matrix().rows() < b.matrix().rows();
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

void check_enumeration_guardrail(const PolygonProduct& p) {
  if (p.dimension() > 6 || p.facet_count() > 14) {
    throw GuardrailExceeded("enumeration needs 2n <= 6 and m <= 14, got 2n = " +
                            std::to_string(p.dimension()) + ", m = " +
                            std::to_string(p.facet_count()));
  }
}

std::vector<CharMatrix> enumerate_charmaps(const PolygonProduct& p, int jobs) {
  check_enumeration_guardrail(p);
  Search probe(p);
  const std::size_t branches = probe.free_count() == 0 ? 1 : probe.values();
  std::vector<std::vector<CharMatrix>> parts(branches);
  parallel_for(branches, jobs, [&](std::size_t b) {
    Search search(p);
    parts[b] = search.run(b + 1);
  });
  std::vector<CharMatrix> out;
  for (auto& part : parts) {
    for (auto& m : part) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), rows_less);
  return out;
}

std::size_t Census::orientable_count() const {
  return std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) { return r.orientable; });
}

std::size_t Census::compatible_count() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const CensusRow& r) { return r.factor_compatible; });
}

CensusRow classify_one(const CharMatrix& lambda) {
  CensusRow row{lambda, false, false, std::nullopt, {}, {}, {}, false, std::nullopt};
  row.orientable = orientable(lambda).orientable;
  auto compat = factor_compatible(lambda);
  row.factor_compatible = certificate(compat) != nullptr;
  if (const auto* r = refusal(compat)) row.refusal = *r;
  row.verdict = symplectic_verdict(lambda);
  row.betti_q = small_cover_betti(lambda);
  row.betti_f2 = mod2_betti(lambda);
  row.sq1_agrees = sq1_e2_betti(lambda) == row.betti_q;
  if (const auto* cert = certificate(compat)) row.hodge = hodge_analysis(lambda, *cert);
  return row;
}

Census classify(const PolygonProduct& p, int jobs) {
  const auto classes = enumerate_charmaps(p, jobs);
  std::vector<std::optional<CensusRow>> slots(classes.size());
  parallel_for(classes.size(), jobs, [&](std::size_t i) { slots[i] = classify_one(classes[i]); });
  Census census{p, {}};
  for (auto& s : slots) census.rows.push_back(std::move(*s));
  return census;
}

}  // namespace smallcover
