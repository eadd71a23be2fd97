#include "islrc/distance.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace islrc {

namespace {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

long long pow_checked(long long base, int exp, long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

struct WeightResult {
  int weight = -1;  // -1: no nonzero codeword seen
  std::vector<Elem> codeword;
  long long visited = 0;
};

// Sweeps every message with the top digit fixed, remaining digits in
// reflected mixed-radix Gray order: one generator-row update per step.
WeightResult sweep_block(const GfMatrix& g, Elem top_value) {
  const FieldSpec& f = *g.field();
  const int q = f.q();
  const int k = g.rows();
  const int n = g.cols();
  const int kk = k - 1;  // free digits

  std::vector<Support> supports(k);
  for (int i = 0; i < k; ++i) supports[i] = g.row_support(i);

  std::vector<Elem> cw(n, 0);
  int weight = 0;
  if (top_value != 0) {
    for (int j : supports[kk >= 0 ? kk : 0]) {
      cw[j] = f.mul(top_value, g.at(k - 1, j));
      if (cw[j] != 0) ++weight;
    }
  }

  WeightResult best;
  auto consider = [&](bool nonzero_message) {
    ++best.visited;
    if (!nonzero_message) return;
    if (best.weight < 0 || weight < best.weight) {
      best.weight = weight;
      best.codeword = cw;
    }
  };
  consider(top_value != 0);

  if (kk == 0) return best;

  std::vector<int> a(kk, 0), dir(kk, 1), focus(kk + 1);
  for (int i = 0; i <= kk; ++i) focus[i] = i;
  while (true) {
    int j = focus[0];
    focus[0] = 0;
    if (j == kk) break;
    Elem old_digit = static_cast<Elem>(a[j]);
    a[j] += dir[j];
    Elem new_digit = static_cast<Elem>(a[j]);
    Elem delta = f.sub(new_digit, old_digit);
    for (int pos : supports[j]) {
      Elem v = f.add(cw[pos], f.mul(delta, g.at(j, pos)));
      if (cw[pos] != 0 && v == 0) --weight;
      if (cw[pos] == 0 && v != 0) ++weight;
      cw[pos] = v;
    }
    if (a[j] == 0 || a[j] == q - 1) {
      dir[j] = -dir[j];
      focus[j] = focus[j + 1];
      focus[j + 1] = j + 1;
    }
    bool nonzero = top_value != 0;
    if (!nonzero)
      for (int i = 0; i < kk && !nonzero; ++i) nonzero = a[i] != 0;
    consider(nonzero);
  }
  return best;
}

// Minimum weight of the row space of g (nonzero combinations only).
WeightResult enumerate_min_weight(const GfMatrix& g, int workers) {
  const int q = g.field()->q();
  std::vector<WeightResult> per_top(q);
  workers = std::min(workers, q);
  if (workers <= 1) {
    for (int v = 0; v < q; ++v) per_top[v] = sweep_block(g, static_cast<Elem>(v));
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int v = w; v < q; v += workers)
          per_top[v] = sweep_block(g, static_cast<Elem>(v));
      });
    for (auto& th : pool) th.join();
  }
  WeightResult best;
  for (int v = 0; v < q; ++v) {
    best.visited += per_top[v].visited;
    if (per_top[v].weight < 0) continue;
    if (best.weight < 0 || per_top[v].weight < best.weight) {
      best.weight = per_top[v].weight;
      best.codeword = per_top[v].codeword;
    }
  }
  return best;
}

std::vector<int> support_of(const std::vector<Elem>& v) {
  std::vector<int> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(static_cast<int>(i));
  return s;
}

// Null vector supported on the given dependent column set, embedded into a
// length-n codeword.
std::vector<Elem> witness_from_columns(const GfMatrix& h, const std::vector<int>& cols) {
  std::vector<int> sorted_cols = cols;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  GfMatrix restricted(h.field(), h.rows(), static_cast<int>(sorted_cols.size()));
  for (int i = 0; i < h.rows(); ++i)
    for (size_t j = 0; j < sorted_cols.size(); ++j)
      restricted.set(i, static_cast<int>(j), h.at(i, sorted_cols[j]));
  GfMatrix ns = restricted.null_space();
  std::vector<Elem> cw(h.cols(), 0);
  for (size_t j = 0; j < sorted_cols.size(); ++j) cw[sorted_cols[j]] = ns.at(0, static_cast<int>(j));
  return cw;
}

// Incremental-elimination subset search over the columns of h. Columns are
// chosen in descending index order, which enumerates subsets colexicographically
// and reuses the elimination state of every shared prefix.
class SubsetSearcher {
 public:
  SubsetSearcher(const GfMatrix& h, int w_max, long long budget, int workers)
      : h_(h), f_(*h.field()), w_max_(w_max), budget_(budget), workers_(workers) {
    cols_.resize(h.cols(), std::vector<Elem>(h.rows()));
    for (int j = 0; j < h.cols(); ++j)
      for (int i = 0; i < h.rows(); ++i) cols_[j][static_cast<size_t>(i)] = h.at(i, j);
  }

  DistanceCertificate run() {
    const int n = h_.cols();
    std::vector<Worker> states(static_cast<size_t>(std::min(workers_, n)));
    if (states.size() <= 1) {
      states.resize(1);
      Worker& st = states[0];
      for (int c = n - 1; c >= 0 && !aborted_.load(std::memory_order_relaxed); --c)
        top_level(st, c);
      flush(st);
    } else {
      std::vector<std::thread> pool;
      for (size_t w = 0; w < states.size(); ++w)
        pool.emplace_back([&, w] {
          Worker& st = states[w];
          for (int c = n - 1 - static_cast<int>(w); c >= 0;
               c -= static_cast<int>(states.size())) {
            if (aborted_.load(std::memory_order_relaxed)) break;
            top_level(st, c);
          }
          flush(st);
        });
      for (auto& th : pool) th.join();
    }

    DistanceCertificate cert;
    cert.method = DistanceMethod::SubsetSearch;
    cert.work = total_nodes_.load();
    std::vector<int> best_cols;
    int best = -1;
    for (const Worker& st : states) {
      if (st.best_size < 0) continue;
      if (best < 0 || st.best_size < best ||
          (st.best_size == best && st.best_cols < best_cols)) {
        best = st.best_size;
        best_cols = st.best_cols;
      }
    }
    if (aborted_.load()) {
      cert.status = DistanceStatus::BudgetExceeded;
      return cert;
    }
    if (best < 0) {
      cert.status = DistanceStatus::LowerBoundOnly;
      cert.lower_evidence = w_max_;
      return cert;
    }
    cert.status = DistanceStatus::Exact;
    cert.d = best;
    cert.lower_evidence = best - 1;
    cert.dependent_cols = best_cols;
    cert.witness = witness_from_columns(h_, best_cols);
    return cert;
  }

 private:
  struct Worker {
    std::vector<std::vector<Elem>> basis;  // reduced, pivot entry normalized to 1
    std::vector<int> pivots;
    std::vector<int> path;
    int best_size = -1;
    std::vector<int> best_cols;
    long long nodes = 0;
  };

  // Limit from the global best: workers share improvements so pruning
  // tightens as soon as any of them finds a smaller dependent set.
  int current_limit() const {
    int gb = global_best_.load(std::memory_order_relaxed);
    return gb < 0 ? w_max_ : std::min(w_max_, gb - 1);
  }

  void record(Worker& st, int c) {
    std::vector<int> cols = st.path;
    cols.push_back(c);
    std::sort(cols.begin(), cols.end());
    int size = static_cast<int>(cols.size());
    if (st.best_size < 0 || size < st.best_size ||
        (size == st.best_size && cols < st.best_cols)) {
      st.best_size = size;
      st.best_cols = std::move(cols);
      int prev = global_best_.load(std::memory_order_relaxed);
      while ((prev < 0 || size < prev) &&
             !global_best_.compare_exchange_weak(prev, size)) {
      }
    }
  }

  void count_node(Worker& st) {
    if (++st.nodes % 8192 == 0) {
      total_nodes_.fetch_add(8192, std::memory_order_relaxed);
      st.nodes -= 8192;
      if (total_nodes_.load(std::memory_order_relaxed) > budget_)
        aborted_.store(true, std::memory_order_relaxed);
    }
  }

  void flush(Worker& st) { total_nodes_.fetch_add(st.nodes); st.nodes = 0; }

  void top_level(Worker& st, int c) { visit(st, c); }

  void visit(Worker& st, int c) {
    count_node(st);
    std::vector<Elem> red = cols_[c];
    for (size_t b = 0; b < st.basis.size(); ++b) {
      Elem coef = red[static_cast<size_t>(st.pivots[b])];
      if (coef == 0) continue;
      const std::vector<Elem>& bv = st.basis[b];
      for (size_t i = 0; i < red.size(); ++i)
        red[i] = f_.sub(red[i], f_.mul(coef, bv[i]));
    }
    int pivot = -1;
    for (size_t i = 0; i < red.size(); ++i)
      if (red[i] != 0) { pivot = static_cast<int>(i); break; }
    if (pivot < 0) {
      record(st, c);
      return;
    }
    int depth = static_cast<int>(st.path.size()) + 1;
    if (depth >= current_limit()) return;
    Elem scale = f_.inv(red[static_cast<size_t>(pivot)]);
    if (scale != 1)
      for (Elem& e : red) e = f_.mul(scale, e);
    st.basis.push_back(std::move(red));
    st.pivots.push_back(pivot);
    st.path.push_back(c);
    for (int next = c - 1; next >= 0; --next) {
      if (aborted_.load(std::memory_order_relaxed)) break;
      visit(st, next);
    }
    st.path.pop_back();
    st.pivots.pop_back();
    st.basis.pop_back();
  }

  const GfMatrix& h_;
  const FieldSpec& f_;
  int w_max_;
  long long budget_;
  int workers_;
  std::vector<std::vector<Elem>> cols_;
  std::atomic<long long> total_nodes_{0};
  std::atomic<int> global_best_{-1};
  std::atomic<bool> aborted_{false};
};

}  // namespace

GfMatrix generator_from_check(const StandardParityCheck& c) {
  GfMatrix p = c.P();
  return GfMatrix::identity(c.field(), c.k()).hstack(p.negate().transpose());
}

DistanceCertificate min_distance_enumerate(const StandardParityCheck& c,
                                           const DistanceOptions& opts) {
  const long long count = pow_checked(c.field()->q(), c.k(), opts.enum_cap);
  if (count > opts.enum_cap)
    throw std::invalid_argument(
        "q^k exceeds the enumeration cap; use min_distance_subsets");
  GfMatrix g = generator_from_check(c);
  WeightResult best = enumerate_min_weight(g, resolve_workers(opts.workers));
  DistanceCertificate cert;
  cert.status = DistanceStatus::Exact;
  cert.method = DistanceMethod::Enumeration;
  cert.d = best.weight;
  cert.lower_evidence = best.weight - 1;
  cert.witness = best.codeword;
  cert.dependent_cols = support_of(best.codeword);
  cert.work = best.visited;
  return cert;
}

DistanceCertificate min_distance_subsets(const StandardParityCheck& c, int w_max,
                                         const DistanceOptions& opts) {
  if (w_max < 1) throw std::invalid_argument("w_max must be positive");
  SubsetSearcher searcher(c.H(), std::min(w_max, c.n()), opts.subset_budget,
                          resolve_workers(opts.workers));
  return searcher.run();
}

DistanceCertificate certify_distance(const StandardParityCheck& c, int claimed_d,
                                     const DistanceOptions& opts) {
  if (claimed_d < 1) throw std::invalid_argument("claimed distance must be positive");

  DistanceCertificate lower;
  lower.status = DistanceStatus::LowerBoundOnly;
  lower.lower_evidence = 0;
  if (claimed_d > 1) {
    lower = min_distance_subsets(c, claimed_d - 1, opts);
    if (lower.status == DistanceStatus::BudgetExceeded)
      throw std::runtime_error("not certified at this budget (lower bound)");
    if (lower.status == DistanceStatus::Exact)
      throw ClaimRefuted("claim refuted: found a codeword of weight " +
                             std::to_string(lower.d) + " < " +
                             std::to_string(claimed_d),
                         lower);
  }

  // Upper bound: generator rows first (weight 1 + P column weight), then
  // two-row combinations, then full subset search.
  GfMatrix g = generator_from_check(c);
  const FieldSpec& f = *c.field();
  DistanceCertificate cert;
  cert.status = DistanceStatus::Exact;
  cert.method = DistanceMethod::Hybrid;
  cert.d = claimed_d;
  cert.lower_evidence = claimed_d - 1;
  cert.work = lower.work;

  for (int i = 0; i < g.rows(); ++i) {
    if (g.row_weight(i) == claimed_d) {
      std::vector<Elem> cw(c.n());
      for (int j = 0; j < c.n(); ++j) cw[j] = g.at(i, j);
      cert.witness = std::move(cw);
      cert.dependent_cols = g.row_support(i);
      return cert;
    }
  }
  for (int a = 0; a < g.rows(); ++a)
    for (int b = a + 1; b < g.rows(); ++b)
      for (int ca = 1; ca < f.q(); ++ca)
        for (int cb = 1; cb < f.q(); ++cb) {
          std::vector<Elem> cw(c.n());
          int weight = 0;
          for (int j = 0; j < c.n(); ++j) {
            cw[j] = f.add(f.mul(static_cast<Elem>(ca), g.at(a, j)),
                          f.mul(static_cast<Elem>(cb), g.at(b, j)));
            if (cw[j] != 0) ++weight;
          }
          if (weight == claimed_d) {
            cert.dependent_cols = support_of(cw);
            cert.witness = std::move(cw);
            return cert;
          }
        }

  DistanceCertificate full = min_distance_subsets(c, claimed_d, opts);
  if (full.status == DistanceStatus::BudgetExceeded)
    throw std::runtime_error("not certified at this budget (upper bound)");
  if (full.status == DistanceStatus::LowerBoundOnly)
    throw ClaimRefuted("claim refuted: every subset of " +
                           std::to_string(claimed_d) +
                           " columns is independent, so d > " +
                           std::to_string(claimed_d),
                       full);
  cert.witness = full.witness;
  cert.dependent_cols = full.dependent_cols;
  cert.work += full.work;
  return cert;
}

// A set of <= t dependent check columns is the support of a codeword of
// weight <= t, and every codeword is determined by its message part. So
// instead of scanning column subsets of H, scan message supports of size
// <= t and track the parity weight incrementally; this replaces C(n,t)
// subsets with sum_s C(k,s) (q-1)^s nodes.
bool check_t_columns_independent(const StandardParityCheck& c, int t,
                                 const DistanceOptions& opts) {
  if (t < 1 || t > c.n()) throw std::invalid_argument("t out of range");
  const FieldSpec& f = *c.field();
  const GfMatrix& h = c.H();
  const int k = c.k();
  const int rows = c.parity_count();

  std::vector<std::vector<std::pair<int, Elem>>> cols(k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < rows; ++i)
      if (h.at(i, j) != 0) cols[j].emplace_back(i, h.at(i, j));

  const int workers = std::min(resolve_workers(opts.workers), k);
  std::atomic<bool> dependent{false};
  std::atomic<bool> exhausted{false};
  std::atomic<long long> spent{0};

  auto scan = [&](int stripe) {
    std::vector<Elem> syndrome(rows, 0);
    int nnz = 0;
    long long local = 0;
    auto charge = [&] {
      if (++local == 8192) {
        if (spent.fetch_add(local) + local > opts.subset_budget)
          exhausted.store(true, std::memory_order_relaxed);
        local = 0;
      }
    };
    auto aborted = [&] {
      return dependent.load(std::memory_order_relaxed) ||
             exhausted.load(std::memory_order_relaxed);
    };
    auto dfs = [&](auto&& self, int start, int depth) -> void {
      for (int j = start; j < k && !aborted(); ++j) {
        for (Elem a = 1; a < f.q(); ++a) {
          for (auto [i, v] : cols[j]) {
            Elem before = syndrome[i];
            syndrome[i] = f.add(before, f.mul(a, v));
            nnz += (syndrome[i] != 0) - (before != 0);
          }
          charge();
          if (depth + 1 + nnz <= t) dependent.store(true, std::memory_order_relaxed);
          if (!aborted() && depth + 1 < t) self(self, j + 1, depth + 1);
          for (auto [i, v] : cols[j]) {
            Elem before = syndrome[i];
            syndrome[i] = f.sub(before, f.mul(a, v));
            nnz += (syndrome[i] != 0) - (before != 0);
          }
          if (aborted()) return;
        }
      }
    };
    for (int j0 = stripe; j0 < k && !aborted(); j0 += workers) {
      for (Elem a = 1; a < f.q(); ++a) {
        for (auto [i, v] : cols[j0]) {
          Elem before = syndrome[i];
          syndrome[i] = f.add(before, f.mul(a, v));
          nnz += (syndrome[i] != 0) - (before != 0);
        }
        charge();
        if (1 + nnz <= t) dependent.store(true, std::memory_order_relaxed);
        if (!aborted() && t > 1) dfs(dfs, j0 + 1, 1);
        for (auto [i, v] : cols[j0]) {
          Elem before = syndrome[i];
          syndrome[i] = f.sub(before, f.mul(a, v));
          nnz += (syndrome[i] != 0) - (before != 0);
        }
        if (aborted()) break;
      }
    }
    spent.fetch_add(local);
  };

  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(scan, w);
  scan(0);
  for (std::thread& th : pool) th.join();

  if (dependent.load()) return false;
  if (exhausted.load()) throw std::runtime_error("not certified at this budget");
  return true;
}

DistanceCertificate min_distance_of_check(const GfMatrix& h,
                                          const DistanceOptions& opts) {
  GfMatrix g = h.null_space();  // throws when the code is zero-dimensional
  const long long count = pow_checked(h.field()->q(), g.rows(), opts.enum_cap);
  if (count > opts.enum_cap)
    throw std::invalid_argument("code too large for null-space enumeration");
  WeightResult best = enumerate_min_weight(g, resolve_workers(opts.workers));
  DistanceCertificate cert;
  cert.status = DistanceStatus::Exact;
  cert.method = DistanceMethod::Enumeration;
  cert.d = best.weight;
  cert.lower_evidence = best.weight - 1;
  cert.witness = best.codeword;
  cert.dependent_cols = support_of(best.codeword);
  cert.work = best.visited;
  return cert;
}

}  // namespace islrc
