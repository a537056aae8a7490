#include "stochtop/traversal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "detail.hpp"
#include "stochtop/error.hpp"

namespace stochtop {

struct LocalExplorer::Tables {
  /// up[j - k]: cofaces of j-simplices, for j = k .. top - 1.
  std::vector<CofaceTable> up;
  const CofaceTable* at(int j, int k) const {
    const int i = j - k;
    return i >= 0 && i < static_cast<int>(up.size()) ? &up[static_cast<std::size_t>(i)] : nullptr;
  }
};

namespace {

/// Per-thread marks reused across traversals; a mark is valid when it equals
/// the current epoch, so nothing needs clearing between calls.
struct Scratch {
  std::vector<std::uint64_t> vertex_mark;
  std::vector<std::uint64_t> simplex_mark;
  std::uint64_t epoch = 0;
};

Scratch& scratch_for(std::size_t n, std::size_t f_up) {
  thread_local Scratch s;
  if (s.vertex_mark.size() < n) s.vertex_mark.resize(n, 0);
  if (s.simplex_mark.size() < f_up) s.simplex_mark.resize(f_up, 0);
  ++s.epoch;
  return s;
}

std::size_t require_index(const SimplicialComplex& x, SimplexView tau) {
  const int k = static_cast<int>(tau.size()) - 1;
  if (k < 0) throw InvalidArgument("root must be a non-empty simplex");
  auto idx = x.level(k).find(tau);
  if (!idx) throw InvalidArgument("root simplex is not in the complex");
  return *idx;
}

}  // namespace

bool is_tree_neighborhood(const TraversalRecord& r) {
  if (r.higher_cofaces) return false;
  return std::all_of(r.c.begin(), r.c.end(), [](std::size_t v) { return v == 0; });
}

LocalExplorer::LocalExplorer(const SimplicialComplex& x, int k) : x_(x), k_(k), tables_(new Tables) {
  if (k < 0) throw InvalidArgument("traversal needs k >= 0");
  if (!x.knows_dimension(k + 1)) throw InvalidArgument("traversal needs dimension k+1 within the cap");
  for (int j = k; j < x.top_dimension(); ++j) tables_->up.emplace_back(x, j);
}

LocalExplorer::~LocalExplorer() = default;

TraversalRecord LocalExplorer::traverse(SimplexView tau, int max_layer) const {
  if (static_cast<int>(tau.size()) - 1 != k_) throw InvalidArgument("root has the wrong dimension");
  const std::size_t root_index = require_index(x_, tau);
  const CofaceTable* up = tables_->at(k_, k_);
  const CofaceTable* up2 = tables_->at(k_ + 1, k_);
  const Level& lk = x_.level(k_);
  const Level& lk1 = x_.level(k_ + 1);

  TraversalRecord rec;
  rec.k = k_;
  rec.root.assign(tau.begin(), tau.end());
  rec.tree = KRootedTree(k_, tau);
  Scratch& sc = scratch_for(x_.vertex_universe(), lk1.size());
  const std::uint64_t epoch = sc.epoch;
  for (Vertex v : tau) sc.vertex_mark[v] = epoch;

  std::vector<std::uint32_t> node_index{static_cast<std::uint32_t>(root_index)};
  std::deque<std::uint32_t> queue{0};
  std::vector<std::pair<Simplex, std::uint32_t>> kids;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    if (rec.tree.generation(u) > max_layer) {
      rec.truncated = true;
      break;
    }
    queue.pop_front();
    const Simplex tau_i = rec.tree.simplex(u);
    std::size_t m = 0, c = 0;
    if (up != nullptr) {
      for (std::uint32_t s : up->of(node_index[u])) {
        if (up2 != nullptr && up2->degree(s) > 0) rec.higher_cofaces = true;
        if (sc.simplex_mark[s] == epoch) continue;  // already in T
        SimplexView sigma = lk1[s];
        Vertex v = 0;
        for (Vertex w : sigma) {
          if (!std::binary_search(tau_i.begin(), tau_i.end(), w)) v = w;
        }
        if (sc.vertex_mark[v] == epoch) {
          ++c;
          continue;
        }
        ++m;
        sc.vertex_mark[v] = epoch;
        sc.simplex_mark[s] = epoch;
        const std::uint32_t a = rec.tree.attach(u, v);
        kids.clear();
        for (std::size_t j = 0; j <= static_cast<std::size_t>(k_); ++j) {
          const std::uint32_t child = rec.tree.child(a, j);
          Simplex cs = rec.tree.simplex(child);
          node_index.resize(std::max<std::size_t>(node_index.size(), child + 1));
          node_index[child] = static_cast<std::uint32_t>(*lk.find(cs));
          kids.emplace_back(std::move(cs), child);
        }
        std::sort(kids.begin(), kids.end());
        for (const auto& kd : kids) queue.push_back(kd.second);
      }
    }
    rec.m.push_back(m);
    rec.c.push_back(c);
    rec.tau_order.push_back(tau_i);
    rec.layer.push_back(rec.tree.generation(u));
  }
  rec.stop_index = rec.m.size();
  return rec;
}

RootedComplex LocalExplorer::ball(SimplexView tau, int l) const {
  if (static_cast<int>(tau.size()) - 1 != k_) throw InvalidArgument("root has the wrong dimension");
  const std::size_t root_index = require_index(x_, tau);
  const int top = x_.top_dimension();
  std::vector<std::unordered_set<std::uint32_t>> in(static_cast<std::size_t>(std::max(top, k_) + 1));
  auto add_closure = [&](SimplexView sigma, std::vector<std::uint32_t>* new_k) {
    for (const Simplex& f : faces(sigma)) {
      const int d = static_cast<int>(f.size()) - 1;
      const auto idx = static_cast<std::uint32_t>(*x_.level(d).find(f));
      if (in[static_cast<std::size_t>(d)].insert(idx).second && d == k_ && new_k != nullptr) new_k->push_back(idx);
    }
  };
  add_closure(tau, nullptr);
  std::vector<std::uint32_t> frontier{static_cast<std::uint32_t>(root_index)};
  for (int step = 1; step <= l && !frontier.empty(); ++step) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t kappa : frontier) {
      // Every simplex containing kappa, dimension by dimension.
      std::vector<std::uint32_t> layer{kappa};
      for (int j = k_; j < top; ++j) {
        const CofaceTable* t = tables_->at(j, k_);
        std::vector<std::uint32_t> above;
        for (std::uint32_t s : layer) {
          for (std::uint32_t a : t->of(s)) above.push_back(a);
        }
        std::sort(above.begin(), above.end());
        above.erase(std::unique(above.begin(), above.end()), above.end());
        for (std::uint32_t a : above) add_closure(x_.level(j + 1)[a], &next);
        layer = std::move(above);
        if (layer.empty()) break;
      }
    }
    frontier = std::move(next);
  }
  std::vector<Level> levels;
  for (std::size_t d = 0; d < in.size(); ++d) {
    std::vector<std::uint32_t> ids(in[d].begin(), in[d].end());
    std::sort(ids.begin(), ids.end());
    Level lv(static_cast<int>(d));
    lv.reserve(ids.size());
    for (std::uint32_t i : ids) lv.push_back(x_.level(static_cast<int>(d))[i]);
    levels.push_back(std::move(lv));
  }
  return {SimplicialComplex(x_.vertex_universe(), std::move(levels), x_.dim_cap(), false),
          Simplex(tau.begin(), tau.end())};
}

TraversalRecord bfs_traverse(const SimplicialComplex& x, SimplexView tau, int max_layer) {
  LocalExplorer ex(x, static_cast<int>(tau.size()) - 1);
  return ex.traverse(tau, max_layer);
}

RootedComplex ball(const SimplicialComplex& x, SimplexView tau, int l) {
  LocalExplorer ex(x, static_cast<int>(tau.size()) - 1);
  return ex.ball(tau, l);
}

NeighborhoodClass canonical_code(const LocalExplorer& ex, SimplexView tau, int l) {
  const int max_layer = l == kUnboundedLayer ? kUnboundedLayer : l - 1;
  TraversalRecord rec = ex.traverse(tau, max_layer);
  if (is_tree_neighborhood(rec)) return {"T" + tree_code(rec.tree, l), true, true};
  return detail::labelled_code(ex.ball(tau, l));
}

NeighborhoodClass canonical_code(const RootedComplex& rooted, int l) {
  LocalExplorer ex(rooted.complex, rooted.k());
  return canonical_code(ex, rooted.root, l);
}

Histogram empirical_local_distribution(const SimplicialComplex& x, int k, int l) {
  const std::size_t f = x.f(k);
  if (f == 0) throw InvalidArgument("local distribution needs at least one k-simplex");
  LocalExplorer ex(x, k);
  std::map<std::string, std::size_t> counts;
  // Uncoded balls share a structural hash; split each bucket by exact isomorphism.
  std::map<std::string, std::vector<std::pair<RootedComplex, std::size_t>>> uncoded;
  const Level& lk = x.level(k);
  for (std::size_t i = 0; i < f; ++i) {
    NeighborhoodClass cls = canonical_code(ex, lk[i], l);
    if (cls.coded) {
      ++counts[cls.code];
      continue;
    }
    auto& bucket = uncoded[cls.code];
    RootedComplex b = ex.ball(lk[i], l);
    bool found = false;
    for (auto& rep : bucket) {
      if (rooted_isomorphic(rep.first, b)) {
        ++rep.second;
        found = true;
        break;
      }
    }
    if (!found) bucket.emplace_back(std::move(b), 1);
  }
  Histogram h;
  for (const auto& [code, n] : counts) h[code] = static_cast<double>(n) / static_cast<double>(f);
  for (const auto& [code, bucket] : uncoded) {
    for (std::size_t j = 0; j < bucket.size(); ++j) {
      h[code + "#" + std::to_string(j)] = static_cast<double>(bucket[j].second) / static_cast<double>(f);
    }
  }
  return h;
}

DegreeHistogram root_degree_histogram(const SimplicialComplex& x, int k) {
  DegreeHistogram h;
  const std::size_t f = x.f(k);
  if (f == 0) return h;
  CofaceTable t(x, k);
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t i = 0; i < f; ++i) ++counts[t.degree(i)];
  for (const auto& [d, n] : counts) h[d] = static_cast<double>(n) / static_cast<double>(f);
  return h;
}

}  // namespace stochtop
