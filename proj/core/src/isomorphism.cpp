#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "detail.hpp"
#include "stochtop/error.hpp"
#include "stochtop/traversal.hpp"

namespace stochtop {

namespace {

constexpr std::size_t kLabellingCap = 200000;

/// A finite complex relabelled onto 0..V-1 (in increasing order of the original ids).
struct Small {
  int k = 0;
  std::size_t vertices = 0;
  std::vector<Simplex> simplices;
  std::vector<std::vector<std::uint32_t>> incident;
  std::vector<char> is_root;
  std::vector<std::size_t> fvec;
};

Small compact(const RootedComplex& r) {
  Small s;
  s.k = r.k();
  const SimplicialComplex& x = r.complex;
  const Level& l0 = x.level(0);
  const std::vector<Vertex>& ids = l0.flat();
  s.vertices = ids.size();
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  s.incident.resize(s.vertices);
  s.is_root.assign(s.vertices, 0);
  for (Vertex v : r.root) s.is_root[local(v)] = 1;
  for (int d = 0; d <= x.top_dimension(); ++d) {
    const Level& lv = x.level(d);
    s.fvec.push_back(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      Simplex t;
      for (Vertex v : lv[i]) t.push_back(local(v));
      const auto idx = static_cast<std::uint32_t>(s.simplices.size());
      for (Vertex v : t) s.incident[v].push_back(idx);
      s.simplices.push_back(std::move(t));
    }
  }
  return s;
}

/// Colour refinement run jointly over several complexes so colours are comparable.
std::vector<std::vector<std::uint32_t>> refine(const std::vector<const Small*>& xs) {
  std::vector<std::vector<std::string>> sig(xs.size());
  for (std::size_t g = 0; g < xs.size(); ++g) {
    const Small& s = *xs[g];
    for (std::size_t v = 0; v < s.vertices; ++v) {
      std::vector<std::size_t> per_dim(s.fvec.size(), 0);
      for (std::uint32_t t : s.incident[v]) ++per_dim[s.simplices[t].size() - 1];
      std::string str = s.is_root[v] ? "R" : "N";
      for (std::size_t c : per_dim) str += "," + std::to_string(c);
      sig[g].push_back(std::move(str));
    }
  }
  std::vector<std::vector<std::uint32_t>> color(xs.size());
  std::size_t distinct = 0;
  while (true) {
    std::vector<std::string> all;
    for (const auto& sg : sig) all.insert(all.end(), sg.begin(), sg.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t g = 0; g < xs.size(); ++g) {
      color[g].resize(sig[g].size());
      for (std::size_t v = 0; v < sig[g].size(); ++v) {
        color[g][v] = static_cast<std::uint32_t>(std::lower_bound(all.begin(), all.end(), sig[g][v]) - all.begin());
      }
    }
    if (all.size() == distinct) break;
    distinct = all.size();
    for (std::size_t g = 0; g < xs.size(); ++g) {
      const Small& s = *xs[g];
      for (std::size_t v = 0; v < s.vertices; ++v) {
        std::vector<std::string> parts;
        for (std::uint32_t t : s.incident[v]) {
          std::vector<std::uint32_t> others;
          for (Vertex w : s.simplices[t]) {
            if (w != v) others.push_back(color[g][w]);
          }
          std::sort(others.begin(), others.end());
          std::string p = std::to_string(others.size()) + ":";
          for (std::uint32_t o : others) p += std::to_string(o) + ".";
          parts.push_back(std::move(p));
        }
        std::sort(parts.begin(), parts.end());
        std::string str = std::to_string(color[g][v]) + "|";
        for (const std::string& p : parts) str += p + ";";
        sig[g][v] = std::move(str);
      }
    }
  }
  return color;
}

std::string serialize(int k, std::size_t vertices, const std::vector<Simplex>& simplices) {
  std::string out = std::to_string(k) + "/" + std::to_string(vertices) + "/";
  for (const Simplex& s : simplices) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(s[i]);
    }
    out += ';';
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string structural_hash(const Small& s, const std::vector<std::uint32_t>& color) {
  std::vector<std::uint32_t> sorted = color;
  std::sort(sorted.begin(), sorted.end());
  std::string key = std::to_string(s.k) + "/" + std::to_string(s.vertices) + "/";
  for (std::size_t f : s.fvec) key += std::to_string(f) + ",";
  key += "/";
  for (std::uint32_t c : sorted) key += std::to_string(c) + ",";
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return buf;
}

}  // namespace

namespace detail {

NeighborhoodClass labelled_code(const RootedComplex& b) {
  const Small s = compact(b);
  const std::vector<std::uint32_t> color = refine({&s})[0];
  if (s.vertices > kCanonicalVertexCap) return {"U" + structural_hash(s, color), false, false};
  // Cells in colour order; labellings permute vertices within cells.
  std::vector<std::vector<Vertex>> cells;
  {
    std::vector<std::pair<std::uint32_t, Vertex>> byc;
    for (Vertex v = 0; v < s.vertices; ++v) byc.emplace_back(color[v], v);
    std::sort(byc.begin(), byc.end());
    for (std::size_t i = 0; i < byc.size(); ++i) {
      if (i == 0 || byc[i].first != byc[i - 1].first) cells.emplace_back();
      cells.back().push_back(byc[i].second);
    }
  }
  double labellings = 1.0;
  for (const auto& cell : cells) {
    for (std::size_t i = 2; i <= cell.size(); ++i) labellings *= static_cast<double>(i);
  }
  if (labellings > static_cast<double>(kLabellingCap)) return {"U" + structural_hash(s, color), false, false};

  std::vector<Simplex> best;
  bool have_best = false;
  std::vector<Vertex> label(s.vertices);
  std::vector<Simplex> image(s.simplices.size());
  while (true) {
    Vertex next = 0;
    for (const auto& cell : cells) {
      for (Vertex v : cell) label[v] = next++;
    }
    for (std::size_t i = 0; i < s.simplices.size(); ++i) {
      Simplex& t = image[i];
      t.clear();
      for (Vertex v : s.simplices[i]) t.push_back(label[v]);
      std::sort(t.begin(), t.end());
    }
    std::sort(image.begin(), image.end(), [](const Simplex& a, const Simplex& c) {
      return a.size() != c.size() ? a.size() < c.size() : a < c;
    });
    if (!have_best || image < best) {
      best = image;
      have_best = true;
    }
    // Odometer over the permutations of every cell.
    std::size_t ci = 0;
    for (; ci < cells.size(); ++ci) {
      if (std::next_permutation(cells[ci].begin(), cells[ci].end())) break;
    }
    if (ci == cells.size()) break;
  }
  // Root vertices occupy whole cells (their colours carry the root flag), so
  // their labels do not depend on the labelling; record them in the code.
  std::string root = "r";
  Vertex position = 0;
  for (const auto& cell : cells) {
    for (Vertex v : cell) {
      if (s.is_root[v]) root += std::to_string(position) + ",";
      ++position;
    }
  }
  return {"G" + serialize(s.k, s.vertices, best) + root, false, true};
}

}  // namespace detail

bool rooted_isomorphic(const RootedComplex& a_in, const RootedComplex& b_in) {
  if (a_in.k() != b_in.k()) return false;
  const RootedComplex a = ball(a_in.complex, a_in.root, kUnboundedLayer);
  const RootedComplex b = ball(b_in.complex, b_in.root, kUnboundedLayer);
  const Small sa = compact(a);
  const Small sb = compact(b);
  if (sa.vertices != sb.vertices || sa.fvec != sb.fvec) return false;
  const auto colors = refine({&sa, &sb});
  const auto& ca = colors[0];
  const auto& cb = colors[1];
  {
    std::vector<std::uint32_t> x = ca, y = cb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }
  const std::size_t nv = sa.vertices;
  std::set<Simplex> b_simplices(sb.simplices.begin(), sb.simplices.end());
  // Static vertex order: roots first, then greedily the most constrained vertex.
  std::vector<Vertex> order;
  std::vector<char> placed(nv, 0);
  std::vector<std::size_t> touch(nv, 0);
  auto place = [&](Vertex v) {
    order.push_back(v);
    placed[v] = 1;
    for (std::uint32_t t : sa.incident[v]) {
      for (Vertex w : sa.simplices[t]) ++touch[w];
    }
  };
  for (Vertex v = 0; v < nv; ++v) {
    if (sa.is_root[v]) place(v);
  }
  while (order.size() < nv) {
    Vertex pick = 0;
    bool any = false;
    for (Vertex v = 0; v < nv; ++v) {
      if (placed[v]) continue;
      if (!any || touch[v] > touch[pick]) pick = v;
      any = true;
    }
    place(pick);
  }
  std::vector<std::size_t> pos(nv);
  for (std::size_t i = 0; i < nv; ++i) pos[order[i]] = i;
  // Simplices to check once the vertex at position p is mapped.
  std::vector<std::vector<std::uint32_t>> check(nv);
  for (std::uint32_t t = 0; t < sa.simplices.size(); ++t) {
    std::size_t last = 0;
    for (Vertex w : sa.simplices[t]) last = std::max(last, pos[w]);
    check[last].push_back(t);
  }
  std::vector<Vertex> map(nv, 0);
  std::vector<char> used(nv, 0);
  Simplex img;
  auto consistent = [&](std::size_t p) {
    for (std::uint32_t t : check[p]) {
      img.clear();
      for (Vertex w : sa.simplices[t]) img.push_back(map[w]);
      std::sort(img.begin(), img.end());
      if (!b_simplices.count(img)) return false;
    }
    return true;
  };
  // Iterative backtracking over candidate images.
  std::vector<Vertex> cand(nv, 0);
  std::size_t p = 0;
  bool advance = true;
  while (true) {
    if (p == nv) return true;
    const Vertex v = order[p];
    Vertex start = advance ? 0 : cand[p] + 1;
    if (!advance) used[map[v]] = 0;
    bool ok = false;
    for (Vertex w = start; w < nv; ++w) {
      if (used[w] || cb[w] != ca[v] || sb.is_root[w] != sa.is_root[v]) continue;
      map[v] = w;
      if (!consistent(p)) continue;
      cand[p] = w;
      used[w] = 1;
      ok = true;
      break;
    }
    if (ok) {
      ++p;
      advance = true;
    } else {
      if (p == 0) return false;
      --p;
      advance = false;
    }
  }
}

double local_distance(const RootedComplex& a, const RootedComplex& b) {
  if (a.k() != b.k()) return 1.0;
  LocalExplorer ea(a.complex, a.k());
  LocalExplorer eb(b.complex, b.k());
  std::size_t prev_a = 0, prev_b = 0;
  for (int l = 0;; ++l) {
    const RootedComplex ba = ea.ball(a.root, l);
    const RootedComplex bb = eb.ball(b.root, l);
    const NeighborhoodClass ca = canonical_code(ba, l);
    const NeighborhoodClass cb = canonical_code(bb, l);
    const bool same = (ca.coded && cb.coded) ? ca.code == cb.code : rooted_isomorphic(ba, bb);
    if (!same) return l == 0 ? 1.0 : std::ldexp(1.0, -(l - 1));
    std::size_t size_a = 0, size_b = 0;
    for (std::size_t f : ba.complex.f_vector()) size_a += f;
    for (std::size_t f : bb.complex.f_vector()) size_b += f;
    if (l > 0 && size_a == prev_a && size_b == prev_b) return 0.0;
    prev_a = size_a;
    prev_b = size_b;
  }
}

}  // namespace stochtop
