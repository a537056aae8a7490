#include "stochtop/ktree.hpp"

#include <algorithm>
#include <numeric>

#include "stochtop/error.hpp"

namespace stochtop {

KRootedTree::KRootedTree(int k) : k_(k) {
  if (k < 0) throw InvalidArgument("rooted trees need k >= 0");
  Simplex root(width());
  std::iota(root.begin(), root.end(), Vertex{0});
  *this = KRootedTree(k, root);
}

KRootedTree::KRootedTree(int k, SimplexView root) : k_(k) {
  if (k < 0) throw InvalidArgument("rooted trees need k >= 0");
  if (root.size() != width() || !is_strictly_increasing(root)) {
    throw InvalidArgument("tree root must be a k-simplex with increasing vertices");
  }
  slots_.assign(root.begin(), root.end());
  node_generation_.push_back(0);
  node_parent_.push_back(kNone);
  node_first_.push_back(kNone);
  node_last_.push_back(kNone);
  node_degree_.push_back(0);
  next_vertex_ = root.back() + 1;
}

Simplex KRootedTree::simplex(std::uint32_t node) const {
  auto s = slots(node);
  Simplex out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> KRootedTree::attachments_of(std::uint32_t node) const {
  std::vector<std::uint32_t> out;
  out.reserve(node_degree_[node]);
  for (std::uint32_t a = node_first_[node]; a != kNone; a = attachment_next_[a]) out.push_back(a);
  return out;
}

std::uint32_t KRootedTree::attach(std::uint32_t node, Vertex v) {
  if (node >= node_count()) throw InvalidArgument("attachment to a missing node");
  const auto a = static_cast<std::uint32_t>(attachment_count());
  attachment_parent_.push_back(node);
  attachment_vertex_.push_back(v);
  attachment_next_.push_back(kNone);
  if (node_last_[node] == kNone) {
    node_first_[node] = a;
  } else {
    attachment_next_[node_last_[node]] = a;
  }
  node_last_[node] = a;
  ++node_degree_[node];
  const std::size_t w = width();
  for (std::size_t j = 0; j < w; ++j) {
    const auto c = static_cast<std::uint32_t>(node_count());
    for (std::size_t s = 0; s < w; ++s) slots_.push_back(s == j ? v : slots_[node * w + s]);
    node_generation_.push_back(node_generation_[node] + 1);
    node_parent_.push_back(a);
    node_first_.push_back(kNone);
    node_last_.push_back(kNone);
    node_degree_.push_back(0);
    children_.push_back(c);
  }
  next_vertex_ = std::max(next_vertex_, v + 1);
  return a;
}

int KRootedTree::depth() const { return *std::max_element(node_generation_.begin(), node_generation_.end()); }

std::string tree_code(const KRootedTree& t, int max_generation) {
  const std::size_t w = t.width();
  const std::size_t nodes = t.node_count();
  std::vector<std::size_t> perm(w);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::string best;
  bool first = true;
  std::vector<std::string> code(nodes);
  std::vector<std::string> parts;
  do {
    // Children are created after their parents, so a reverse sweep is bottom-up.
    for (std::size_t i = nodes; i-- > 0;) {
      const auto node = static_cast<std::uint32_t>(i);
      if (t.generation(node) > max_generation) continue;
      parts.clear();
      if (t.generation(node) < max_generation) {
        for (std::uint32_t a : t.attachments_of(node)) {
          std::string s = "[";
          for (std::size_t j = 0; j < w; ++j) s += code[t.child(a, perm[j])];
          s += ']';
          parts.push_back(std::move(s));
        }
      }
      std::sort(parts.begin(), parts.end());
      std::string s = "(";
      for (std::string& p : parts) s += p;
      s += ')';
      code[i] = std::move(s);
    }
    if (first || code[0] < best) best = code[0];
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

RootedComplex to_complex(const KRootedTree& t) {
  ComplexBuilder b(t.vertex_bound());
  const Simplex root = t.simplex(0);
  b.add(root);
  Simplex sigma;
  for (std::uint32_t a = 0; a < t.attachment_count(); ++a) {
    auto s = t.slots(t.attachment_parent(a));
    sigma.assign(s.begin(), s.end());
    sigma.push_back(t.attachment_vertex(a));
    std::sort(sigma.begin(), sigma.end());
    b.add(sigma);
  }
  return {std::move(b).build(), root};
}

}  // namespace stochtop
