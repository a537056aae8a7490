#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "stochtop/complex.hpp"

namespace stochtop {

/// A k-rooted (k+1)-tree. Starting from the root k-simplex, every attachment
/// joins one new vertex to an existing k-simplex (its parent node) and thereby
/// creates k+1 new k-simplices (its children). Each node keeps its vertices in
/// "slot" order: the root's slots are its vertices in increasing order and
/// child j of an attachment copies the parent's slots with slot j replaced by
/// the new vertex. Storage is flat, so trees are cheap to build and copy.
class KRootedTree {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  /// Bare root on vertices 0..k.
  explicit KRootedTree(int k);
  /// Bare root on the given (strictly increasing) vertices.
  KRootedTree(int k, SimplexView root);

  int k() const { return k_; }
  std::size_t width() const { return static_cast<std::size_t>(k_) + 1; }
  std::size_t node_count() const { return node_generation_.size(); }
  std::size_t attachment_count() const { return attachment_parent_.size(); }

  std::span<const Vertex> slots(std::uint32_t node) const { return {slots_.data() + node * width(), width()}; }
  /// The node's vertices in increasing order.
  Simplex simplex(std::uint32_t node) const;
  int generation(std::uint32_t node) const { return node_generation_[node]; }
  /// Attachment that created the node (kNone for the root).
  std::uint32_t parent_attachment(std::uint32_t node) const { return node_parent_[node]; }
  /// Attachments hanging from the node, in creation order.
  std::vector<std::uint32_t> attachments_of(std::uint32_t node) const;
  std::size_t degree(std::uint32_t node) const { return node_degree_[node]; }

  std::uint32_t attachment_parent(std::uint32_t a) const { return attachment_parent_[a]; }
  Vertex attachment_vertex(std::uint32_t a) const { return attachment_vertex_[a]; }
  /// Child replacing slot j of the parent.
  std::uint32_t child(std::uint32_t a, std::size_t j) const { return children_[a * width() + j]; }

  /// Adds an attachment with the given new vertex; returns its index.
  std::uint32_t attach(std::uint32_t node, Vertex v);
  /// Adds an attachment with a fresh vertex id (one above the largest used).
  std::uint32_t attach_fresh(std::uint32_t node) { return attach(node, next_vertex_); }

  /// One more than the largest vertex id used.
  Vertex vertex_bound() const { return next_vertex_; }
  /// Number of k-simplices, 1 + (k+1) * attachments.
  std::size_t f_k() const { return node_count(); }
  /// Largest node generation.
  int depth() const;

 private:
  int k_;
  Vertex next_vertex_ = 0;
  std::vector<Vertex> slots_;
  std::vector<int> node_generation_;
  std::vector<std::uint32_t> node_parent_;
  std::vector<std::uint32_t> node_first_;
  std::vector<std::uint32_t> node_last_;
  std::vector<std::uint32_t> node_degree_;
  std::vector<std::uint32_t> attachment_parent_;
  std::vector<Vertex> attachment_vertex_;
  std::vector<std::uint32_t> attachment_next_;
  std::vector<std::uint32_t> children_;
};

/// Canonical string of the rooted tree truncated so that only attachments of
/// nodes with generation < max_generation are kept (the ball of that radius).
/// Two trees get equal codes iff they are root-preserving isomorphic.
std::string tree_code(const KRootedTree& t, int max_generation = std::numeric_limits<int>::max());

/// The tree as a rooted simplicial complex on vertices [0, vertex_bound()).
RootedComplex to_complex(const KRootedTree& t);

}  // namespace stochtop
