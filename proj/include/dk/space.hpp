#pragma once

// Finite rooted trees as models of countable compact metric spaces.
//
// A node stands for one uniformity class of points of the realized space:
// leaves are classes of isolated points, and an internal node is the limit of
// infinitely many shrinking copies of each of its child subtrees. Under that
// reading, for node-uniform data:
//   * the points accumulating at a node x are exactly the classes of the
//     strict descendants of x (plus x itself, for non-exclusive limits),
//   * a set is open iff it is descendant-closed, closed iff ancestor-closed,
//   * the n-th derived set of the space is {x : height(x) >= n}.
//
// Values of this type are immutable after construction. NodeSet and the
// function types hold a pointer to their TreeSpace, so a space must stay at a
// fixed address for as long as anything derived from it is alive.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dk {

struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& m) : std::runtime_error(m) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& m) : std::runtime_error(m) {}
};

class TreeSpace {
 public:
  // Edges are (parent, child) pairs. Every node must appear in `nodes`;
  // duplicate ids, duplicate edges, multiple parents, multiple roots and
  // cycles are structural errors.
  static TreeSpace build(const std::vector<std::string>& nodes,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
    if (nodes.empty()) throw structural_error("space must have at least one node");
    TreeSpace sp;
    sp.ids_ = nodes;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
      if (!sp.index_.emplace(nodes[i], i).second)
        throw structural_error("duplicate node id: " + nodes[i]);
    }
    const int n = static_cast<int>(nodes.size());
    sp.parent_.assign(n, -1);
    std::vector<std::pair<int, int>> seen;
    for (const auto& [p, c] : edges) {
      auto ip = sp.index_.find(p), ic = sp.index_.find(c);
      if (ip == sp.index_.end()) throw structural_error("edge references unknown node: " + p);
      if (ic == sp.index_.end()) throw structural_error("edge references unknown node: " + c);
      std::pair<int, int> e{ip->second, ic->second};
      if (std::find(seen.begin(), seen.end(), e) != seen.end())
        throw structural_error("duplicate edge: " + p + " -> " + c);
      seen.push_back(e);
      if (e.first == e.second) throw structural_error("self-loop at node: " + p);
      if (sp.parent_[e.second] != -1)
        throw structural_error("node has two parents: " + c);
      sp.parent_[e.second] = e.first;
    }
    int root = -1;
    for (int i = 0; i < n; ++i) {
      if (sp.parent_[i] == -1) {
        if (root != -1)
          throw structural_error("multiple roots: " + sp.ids_[root] + ", " + sp.ids_[i]);
        root = i;
      }
    }
    if (root == -1) throw structural_error("no root (parent relation has a cycle)");
    sp.root_ = root;
    // Reject cycles among non-root nodes: every node must reach the root.
    for (int i = 0; i < n; ++i) {
      int steps = 0, x = i;
      while (x != root) {
        x = sp.parent_[x];
        if (++steps > n) throw structural_error("parent relation has a cycle");
      }
    }
    sp.finish();
    return sp;
  }

  // Path space P_n: nodes v0..vn, parent(v_j) = v_{j+1}, root vn.
  // The realized space has derived sets {v_j : j >= k}, k = 0..n.
  static TreeSpace path(int n) {
    if (n < 0) throw structural_error("path length must be >= 0");
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int j = 0; j <= n; ++j) nodes.push_back("v" + std::to_string(j));
    for (int j = 0; j < n; ++j) edges.emplace_back(nodes[j + 1], nodes[j]);
    return build(nodes, edges);
  }

  // Root with `k` leaf children.
  static TreeSpace star(int k) {
    std::vector<std::string> nodes{"root"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int j = 0; j < k; ++j) {
      nodes.push_back("leaf" + std::to_string(j));
      edges.emplace_back("root", nodes.back());
    }
    return build(nodes, edges);
  }

  // Parent-vector form: parent[i] < i required except parent[root] == -1.
  static TreeSpace from_parents(const std::vector<int>& parent) {
    std::vector<std::string> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    for (size_t i = 0; i < parent.size(); ++i) nodes.push_back("n" + std::to_string(i));
    for (size_t i = 0; i < parent.size(); ++i)
      if (parent[i] >= 0) edges.emplace_back(nodes[parent[i]], nodes[i]);
    return build(nodes, edges);
  }

  int size() const { return static_cast<int>(ids_.size()); }
  int root() const { return root_; }
  int parent(int x) const { return parent_[x]; }
  int height() const { return height_[root_]; }
  int node_height(int x) const { return height_[x]; }
  const std::string& label(int x) const { return ids_[x]; }

  int index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw structural_error("unknown node id: " + id);
    return it->second;
  }
  bool has(const std::string& id) const { return index_.count(id) != 0; }

  // a is a strict ancestor of d (equivalently d a strict descendant of a).
  bool strict_ancestor(int a, int d) const { return anc_[a][d] != 0; }
  const std::vector<int>& strict_descendants(int x) const { return desc_[x]; }

 private:
  TreeSpace() = default;

  void finish() {
    const int n = size();
    height_.assign(n, 0);
    // children-first pass for subtree heights
    std::vector<std::vector<int>> children(n);
    for (int i = 0; i < n; ++i)
      if (parent_[i] >= 0) children[parent_[i]].push_back(i);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root_};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order.push_back(x);
      for (int c : children[x]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      for (int c : children[*it]) height_[*it] = std::max(height_[*it], height_[c] + 1);

    anc_.assign(n, std::vector<uint8_t>(n, 0));
    desc_.assign(n, {});
    for (int d = 0; d < n; ++d)
      for (int a = parent_[d]; a != -1; a = parent_[a]) {
        anc_[a][d] = 1;
        desc_[a].push_back(d);
      }
    for (auto& v : desc_) std::sort(v.begin(), v.end());
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> parent_;
  int root_ = 0;
  std::vector<int> height_;
  std::vector<std::vector<uint8_t>> anc_;
  std::vector<std::vector<int>> desc_;
};

// A node-uniform subset of the realized space, as a subset of tree nodes.
class NodeSet {
 public:
  explicit NodeSet(const TreeSpace& sp) : sp_(&sp), m_(sp.size(), 0) {}

  static NodeSet all(const TreeSpace& sp) {
    NodeSet s(sp);
    std::fill(s.m_.begin(), s.m_.end(), 1);
    return s;
  }
  static NodeSet of(const TreeSpace& sp, std::initializer_list<const char*> ids) {
    NodeSet s(sp);
    for (const char* id : ids) s.add(sp.index_of(id));
    return s;
  }
  static NodeSet of_ids(const TreeSpace& sp, const std::vector<std::string>& ids) {
    NodeSet s(sp);
    for (const auto& id : ids) s.add(sp.index_of(id));
    return s;
  }
  static NodeSet of_indices(const TreeSpace& sp, const std::vector<int>& ix) {
    NodeSet s(sp);
    for (int i : ix) s.add(i);
    return s;
  }

  const TreeSpace& space() const { return *sp_; }
  bool contains(int x) const { return m_[x] != 0; }
  void add(int x) { m_[x] = 1; }
  void remove(int x) { m_[x] = 0; }

  int count() const { return static_cast<int>(std::count(m_.begin(), m_.end(), 1)); }
  bool empty() const { return std::find(m_.begin(), m_.end(), 1) == m_.end(); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(m_.size()); ++i)
      if (m_[i]) out.push_back(i);
    return out;
  }
  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (int i : indices()) out.push_back(sp_->label(i));
    return out;
  }
  // Byte key for hashing visited subsets in searches.
  std::string key() const { return std::string(m_.begin(), m_.end()); }

  friend NodeSet operator|(const NodeSet& a, const NodeSet& b) {
    a.check(b);
    NodeSet r(*a.sp_);
    for (size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] | b.m_[i];
    return r;
  }
  friend NodeSet operator&(const NodeSet& a, const NodeSet& b) {
    a.check(b);
    NodeSet r(*a.sp_);
    for (size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] & b.m_[i];
    return r;
  }
  friend NodeSet operator-(const NodeSet& a, const NodeSet& b) {
    a.check(b);
    NodeSet r(*a.sp_);
    for (size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] & static_cast<uint8_t>(!b.m_[i]);
    return r;
  }
  NodeSet complement() const { return all(*sp_) - *this; }
  bool operator==(const NodeSet& b) const {
    check(b);
    return m_ == b.m_;
  }
  bool operator!=(const NodeSet& b) const { return !(*this == b); }
  bool subset_of(const NodeSet& b) const {
    check(b);
    for (size_t i = 0; i < m_.size(); ++i)
      if (m_[i] && !b.m_[i]) return false;
    return true;
  }
  bool intersects(const NodeSet& b) const {
    check(b);
    for (size_t i = 0; i < m_.size(); ++i)
      if (m_[i] && b.m_[i]) return true;
    return false;
  }

 private:
  void check(const NodeSet& b) const {
    if (sp_ != b.sp_) throw structural_error("node sets live on different spaces");
  }
  const TreeSpace* sp_;
  std::vector<uint8_t> m_;
};

// --- point-set kernels, all relative to a carrier L (L = whole space gives
// --- the absolute versions) -------------------------------------------------

// cl_L(S) = (S cap L) + { x in L : some strict descendant of x lies in S cap L }
inline NodeSet closure_in(const NodeSet& S, const NodeSet& L) {
  const TreeSpace& sp = S.space();
  NodeSet r(sp);
  NodeSet SL = S & L;
  for (int x : L.indices()) {
    if (SL.contains(x)) {
      r.add(x);
      continue;
    }
    for (int y : sp.strict_descendants(x))
      if (SL.contains(y)) {
        r.add(x);
        break;
      }
  }
  return r;
}

inline NodeSet closure(const NodeSet& S) { return closure_in(S, NodeSet::all(S.space())); }

// Derived set of the view L: members of L accumulated by other members of L.
inline NodeSet derived_in(const NodeSet& L) {
  const TreeSpace& sp = L.space();
  NodeSet r(sp);
  for (int x : L.indices())
    for (int y : sp.strict_descendants(x))
      if (L.contains(y)) {
        r.add(x);
        break;
      }
  return r;
}

// Boundary of A cap L relative to L.
inline NodeSet boundary_rel(const NodeSet& A, const NodeSet& L) {
  return closure_in(A, L) & closure_in(L - A, L);
}

inline NodeSet boundary(const NodeSet& A) { return boundary_rel(A, NodeSet::all(A.space())); }

// int_A(B): members of B cap A all of whose strict descendants inside A stay in B.
inline NodeSet interior_rel(const NodeSet& B, const NodeSet& A) {
  const TreeSpace& sp = B.space();
  NodeSet r(sp);
  for (int x : (B & A).indices()) {
    bool ok = true;
    for (int y : sp.strict_descendants(x))
      if (A.contains(y) && !B.contains(y)) {
        ok = false;
        break;
      }
    if (ok) r.add(x);
  }
  return r;
}

inline bool is_closed_in(const NodeSet& S, const NodeSet& L) { return closure_in(S, L) == (S & L); }
inline bool is_closed(const NodeSet& S) { return closure(S) == S; }
inline bool is_open_in(const NodeSet& S, const NodeSet& L) { return is_closed_in(L - S, L); }
inline bool is_open(const NodeSet& S) { return is_closed(S.complement()); }

inline bool is_nowhere_dense(const NodeSet& B, const NodeSet& A) {
  if (!B.subset_of(A)) throw precondition_error("is_nowhere_dense: B must be a subset of A");
  return interior_rel(closure_in(B, A), A).empty();
}

// --- induced subspace view ---------------------------------------------------

// Restriction of the model to a carrier set; the strict-descendant relation is
// the induced one, and every kernel above, called with carrier L, agrees with
// the relative topology of this view.
class SpaceView {
 public:
  explicit SpaceView(NodeSet carrier) : carrier_(std::move(carrier)) {}

  const NodeSet& carrier() const { return carrier_; }
  const TreeSpace& space() const { return carrier_.space(); }
  std::vector<int> nodes() const { return carrier_.indices(); }

  bool strict_descendant(int anc, int desc) const {
    return carrier_.contains(anc) && carrier_.contains(desc) &&
           space().strict_ancestor(anc, desc);
  }
  // Height of x inside the view: longest induced descending chain below x.
  int view_height(int x) const {
    int best = 0;
    for (int y : space().strict_descendants(x))
      if (carrier_.contains(y)) best = std::max(best, view_height(y) + 1);
    return best;
  }
  int height() const {
    int best = 0;
    for (int x : carrier_.indices()) best = std::max(best, view_height(x));
    return best;
  }
  NodeSet derived_set() const { return derived_in(carrier_); }

 private:
  NodeSet carrier_;
};

inline SpaceView subspace(const NodeSet& L) { return SpaceView(L); }

// --- set classification ------------------------------------------------------

// DCS = difference of two closed sets = closed cap open (locally closed).
// The canonical representation of a DCS W is (cl W, B) with B the boundary of
// W relative to cl W; then W = cl W minus B and B is nowhere dense in cl W.
struct SetClassification {
  bool is_closed = false;
  bool is_open = false;
  bool is_dcs = false;
  int index = 0;  // i(S); always finite on a finite tree
  bool has_canonical = false;
  NodeSet canonical_closed;
  NodeSet canonical_boundary;

  explicit SetClassification(const TreeSpace& sp)
      : canonical_closed(sp), canonical_boundary(sp) {}
};

}  // namespace dk
