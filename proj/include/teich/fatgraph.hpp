#pragma once

// Trivalent ribbon graphs stored as a single dart permutation.
//
// Edge i owns darts 2i and 2i+1, and the opposite of dart d is d ^ 1.
// sigma(d) is the next dart anticlockwise around the vertex of d, and faces
// are the orbits of d -> sigma(opposite(d)).

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace teich {

/// Exponent vector in units of z/2: m represents the linear form (m . z) / 2.
using ExpVector = std::vector<int>;

class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, int dart = -1)
      : std::invalid_argument(dart >= 0 ? what + " (dart " + std::to_string(dart) + ")" : what),
        dart_(dart) {}
  int dart() const { return dart_; }

 private:
  int dart_;
};

struct Topology {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
  int holes = 0;
  friend bool operator==(const Topology&, const Topology&) = default;
};

struct Face {
  std::vector<int> darts;
};

/// Antisymmetric integer form on edges: omega(i, j) = {z_i, z_j}.
class OmegaMatrix {
 public:
  explicit OmegaMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  int size() const { return n_; }
  int operator()(int i, int j) const { return data_[idx(i, j)]; }
  int& operator()(int i, int j) { return data_[idx(i, j)]; }

  /// m^T omega n.
  long long pair(const ExpVector& m, const ExpVector& n) const {
    long long acc = 0;
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      long long row = 0;
      for (int j = 0; j < n_; ++j) row += static_cast<long long>((*this)(i, j)) * n[j];
      acc += m[i] * row;
    }
    return acc;
  }

  friend bool operator==(const OmegaMatrix&, const OmegaMatrix&) = default;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<int> data_;
};

class FatGraph {
 public:
  static int opposite(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }

  /// Validates on construction; see validate() for the error cases.
  FatGraph(std::vector<int> sigma, std::vector<double> z)
      : sigma_(std::move(sigma)), z_(std::move(z)) {
    topology_ = check();
  }

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int next(int d) const { return sigma_[d]; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<double>& labels() const { return z_; }
  double label(int edge) const { return z_[edge]; }
  const Topology& topology() const { return topology_; }

  FatGraph with_labels(std::vector<double> z) const { return FatGraph(sigma_, std::move(z)); }

  /// Smallest dart at the vertex of d; identifies the vertex.
  int vertex_of(int d) const {
    int best = d;
    for (int x = sigma_[d]; x != d; x = sigma_[x]) best = std::min(best, x);
    return best;
  }

  std::vector<Face> faces() const {
    std::vector<Face> out;
    std::vector<char> seen(sigma_.size(), 0);
    for (int d = 0; d < dart_count(); ++d) {
      if (seen[d]) continue;
      Face f;
      for (int x = d; !seen[x]; x = sigma_[opposite(x)]) {
        seen[x] = 1;
        f.darts.push_back(x);
      }
      out.push_back(std::move(f));
    }
    return out;
  }

  /// Vertices as dart triples (d, sigma d, sigma^2 d), d the smallest dart.
  std::vector<std::vector<int>> vertices() const {
    std::vector<std::vector<int>> out;
    for (int d = 0; d < dart_count(); ++d)
      if (vertex_of(d) == d) out.push_back({d, sigma_[d], sigma_[sigma_[d]]});
    return out;
  }

  friend bool operator==(const FatGraph& x, const FatGraph& y) {
    return x.sigma_ == y.sigma_ && x.z_ == y.z_;
  }

 private:
  Topology check() const;

  std::vector<int> sigma_;
  std::vector<double> z_;
  Topology topology_;
};

inline Topology FatGraph::check() const {
  const int n = dart_count();
  if (n == 0 || n % 2 != 0) throw GraphError("dart count must be even and positive");
  if (static_cast<int>(z_.size()) != n / 2)
    throw GraphError("expected " + std::to_string(n / 2) + " edge labels, got " +
                     std::to_string(z_.size()));
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    const int s = sigma_[d];
    if (s < 0 || s >= n) throw GraphError("sigma maps outside the dart range", d);
    if (hit[s]) throw GraphError("sigma is not a permutation: repeated image", s);
    hit[s] = 1;
  }
  int vertices = 0;
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    int len = 0;
    for (int x = d; !seen[x]; x = sigma_[x]) {
      seen[x] = 1;
      ++len;
    }
    if (len != 3) throw GraphError("vertex of valence " + std::to_string(len) + ", expected 3", d);
    ++vertices;
  }
  // Connectivity over sigma and opposite.
  std::vector<char> reach(n, 0);
  std::vector<int> stack{0};
  reach[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int x : {sigma_[d], opposite(d)}) {
      if (!reach[x]) {
        reach[x] = 1;
        ++count;
        stack.push_back(x);
      }
    }
  }
  if (count != n) {
    for (int d = 0; d < n; ++d)
      if (!reach[d]) throw GraphError("graph is not connected", d);
  }
  const int edges = n / 2;
  const int faces = static_cast<int>(this->faces().size());
  const int euler = vertices - edges + faces;
  if (euler > 2 || euler % 2 != 0) throw GraphError("inconsistent Euler characteristic");
  const int genus = (2 - euler) / 2;
  if (edges != 6 * genus - 6 + 3 * faces) throw GraphError("inconsistent Euler data");
  return {vertices, edges, faces, genus, faces};
}

inline Topology validate(const FatGraph& g) { return g.topology(); }

inline FatGraph once_punctured_torus(std::vector<double> z = {0.0, 0.0, 0.0}) {
  return FatGraph({2, 3, 4, 5, 0, 1}, std::move(z));
}

/// Planar tetrahedron: vertices 0..3, edges (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
/// with dart 2i pointing from the lower to the higher vertex.
inline FatGraph tetrahedron(std::vector<double> z = std::vector<double>(6, 0.0)) {
  return FatGraph({2, 8, 4, 7, 0, 11, 1, 10, 6, 5, 3, 9}, std::move(z));
}

/// Multiplicity of each edge along the boundary of f.
inline ExpVector face_multiplicity(const FatGraph& g, const Face& f) {
  ExpVector m(g.edge_count(), 0);
  for (int d : f.darts) ++m[FatGraph::edge_of(d)];
  return m;
}

struct Perimeter {
  ExpVector multiplicity;  // e^{perimeter/2} as an exponent vector
  double value = 0.0;
};

inline Perimeter face_perimeter(const FatGraph& g, const Face& f) {
  Perimeter p{face_multiplicity(g, f), 0.0};
  for (int i = 0; i < g.edge_count(); ++i) p.value += p.multiplicity[i] * g.label(i);
  return p;
}

/// Sums +1 on each anticlockwise-consecutive edge pair over all vertices.
inline OmegaMatrix omega_matrix(const FatGraph& g) {
  OmegaMatrix w(g.edge_count());
  for (const auto& v : g.vertices()) {
    for (int k = 0; k < 3; ++k) {
      const int e1 = FatGraph::edge_of(v[k]);
      const int e2 = FatGraph::edge_of(v[(k + 1) % 3]);
      w(e1, e2) += 1;
      w(e2, e1) -= 1;
    }
  }
  return w;
}

}  // namespace teich
