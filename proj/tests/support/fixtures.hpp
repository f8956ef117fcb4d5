#pragma once

#include <string>

#include "cech/cochain.hpp"

namespace cech::fixtures {

/// Boundary of a triangle: the circle as a 3-set cover nerve.
inline SimplicialComplex circle() { return SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline SimplicialComplex full_triangle() { return SimplicialComplex::from_facets(3, {{0, 1, 2}}); }

inline SimplicialComplex two_points() { return SimplicialComplex::from_facets(2, {{0}, {1}}); }

/// Minimal 6-vertex triangulation of the real projective plane (vertices 1..6 relabeled to 0..5).
inline SimplicialComplex rp2() {
  const std::vector<Simplex> facets = {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                                       {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
  std::vector<Simplex> shifted;
  for (auto f : facets) {
    for (auto& v : f) --v;
    shifted.push_back(f);
  }
  return SimplicialComplex::from_facets(6, shifted);
}

/// 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus() {
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(7, facets);
}

/// Boundary of the octahedron (S^2) = suspension of the square (S^1).
inline SimplicialComplex octahedron() {
  const SimplicialComplex square = SimplicialComplex::from_facets(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  return suspension(square);
}

inline SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/// 5-vertex Möbius strip: triangles {i, i+1, i+2} mod 5.
inline SimplicialComplex mobius() {
  std::vector<Simplex> facets;
  for (std::size_t i = 0; i < 5; ++i) facets.push_back({i, (i + 1) % 5, (i + 2) % 5});
  return SimplicialComplex::from_facets(5, facets);
}

/// Two circles sharing vertex 0.
inline SimplicialComplex figure_eight() {
  return SimplicialComplex::from_facets(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

inline std::vector<NamedComplex> catalog() {
  return {{"circle", circle()},
          {"full_triangle", full_triangle()},
          {"two_points", two_points()},
          {"rp2", rp2()},
          {"torus", torus()},
          {"octahedron", octahedron()},
          {"tetrahedron_boundary", tetrahedron_boundary()},
          {"mobius", mobius()},
          {"figure_eight", figure_eight()},
          {"suspended_circle", suspension(circle())},
          {"suspended_rp2", suspension(rp2())}};
}

inline CyclicSum Zmod(long n) { return CyclicSum({Integer(n)}); }
inline CyclicSum Z() { return CyclicSum({Integer(0)}); }

}  // namespace cech::fixtures
