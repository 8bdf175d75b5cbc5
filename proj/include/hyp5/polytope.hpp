#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hyp5/lorentz.hpp"

namespace hyp5 {

enum class SideKind { Large, Small, Coordinate, ThreePerp, Far };

struct Side {
    int index;  // 1-based, in reference order
    Vec6 normal;
    SideKind kind;
};

// Convex polytope {x : x o s <= 0 for all side normals s}.
struct Polytope {
    std::string name;
    std::vector<Side> sides;
    std::vector<Vec6> actual_vertices;
    std::vector<Vec6> ideal_vertices;
};

Polytope build_q5();
Polytope build_p5();

enum class FaceType {
    ActualVertex,
    LargeIdealVertex,
    SmallIdealVertex,
    RayEdge,
    LineEdge,
    Triangle,
    Rhombus,
    IdealSquare,
    OtherPolygon,
    SmallRidge,
    LargeRidge,
    SmallSide,
    LargeSide,
    Cell,
};

const char* to_string(FaceType t);

struct Face {
    int dim = 0;
    std::vector<int> sides;     // 0-based side indices
    std::vector<int> vertices;  // ids into FaceLattice::vertices
    FaceType type = FaceType::Cell;
    std::vector<int> facets;    // codimension-one subfaces
    std::vector<int> cofacets;
};

struct FaceLattice {
    Polytope polytope;
    std::vector<Vec6> vertices;  // actual vertices first, then ideal
    std::vector<bool> ideal;
    std::vector<Face> faces;
    std::array<std::vector<int>, 6> by_dim;
    int top = -1;  // the 5-dimensional cell
    std::map<std::vector<int>, int> index_of;

    int vertex_id(const Vec6& v) const;          // throws if unknown
    int face_of_vertex(int vertex) const { return by_dim[0][vertex]; }
    // Face with exactly this (sorted) vertex set, or -1.
    int find(const std::vector<int>& sorted_vertices) const;

    std::array<long, 5> f_vector() const;
    long euler_sum() const;  // f0 - f1 + f2 - f3 + f4 - 1
    std::map<FaceType, long> typed_counts() const;

    std::vector<int> incident_sides(const Vec6& vertex) const;
    std::vector<int> faces_of_side(int side, int dim) const;
};

// Throws std::logic_error if the vertex data contradicts the half-space data.
FaceLattice face_lattice(const Polytope& p);

// The 3840 signed permutation matrices of the first five coordinates.
std::vector<Mat6> q5_symmetry_group();

// Index of the side with this normal, or -1.
int side_with_normal(const Polytope& p, const Vec6& n);

}  // namespace hyp5
