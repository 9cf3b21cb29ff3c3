#pragma once

#include <vector>

#include "krall/matrix.hpp"
#include "krall/rat.hpp"

namespace krall {

/// Exact linear system A x = rhs over Rat.
struct LinSystem {
    Matrix<Rat> a;
    std::vector<Rat> rhs;
};

enum class SolveKind { Unique, Affine, Infeasible };

/// Exact solution set classification. For Affine, `particular` is one
/// solution and `nullspace` a basis of the homogeneous solutions (the affine
/// dimension is nullspace.size()).
struct LinearSolution {
    SolveKind kind = SolveKind::Infeasible;
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> nullspace;
};

LinearSolution linsolve(const LinSystem& sys);

}  // namespace krall
