#pragma once

#include "steercube/linalg.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace steercube::sdp {

/// Block-diagonal real symmetric matrix (dense storage per block).
class BlockMatrix {
public:
    BlockMatrix() = default;
    explicit BlockMatrix(const std::vector<int>& dims);

    std::size_t num_blocks() const { return blocks_.size(); }
    linalg::RealMatrix& block(std::size_t b) { return blocks_[b]; }
    const linalg::RealMatrix& block(std::size_t b) const { return blocks_[b]; }

    double trace() const;
    double frobenius() const;
    void scale(double s);
    void axpy(double a, const BlockMatrix& x);  // this += a * x
    void symmetrize();

private:
    std::vector<linalg::RealMatrix> blocks_;
};

double inner(const BlockMatrix& a, const BlockMatrix& b);

/// Sparse block-structured symmetric matrix: entries on the upper triangle
/// (row <= col) of each block, implicit mirror below.
struct SparseEntry {
    int block;
    int row;
    int col;
    double value;
};

class SparseSym {
public:
    void add(int block, int row, int col, double value);
    const std::vector<SparseEntry>& entries() const { return ents_; }
    bool empty() const { return ents_.empty(); }

    double dot(const BlockMatrix& x) const;          // <A, X>
    void add_to(BlockMatrix& x, double coef) const;  // X += coef * A
    double frobenius() const;

private:
    std::vector<SparseEntry> ents_;
};

/// Equality-constrained semidefinite program over block PSD cones,
/// minimization convention:
///     min <C, X>  subject to  <A_j, X> = b_j,  X >= 0.
struct SdpProblem {
    std::vector<int> block_dims;
    SparseSym objective;
    std::vector<SparseSym> constraints;
    std::vector<double> rhs;

    /// Optional strictly feasible starting points. When both are present and
    /// verify (positive definite, residual-free), the solver keeps every
    /// iterate primal and dual feasible, so weak duality holds along the
    /// whole run. When absent, the solver first tries to construct such
    /// points itself and otherwise falls back to an infeasible start.
    std::optional<BlockMatrix> primal_start;
    std::optional<std::vector<double>> dual_start;

    /// Checks conformance and linear independence of the constraints
    /// (rank of the Gram matrix). Throws std::invalid_argument on failure.
    void validate() const;
};

enum class SdpStatus { optimal, infeasible_certificate, iteration_cap };

struct SdpSolution {
    SdpStatus status = SdpStatus::iteration_cap;
    BlockMatrix X;
    std::vector<double> y;
    BlockMatrix Z;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    double primal_residual = 0.0;  // ||b - A(X)|| / (1 + ||b||)
    double dual_residual = 0.0;    // ||C - Z - A^T(y)||_F / (1 + ||C||_F)
    double relative_gap = 0.0;
    int iterations = 0;
    /// (primal objective, dual objective) recorded at every iterate.
    std::vector<std::array<double, 2>> iterate_objectives;
};

struct SdpOptions {
    double tol = 1e-8;
    int max_iterations = 200;
    double step_fraction = 0.98;
};

SdpSolution solve(const SdpProblem& p, const SdpOptions& options = {});

enum class FeasStatus { feasible, infeasible, undecided };

struct FeasibilityResult {
    FeasStatus status = FeasStatus::undecided;
    BlockMatrix witness;              // valid when feasible
    std::vector<double> certificate;  // improving ray y: A^T(y) <= 0, b.y > 0
    double margin = 0.0;              // phase-I objective (distance to feasibility)
};

/// Decides feasibility of {X >= 0 : A(X) = b} by phase-I slack minimization.
/// The objective of `p` is ignored.
FeasibilityResult feasibility(const SdpProblem& p, const SdpOptions& options = {});

/// JSON dump of a problem for debugging (block dims, dense matrices, rhs).
std::string to_json(const SdpProblem& p);

// --- Helpers for building SDPs over Hermitian data -------------------------

/// Hermitian basis of the d-dimensional self-adjoint matrices, size d^2:
/// E_kk, then for i < j the pairs E_ij + E_ji and i(E_ij - E_ji).
std::vector<linalg::HermitianMatrix> hermitian_basis(std::size_t d);

/// Appends the entries of coef * real_embedding(a) on block `block`.
void add_embedded(SparseSym& out, int block, double coef, const linalg::HermitianMatrix& a);

}  // namespace steercube::sdp
