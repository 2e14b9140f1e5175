#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace steercube::linalg {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

/// Self-adjoint complex matrix. Construction symmetrizes the input as
/// (M + M†)/2, which absorbs roundoff from arithmetic chains.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix& m);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix zero(std::size_t n);
    static HermitianMatrix diagonal(std::span<const double> d);

    std::size_t dim() const { return m_.rows(); }
    cplx at(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ComplexMatrix& mat() const { return m_; }

    double max_abs() const { return m_.max_abs(); }
    double trace_real() const { return m_.trace().real(); }
    bool is_zero(double tol = 0.0) const { return m_.max_abs() <= tol; }

    HermitianMatrix& operator+=(const HermitianMatrix& o);
    HermitianMatrix& operator-=(const HermitianMatrix& o);
    HermitianMatrix& operator*=(double s);

private:
    ComplexMatrix m_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double s, const HermitianMatrix& a);

/// Full spectral decomposition: eigenvalues sorted descending, eigenvector
/// matrix unitary with columns matching the eigenvalue order.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Deterministic random stream. Identical (seed, stream_id) pairs reproduce
/// identical draws; distinct stream ids give statistically independent
/// streams suitable for parallel Monte-Carlo batches.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64();
    double uniform();  // [0, 1)
    double normal();   // N(0, 1)
    cplx complex_normal();  // E|z|^2 = 1

    RandomStream split(std::uint64_t k) const;

private:
    std::uint64_t seed_ = 0, stream_ = 0;
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

Spectrum eig_hermitian(const HermitianMatrix& h);
double lambda_max(const HermitianMatrix& h);
double lambda_min(const HermitianMatrix& h);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Trace over the first tensor factor: M acts on C^{dim_first} (x) C^{dim_second}.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_first,
                                  std::size_t dim_second);

/// Unitary sign factor of the polar decomposition B = Pol(B)|B|, with the
/// convention sign(0) = +1 on the kernel.
ComplexMatrix polar_sign(const HermitianMatrix& b);

double trace_norm(const HermitianMatrix& b);
double op_norm(const HermitianMatrix& b);
double op_norm_general(const ComplexMatrix& m);

HermitianMatrix herm_sqrt(const HermitianMatrix& h);
/// Pseudo inverse square root on the support (eigenvalues > rel_cutoff * lambda_max).
HermitianMatrix herm_inv_sqrt(const HermitianMatrix& h, double rel_cutoff = 1e-9);
/// Isometry (dim x rank) whose columns span the support of a PSD matrix.
ComplexMatrix support_isometry(const HermitianMatrix& h, double rel_cutoff = 1e-9);
/// a * h * a†, re-symmetrized.
HermitianMatrix sandwich(const ComplexMatrix& a, const HermitianMatrix& h);

ComplexMatrix haar_unitary(std::size_t d, RandomStream& rng);
std::vector<cplx> complex_gaussian_vector(std::size_t d, RandomStream& rng);

/// Dense real matrix, row-major.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols);

    static RealMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    double max_abs() const;
    std::vector<double>& data() { return a_; }
    const std::vector<double>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

struct RealSpectrum {
    std::vector<double> eigenvalues;  // descending
    RealMatrix eigenvectors;          // orthogonal, columns
};

/// [[Re H, -Im H], [Im H, Re H]]: symmetric, PSD iff H is, doubles every
/// eigenvalue multiplicity.
RealMatrix real_embedding(const HermitianMatrix& h);
/// Inverse of real_embedding for general symmetric input, averaging away the
/// part that does not commute with the complex structure.
HermitianMatrix unembed_symmetric(const RealMatrix& s);

RealSpectrum eig_symmetric(const RealMatrix& s);

}  // namespace steercube::linalg
