#include "steercube/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace steercube::linalg {

namespace {

void check_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc,
                      const char* op) {
    if (ar != br || ac != bc) {
        throw std::invalid_argument(std::string(op) + ": shape mismatch (" +
                                    std::to_string(ar) + "x" + std::to_string(ac) + " vs " +
                                    std::to_string(br) + "x" + std::to_string(bc) + ")");
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, cplx(0.0, 0.0)) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
}

cplx ComplexMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    check_same_shape(rows_, cols_, o.rows_, o.cols_, "operator+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    check_same_shape(rows_, cols_, o.rows_, o.cols_, "operator-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r += b;
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r -= b;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("operator*: inner dim mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= s;
    return r;
}

// ---------------------------------------------------------------------------
// HermitianMatrix
// ---------------------------------------------------------------------------

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("HermitianMatrix: matrix not square");
    const std::size_t n = m.rows();
    m_ = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw std::invalid_argument("HermitianMatrix: non-finite entry");
            m_(i, j) = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) m_(i, i) = cplx(m_(i, i).real(), 0.0);
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    return HermitianMatrix(ComplexMatrix::identity(n));
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
    return HermitianMatrix(ComplexMatrix(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return HermitianMatrix(m);
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
    m_ += o.m_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
    m_ -= o.m_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    m_ *= cplx(s, 0.0);
    return *this;
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix r = a;
    r += b;
    return r;
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    HermitianMatrix r = a;
    r -= b;
    return r;
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    HermitianMatrix r = a;
    r *= s;
    return r;
}

// ---------------------------------------------------------------------------
// RandomStream
// ---------------------------------------------------------------------------

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id) {
    const std::uint64_t s = splitmix64(splitmix64(seed) ^ splitmix64(stream_id * 0x9e3779b97f4a7c15ULL + 1));
    engine_.seed(s);
}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

cplx RandomStream::complex_normal() {
    const double x = normal();
    const double y = normal();
    return cplx(x, y) * std::sqrt(0.5);
}

RandomStream RandomStream::split(std::uint64_t k) const {
    return RandomStream(seed_, splitmix64(stream_ * 0x9e3779b97f4a7c15ULL + k + 1));
}

// ---------------------------------------------------------------------------
// Complex Hermitian eigensolver (cyclic Jacobi)
// ---------------------------------------------------------------------------

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

void sort_descending(std::vector<double>& vals, ComplexMatrix& vecs) {
    const std::size_t n = vals.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
    std::vector<double> sv(n);
    ComplexMatrix svec(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sv[k] = vals[idx[k]];
        for (std::size_t i = 0; i < n; ++i) svec(i, k) = vecs(i, idx[k]);
    }
    vals = std::move(sv);
    vecs = std::move(svec);
}

}  // namespace

Spectrum eig_hermitian(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    if (n == 0) throw std::invalid_argument("eig_hermitian: empty matrix");

    ComplexMatrix a = h.mat();
    ComplexMatrix v = ComplexMatrix::identity(n);
    if (n == 1) return Spectrum{{a(0, 0).real()}, v};

    const double scale = std::max(a.max_abs(), 1e-300);
    const double tol = 1e-15 * scale * static_cast<double>(n);
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double absh = std::abs(apq);
                if (absh <= 1e-18 * scale) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = apq / absh;
                const double tau = (aqq - app) / (2.0 * absh);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = (t * c) * phase;

                // Columns: col_p <- c*col_p - conj(s)*col_q ; col_q <- s*col_p + c*col_q
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                // Rows: row_p <- c*row_p - s*row_q ; row_q <- conj(s)*row_p + c*row_q
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    const double off = offdiag_norm(a);
    if (off > 1e-10 * scale * static_cast<double>(n)) {
        throw std::runtime_error("eig_hermitian: Jacobi did not converge after " +
                                 std::to_string(sweep) + " sweeps, off-diagonal residual " +
                                 std::to_string(off));
    }

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    sort_descending(vals, v);
    return Spectrum{std::move(vals), std::move(v)};
}

double lambda_max(const HermitianMatrix& h) { return eig_hermitian(h).eigenvalues.front(); }

double lambda_min(const HermitianMatrix& h) { return eig_hermitian(h).eigenvalues.back(); }

// ---------------------------------------------------------------------------
// Tensor operations
// ---------------------------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    if (r > (1u << 20) || c > (1u << 20))
        throw std::invalid_argument("kron: result dimension overflow");
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_first,
                                  std::size_t dim_second) {
    const std::size_t n = dim_first * dim_second;
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("partial_trace_first: dimension mismatch");
    ComplexMatrix out(dim_second, dim_second);
    for (std::size_t k = 0; k < dim_second; ++k)
        for (std::size_t l = 0; l < dim_second; ++l) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < dim_first; ++i)
                s += m(i * dim_second + k, i * dim_second + l);
            out(k, l) = s;
        }
    return out;
}

// ---------------------------------------------------------------------------
// Spectral functions
// ---------------------------------------------------------------------------

ComplexMatrix polar_sign(const HermitianMatrix& b) {
    const Spectrum sp = eig_hermitian(b);
    const std::size_t n = b.dim();
    ComplexMatrix p(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double sgn = sp.eigenvalues[k] >= 0.0 ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = sp.eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) += sgn * vik * std::conj(sp.eigenvectors(j, k));
        }
    }
    return p;
}

double trace_norm(const HermitianMatrix& b) {
    double s = 0.0;
    for (double l : eig_hermitian(b).eigenvalues) s += std::abs(l);
    return s;
}

double op_norm(const HermitianMatrix& b) {
    double s = 0.0;
    for (double l : eig_hermitian(b).eigenvalues) s = std::max(s, std::abs(l));
    return s;
}

double op_norm_general(const ComplexMatrix& m) {
    const HermitianMatrix gram(m.adjoint() * m);
    return std::sqrt(std::max(0.0, lambda_max(gram)));
}

namespace {

HermitianMatrix spectral_map(const HermitianMatrix& h, double (*f)(double, double),
                             double aux) {
    const Spectrum sp = eig_hermitian(h);
    const std::size_t n = h.dim();
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fl = f(sp.eigenvalues[k], aux);
        if (fl == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vik = sp.eigenvectors(i, k);
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += fl * vik * std::conj(sp.eigenvectors(j, k));
        }
    }
    return HermitianMatrix(r);
}

}  // namespace

HermitianMatrix herm_sqrt(const HermitianMatrix& h) {
    return spectral_map(
        h, [](double l, double) { return l > 0.0 ? std::sqrt(l) : 0.0; }, 0.0);
}

HermitianMatrix herm_inv_sqrt(const HermitianMatrix& h, double rel_cutoff) {
    const double lmax = std::max(lambda_max(h), 0.0);
    return spectral_map(
        h, [](double l, double cut) { return l > cut ? 1.0 / std::sqrt(l) : 0.0; },
        rel_cutoff * std::max(lmax, 1e-300));
}

ComplexMatrix support_isometry(const HermitianMatrix& h, double rel_cutoff) {
    const Spectrum sp = eig_hermitian(h);
    const double lmax = sp.eigenvalues.empty() ? 0.0 : std::max(sp.eigenvalues.front(), 0.0);
    const double cut = rel_cutoff * std::max(lmax, 1e-300);
    std::size_t rank = 0;
    while (rank < sp.eigenvalues.size() && sp.eigenvalues[rank] > cut) ++rank;
    if (rank == 0) throw std::invalid_argument("support_isometry: matrix has empty support");
    ComplexMatrix v(h.dim(), rank);
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t i = 0; i < h.dim(); ++i) v(i, k) = sp.eigenvectors(i, k);
    return v;
}

HermitianMatrix sandwich(const ComplexMatrix& a, const HermitianMatrix& h) {
    return HermitianMatrix(a * h.mat() * a.adjoint());
}

// ---------------------------------------------------------------------------
// Random sampling
// ---------------------------------------------------------------------------

ComplexMatrix haar_unitary(std::size_t d, RandomStream& rng) {
    if (d == 0) throw std::invalid_argument("haar_unitary: d >= 1 required");
    ComplexMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) g(i, j) = rng.complex_normal();

    // Modified Gram-Schmidt with a second orthogonalization pass. The R
    // factor has positive diagonal by construction, so Q is Haar.
    ComplexMatrix q(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<cplx> v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = g(i, j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj = 0.0;
                for (std::size_t i = 0; i < d; ++i) proj += std::conj(q(i, k)) * v[i];
                for (std::size_t i = 0; i < d; ++i) v[i] -= proj * q(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < d; ++i) nrm += std::norm(v[i]);
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < d; ++i) q(i, j) = v[i] / nrm;
    }
    return q;
}

std::vector<cplx> complex_gaussian_vector(std::size_t d, RandomStream& rng) {
    if (d == 0) throw std::invalid_argument("complex_gaussian_vector: d >= 1 required");
    std::vector<cplx> z(d);
    for (std::size_t i = 0; i < d; ++i) z[i] = rng.complex_normal();
    return z;
}

// ---------------------------------------------------------------------------
// Real symmetric kit
// ---------------------------------------------------------------------------

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double RealMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
}

RealMatrix real_embedding(const HermitianMatrix& h) {
    const std::size_t d = h.dim();
    RealMatrix s(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const cplx v = h.at(i, j);
            s(i, j) = v.real();
            s(i + d, j + d) = v.real();
            s(i, j + d) = -v.imag();
            s(i + d, j) = v.imag();
        }
    return s;
}

HermitianMatrix unembed_symmetric(const RealMatrix& s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0)
        throw std::invalid_argument("unembed_symmetric: need even-dimensional square matrix");
    const std::size_t d = s.rows() / 2;
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const double re = 0.5 * (s(i, j) + s(i + d, j + d));
            const double im = 0.5 * (s(i + d, j) - s(i, j + d));
            m(i, j) = cplx(re, im);
        }
    return HermitianMatrix(m);
}

RealSpectrum eig_symmetric(const RealMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("eig_symmetric: matrix not square");
    const std::size_t n = input.rows();
    if (n == 0) throw std::invalid_argument("eig_symmetric: empty matrix");

    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
    RealMatrix v = RealMatrix::identity(n);
    if (n == 1) return RealSpectrum{{a(0, 0)}, v};

    const double scale = std::max(a.max_abs(), 1e-300);
    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(s);
    };
    const double tol = 1e-15 * scale * static_cast<double>(n);
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_norm() <= tol) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= 1e-18 * scale) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (tau >= 0.0)
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                else
                    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (off_norm() > 1e-10 * scale * static_cast<double>(n))
        throw std::runtime_error("eig_symmetric: Jacobi did not converge");

    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
    std::vector<double> sv(n);
    RealMatrix svec(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        sv[k] = vals[idx[k]];
        for (std::size_t i = 0; i < n; ++i) svec(i, k) = v(i, idx[k]);
    }
    return RealSpectrum{std::move(sv), std::move(svec)};
}

}  // namespace steercube::linalg
