#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "steercube/linalg.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace steercube::linalg;

namespace {

const cplx I{0.0, 1.0};

HermitianMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return HermitianMatrix(m);
}

HermitianMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m(0, 1) = -I;
    m(1, 0) = I;
    return HermitianMatrix(m);
}

HermitianMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return HermitianMatrix(m);
}

HermitianMatrix random_hermitian(std::size_t n, RandomStream& rng) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
    return HermitianMatrix(m);
}

ComplexMatrix random_complex(std::size_t r, std::size_t c, RandomStream& rng) {
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.complex_normal();
    return m;
}

double reconstruction_residual(const HermitianMatrix& h, const Spectrum& sp) {
    const std::size_t n = h.dim();
    ComplexMatrix lam(n, n);
    for (std::size_t i = 0; i < n; ++i) lam(i, i) = sp.eigenvalues[i];
    const ComplexMatrix rec = sp.eigenvectors * lam * sp.eigenvectors.adjoint();
    return (rec - h.mat()).max_abs();
}

}  // namespace

TEST_CASE("eig_hermitian on diagonal and Pauli inputs") {
    const std::vector<double> d{2.0, -1.0};
    const Spectrum sp = eig_hermitian(HermitianMatrix::diagonal(d));
    CHECK(sp.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sp.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));

    const Spectrum spx = eig_hermitian(pauli_x());
    CHECK(spx.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spx.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian reconstruction and unitarity on random 8x8") {
    RandomStream rng(11, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const HermitianMatrix h = random_hermitian(8, rng);
        const Spectrum sp = eig_hermitian(h);
        CHECK(reconstruction_residual(h, sp) <= 1e-9 * h.max_abs());
        const ComplexMatrix vv = sp.eigenvectors.adjoint() * sp.eigenvectors;
        CHECK((vv - ComplexMatrix::identity(8)).max_abs() <= 1e-10);
        for (std::size_t k = 0; k + 1 < 8; ++k)
            CHECK(sp.eigenvalues[k] >= sp.eigenvalues[k + 1]);
    }
}

TEST_CASE("lambda_max basics") {
    CHECK(lambda_max(HermitianMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(lambda_max(pauli_x() + pauli_z()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(lambda_max(-1.0 * HermitianMatrix::identity(3)) == doctest::Approx(-1.0));
}

TEST_CASE("lambda_max invariant under unitary conjugation") {
    RandomStream rng(12, 0);
    for (int trial = 0; trial < 8; ++trial) {
        const HermitianMatrix h = random_hermitian(5, rng);
        const ComplexMatrix u = haar_unitary(5, rng);
        const HermitianMatrix hu = sandwich(u.adjoint(), h);
        CHECK(lambda_max(hu) == doctest::Approx(lambda_max(h)).epsilon(1e-9));
    }
}

TEST_CASE("kron identities") {
    const ComplexMatrix i6 = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(3));
    CHECK((i6 - ComplexMatrix::identity(6)).max_abs() == 0.0);

    const ComplexMatrix zz = kron(pauli_z().mat(), pauli_z().mat());
    CHECK(zz(0, 0) == cplx(1.0));
    CHECK(zz(1, 1) == cplx(-1.0));
    CHECK(zz(2, 2) == cplx(-1.0));
    CHECK(zz(3, 3) == cplx(1.0));

    RandomStream rng(13, 0);
    const ComplexMatrix a = random_complex(2, 2, rng), b = random_complex(2, 2, rng);
    const ComplexMatrix c = random_complex(2, 2, rng), d = random_complex(2, 2, rng);
    const ComplexMatrix lhs = kron(a * b, c * d);
    const ComplexMatrix rhs = kron(a, c) * kron(b, d);
    CHECK((lhs - rhs).max_abs() <= 1e-12);
}

TEST_CASE("partial_trace_first") {
    RandomStream rng(14, 0);
    const ComplexMatrix a = random_complex(3, 3, rng), b = random_complex(4, 4, rng);
    const ComplexMatrix t1 = partial_trace_first(kron(a, b), 3, 4);
    const ComplexMatrix expect = a.trace() * b;
    CHECK((t1 - expect).max_abs() <= 1e-12);

    const ComplexMatrix id = ComplexMatrix::identity(6 * 3);
    const ComplexMatrix t2 = partial_trace_first(id, 6, 3);
    CHECK((t2 - cplx(6.0) * ComplexMatrix::identity(3)).max_abs() <= 1e-12);

    const ComplexMatrix m = random_complex(12, 12, rng);
    CHECK(std::abs(partial_trace_first(m, 3, 4).trace() - m.trace()) <= 1e-12);
}

TEST_CASE("polar_sign") {
    const std::vector<double> d{2.0, -3.0};
    const ComplexMatrix p = polar_sign(HermitianMatrix::diagonal(d));
    CHECK(std::abs(p(0, 0) - cplx(1.0)) <= 1e-14);
    CHECK(std::abs(p(1, 1) - cplx(-1.0)) <= 1e-14);

    const std::vector<double> pd{1.0, 0.5, 2.0};
    const ComplexMatrix pp = polar_sign(HermitianMatrix::diagonal(pd));
    CHECK((pp - ComplexMatrix::identity(3)).max_abs() <= 1e-14);

    RandomStream rng(15, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const HermitianMatrix b = random_hermitian(5, rng);
        const ComplexMatrix pol = polar_sign(b);
        const cplx tr = (b.mat() * pol.adjoint()).trace();
        CHECK(tr.real() == doctest::Approx(trace_norm(b)).epsilon(1e-9));
        CHECK(std::abs(tr.imag()) <= 1e-9);
        // Pol(B)|B| = B
        const HermitianMatrix absb = herm_sqrt(HermitianMatrix(b.mat() * b.mat()));
        CHECK((pol * absb.mat() - b.mat()).max_abs() <= 1e-9);
    }
}

TEST_CASE("trace and operator norms") {
    const std::vector<double> d{1.0, -1.0};
    const HermitianMatrix h = HermitianMatrix::diagonal(d);
    CHECK(trace_norm(h) == doctest::Approx(2.0));
    CHECK(op_norm(h) == doctest::Approx(1.0));

    const HermitianMatrix hx = (1.0 / std::sqrt(2.0)) * pauli_x();
    CHECK(op_norm(hx) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    RandomStream rng(16, 0);
    for (int trial = 0; trial < 8; ++trial) {
        const HermitianMatrix b = random_hermitian(6, rng);
        const double tn = trace_norm(b), on = op_norm(b);
        CHECK(on <= tn + 1e-12);
        CHECK(tn <= 6.0 * on + 1e-12);
    }
}

TEST_CASE("real_embedding structure and spectra") {
    // Real symmetric input: embedding is block-diagonal (H, H).
    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.5;
    m(1, 1) = -2.0;
    const HermitianMatrix h(m);
    const RealMatrix s = real_embedding(h);
    CHECK(s(0, 1) == doctest::Approx(0.5));
    CHECK(s(2, 3) == doctest::Approx(0.5));
    CHECK(s(0, 2) == doctest::Approx(0.0));
    CHECK(s(0, 3) == doctest::Approx(0.0));

    // sigma_Y embeds to a 4x4 with eigenvalues (1, 1, -1, -1).
    const RealSpectrum ry = eig_symmetric(real_embedding(pauli_y()));
    CHECK(ry.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ry.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ry.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ry.eigenvalues[3] == doctest::Approx(-1.0).epsilon(1e-12));

    RandomStream rng(17, 0);
    for (int trial = 0; trial < 6; ++trial) {
        const HermitianMatrix hr = random_hermitian(4, rng);
        const RealMatrix e = real_embedding(hr);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) CHECK(e(i, j) == doctest::Approx(e(j, i)));
        // Doubled multiplicities: sorted embedding spectrum equals duplicated spectrum.
        const Spectrum sp = eig_hermitian(hr);
        const RealSpectrum rsp = eig_symmetric(e);
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(rsp.eigenvalues[2 * k] == doctest::Approx(sp.eigenvalues[k]).epsilon(1e-9));
            CHECK(rsp.eigenvalues[2 * k + 1] == doctest::Approx(sp.eigenvalues[k]).epsilon(1e-9));
        }
        // Round trip through unembed.
        const HermitianMatrix back = unembed_symmetric(e);
        CHECK((back.mat() - hr.mat()).max_abs() <= 1e-13);
    }
}

TEST_CASE("haar_unitary unitarity and moments") {
    RandomStream rng(18, 0);
    for (std::size_t d : {1, 2, 5}) {
        const ComplexMatrix u = haar_unitary(d, rng);
        CHECK((u.adjoint() * u - ComplexMatrix::identity(d)).max_abs() <= 1e-10);
    }

    // d = 1: uniform phase, empirical mean close to 0.
    RandomStream rng1(19, 0);
    cplx acc = 0.0;
    const int n1 = 100000;
    for (int k = 0; k < n1; ++k) acc += haar_unitary(1, rng1)(0, 0);
    CHECK(std::abs(acc) / n1 <= 0.02);

    // E|U_11|^2 = 1/d within 3 standard errors.
    RandomStream rng2(20, 0);
    const std::size_t d = 3;
    const int n2 = 20000;
    double mean = 0.0, m2 = 0.0;
    for (int k = 0; k < n2; ++k) {
        const double v = std::norm(haar_unitary(d, rng2)(0, 0));
        mean += v;
        m2 += v * v;
    }
    mean /= n2;
    const double var = m2 / n2 - mean * mean;
    const double se = std::sqrt(var / n2);
    CHECK(std::abs(mean - 1.0 / d) <= 3.0 * se);
}

TEST_CASE("complex_gaussian_vector moments") {
    RandomStream rng(21, 0);
    const int n = 1000000;
    double s1 = 0.0, s2 = 0.0;
    cplx sz = 0.0, sz2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx z = complex_gaussian_vector(1, rng)[0];
        const double a = std::norm(z);
        s1 += a;
        s2 += a * a;
        sz += z;
        sz2 += z * z;
    }
    const double mean = s1 / n;
    const double se = std::sqrt((s2 / n - mean * mean) / n);
    CHECK(std::abs(mean - 1.0) <= 3.0 * se);
    // E z = 0 and E z^2 = 0 (circular symmetry); component std is ~1/sqrt(2n).
    CHECK(std::abs(sz) / n <= 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sz2) / n <= 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("RandomStream determinism and stream separation") {
    RandomStream a(42, 7), b(42, 7), c(42, 8);
    bool identical = true, distinct = false;
    for (int k = 0; k < 1000; ++k) {
        const std::uint64_t va = a.next_u64(), vb = b.next_u64(), vc = c.next_u64();
        identical = identical && (va == vb);
        distinct = distinct || (va != vc);
    }
    CHECK(identical);
    CHECK(distinct);

    RandomStream s1(5, 0);
    RandomStream s2 = s1.split(3), s3 = s1.split(4);
    CHECK(s2.next_u64() != s3.next_u64());
}

TEST_CASE("herm_inv_sqrt and support_isometry on singular input") {
    const std::vector<double> d{4.0, 1.0, 0.0};
    const HermitianMatrix h = HermitianMatrix::diagonal(d);
    const HermitianMatrix is = herm_inv_sqrt(h);
    CHECK(std::abs(is.at(0, 0) - cplx(0.5)) <= 1e-14);
    CHECK(std::abs(is.at(1, 1) - cplx(1.0)) <= 1e-14);
    CHECK(std::abs(is.at(2, 2)) <= 1e-14);

    const ComplexMatrix v = support_isometry(h);
    CHECK(v.cols() == 2);
    CHECK((v.adjoint() * v - ComplexMatrix::identity(2)).max_abs() <= 1e-12);
}
