#include "steercube/sdp.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace steercube::sdp {

using linalg::RealMatrix;

// ---------------------------------------------------------------------------
// BlockMatrix / SparseSym
// ---------------------------------------------------------------------------

BlockMatrix::BlockMatrix(const std::vector<int>& dims) {
    blocks_.reserve(dims.size());
    for (int d : dims) {
        if (d <= 0) throw std::invalid_argument("BlockMatrix: block dims must be positive");
        blocks_.emplace_back(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    }
}

double BlockMatrix::trace() const {
    double t = 0.0;
    for (const auto& b : blocks_)
        for (std::size_t i = 0; i < b.rows(); ++i) t += b(i, i);
    return t;
}

double BlockMatrix::frobenius() const {
    double s = 0.0;
    for (const auto& b : blocks_)
        for (double v : b.data()) s += v * v;
    return std::sqrt(s);
}

void BlockMatrix::scale(double s) {
    for (auto& b : blocks_)
        for (double& v : b.data()) v *= s;
}

void BlockMatrix::axpy(double a, const BlockMatrix& x) {
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        auto& dst = blocks_[k].data();
        const auto& src = x.blocks_[k].data();
        for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += a * src[i];
    }
}

void BlockMatrix::symmetrize() {
    for (auto& b : blocks_) {
        const std::size_t n = b.rows();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double v = 0.5 * (b(i, j) + b(j, i));
                b(i, j) = v;
                b(j, i) = v;
            }
    }
}

double inner(const BlockMatrix& a, const BlockMatrix& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.num_blocks(); ++k) {
        const auto& x = a.block(k).data();
        const auto& y = b.block(k).data();
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    }
    return s;
}

void SparseSym::add(int block, int row, int col, double value) {
    if (value == 0.0) return;
    if (row > col) std::swap(row, col);
    ents_.push_back({block, row, col, value});
}

double SparseSym::dot(const BlockMatrix& x) const {
    double s = 0.0;
    for (const auto& e : ents_) {
        const auto& b = x.block(static_cast<std::size_t>(e.block));
        if (e.row == e.col)
            s += e.value * b(e.row, e.col);
        else
            s += e.value * (b(e.row, e.col) + b(e.col, e.row));
    }
    return s;
}

void SparseSym::add_to(BlockMatrix& x, double coef) const {
    for (const auto& e : ents_) {
        auto& b = x.block(static_cast<std::size_t>(e.block));
        b(e.row, e.col) += coef * e.value;
        if (e.row != e.col) b(e.col, e.row) += coef * e.value;
    }
}

double SparseSym::frobenius() const {
    double s = 0.0;
    for (const auto& e : ents_) s += (e.row == e.col ? 1.0 : 2.0) * e.value * e.value;
    return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Dense helpers
// ---------------------------------------------------------------------------

namespace {

RealMatrix mul(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

RealMatrix sym_part(const RealMatrix& a) {
    RealMatrix r(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) r(i, j) = 0.5 * (a(i, j) + a(j, i));
    return r;
}

bool cholesky_lower(const RealMatrix& a, RealMatrix& lower) {
    const std::size_t n = a.rows();
    lower = RealMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
        if (!(d > 0.0)) return false;
        const double ljj = std::sqrt(d);
        lower(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            lower(i, j) = s / ljj;
        }
    }
    return true;
}

// Solves L W = B columnwise (L lower triangular).
RealMatrix forward_solve(const RealMatrix& l, const RealMatrix& b) {
    const std::size_t n = l.rows(), m = b.cols();
    RealMatrix w(n, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(i, j);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * w(k, j);
            w(i, j) = s / l(i, i);
        }
    return w;
}

// (L L^T)^{-1} from the Cholesky factor.
RealMatrix chol_inverse(const RealMatrix& l) {
    const std::size_t n = l.rows();
    const RealMatrix w = forward_solve(l, RealMatrix::identity(n));  // w = L^{-1}
    RealMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = i; k < n; ++k) s += w(k, i) * w(k, j);
            inv(i, j) = s;
            inv(j, i) = s;
        }
    return inv;
}

// Solves (L L^T) x = b for a vector.
std::vector<double> chol_solve_vec(const RealMatrix& l, const std::vector<double>& b) {
    const std::size_t n = l.rows();
    std::vector<double> x(b);
    for (std::size_t i = 0; i < n; ++i) {
        double s = x[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
        x[i] = s / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        double s = x[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

// Largest algebraic eigenvalue of a symmetric matrix, power iteration with a
// spectral shift. Approximate; callers verify steps with a Cholesky check.
double approx_lambda_max(const RealMatrix& n_mat) {
    const std::size_t n = n_mat.rows();
    if (n == 1) return n_mat(0, 0);
    double fro = 0.0;
    for (double v : n_mat.data()) fro += v * v;
    fro = std::sqrt(fro);
    if (fro == 0.0) return 0.0;
    const double c = fro;  // shift: c*I + N is PSD
    std::vector<double> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i % 17);
    double lam = 0.0;
    for (int it = 0; it < 120; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = c * v[i];
            for (std::size_t j = 0; j < n; ++j) s += n_mat(i, j) * v[j];
            w[i] = s;
        }
        double nrm = 0.0;
        for (double x : w) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        double ray = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= nrm;
            ray += w[i] * v[i];
        }
        const double next = nrm - c;
        v.swap(w);
        if (it > 8 && std::abs(next - lam) <= 1e-6 * (1.0 + std::abs(next))) {
            lam = next;
            break;
        }
        lam = next;
    }
    return lam;
}

struct BlockChol {
    std::vector<RealMatrix> lower;
    bool ok = false;
};

BlockChol block_cholesky(const BlockMatrix& s) {
    BlockChol c;
    c.lower.resize(s.num_blocks());
    for (std::size_t b = 0; b < s.num_blocks(); ++b)
        if (!cholesky_lower(s.block(b), c.lower[b])) return c;
    c.ok = true;
    return c;
}

// Largest step alpha with S + alpha * D staying positive definite, scaled by
// `fraction` and verified by Cholesky.
double max_step(const BlockMatrix& s, const BlockChol& chol, const BlockMatrix& d,
                double fraction) {
    double alpha = 1.0;
    for (std::size_t b = 0; b < s.num_blocks(); ++b) {
        const RealMatrix f = forward_solve(chol.lower[b], d.block(b));
        RealMatrix ft(f.cols(), f.rows());
        for (std::size_t i = 0; i < f.rows(); ++i)
            for (std::size_t j = 0; j < f.cols(); ++j) ft(j, i) = f(i, j);
        const RealMatrix nb = forward_solve(chol.lower[b], ft);  // L^{-1} D L^{-T}
        RealMatrix neg = sym_part(nb);
        for (double& v : neg.data()) v = -v;
        const double lam = approx_lambda_max(neg);
        if (lam > 1e-300) alpha = std::min(alpha, fraction / lam);
    }
    alpha = std::min(alpha, 1.0);
    // Verify strict feasibility of the step; shrink on failure.
    for (int tries = 0; tries < 60 && alpha > 1e-14; ++tries) {
        BlockMatrix trial = s;
        trial.axpy(alpha, d);
        if (block_cholesky(trial).ok) return alpha;
        alpha *= 0.8;
    }
    return 0.0;
}

}  // namespace

// ---------------------------------------------------------------------------
// Problem validation
// ---------------------------------------------------------------------------

void SdpProblem::validate() const {
    if (block_dims.empty()) throw std::invalid_argument("SdpProblem: no blocks");
    for (int d : block_dims)
        if (d <= 0) throw std::invalid_argument("SdpProblem: block dims must be positive");
    if (constraints.size() != rhs.size())
        throw std::invalid_argument("SdpProblem: constraints/rhs size mismatch");
    if (constraints.empty()) throw std::invalid_argument("SdpProblem: no constraints");

    auto check_entries = [&](const SparseSym& a, const char* what) {
        for (const auto& e : a.entries()) {
            if (e.block < 0 || e.block >= static_cast<int>(block_dims.size()) ||
                e.row < 0 || e.col >= block_dims[static_cast<std::size_t>(e.block)] ||
                e.row > e.col || !std::isfinite(e.value))
                throw std::invalid_argument(std::string("SdpProblem: bad entry in ") + what);
        }
    };
    check_entries(objective, "objective");
    for (const auto& a : constraints) check_entries(a, "constraint");

    // Linear independence via the rank of the Gram matrix.
    const std::size_t m = constraints.size();
    RealMatrix gram(m, m);
    BlockMatrix dense(block_dims);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t b = 0; b < dense.num_blocks(); ++b)
            std::fill(dense.block(b).data().begin(), dense.block(b).data().end(), 0.0);
        constraints[k].add_to(dense, 1.0);
        for (std::size_t j = 0; j < m; ++j) gram(j, k) = constraints[j].dot(dense);
    }
    const linalg::RealSpectrum sp = linalg::eig_symmetric(gram);
    const double lmax = std::max(sp.eigenvalues.front(), 0.0);
    std::size_t rank = 0;
    for (double l : sp.eigenvalues)
        if (l > 1e-10 * std::max(lmax, 1e-300)) ++rank;
    if (rank < m)
        throw std::invalid_argument("SdpProblem: constraint matrices are linearly dependent (rank " +
                                    std::to_string(rank) + " of " + std::to_string(m) + ")");
}

// ---------------------------------------------------------------------------
// Interior-point solver: HKM direction with Mehrotra predictor-corrector
// ---------------------------------------------------------------------------

SdpSolution solve(const SdpProblem& p, const SdpOptions& opt) {
    p.validate();

    const std::size_t m = p.constraints.size();
    double total_dim = 0.0;
    for (int d : p.block_dims) total_dim += d;
    const double nn = total_dim;

    double norm_b = 0.0;
    for (double v : p.rhs) norm_b = std::max(norm_b, std::abs(v));
    const double norm_c = p.objective.frobenius();
    double norm_a = 0.0, ratio = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double fa = p.constraints[j].frobenius();
        norm_a = std::max(norm_a, fa);
        ratio = std::max(ratio, (1.0 + std::abs(p.rhs[j])) / (1.0 + fa));
    }

    SdpSolution sol;
    sol.X = BlockMatrix(p.block_dims);
    sol.Z = BlockMatrix(p.block_dims);
    sol.y.assign(m, 0.0);

    const double xi_p = std::max({10.0, std::sqrt(nn), nn * ratio});
    const double xi_d = std::max({10.0, std::sqrt(nn), norm_c, norm_a});
    for (std::size_t b = 0; b < sol.X.num_blocks(); ++b) {
        const std::size_t nb = sol.X.block(b).rows();
        for (std::size_t i = 0; i < nb; ++i) {
            sol.X.block(b)(i, i) = xi_p;
            sol.Z.block(b)(i, i) = xi_d;
        }
    }

    const double gap_tol = std::max(10.0 * opt.tol, 1e-12);
    std::vector<double> rp(m);
    std::vector<BlockMatrix> w(m);

    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        const BlockChol chol_z = block_cholesky(sol.Z);
        if (!chol_z.ok) break;  // should not happen; bail out as iteration cap
        BlockMatrix zi(p.block_dims);
        for (std::size_t b = 0; b < zi.num_blocks(); ++b)
            zi.block(b) = chol_inverse(chol_z.lower[b]);

        const double mu = inner(sol.X, sol.Z) / nn;

        for (std::size_t j = 0; j < m; ++j) rp[j] = p.rhs[j] - p.constraints[j].dot(sol.X);
        BlockMatrix rd(p.block_dims);
        p.objective.add_to(rd, 1.0);
        rd.axpy(-1.0, sol.Z);
        for (std::size_t j = 0; j < m; ++j) p.constraints[j].add_to(rd, -sol.y[j]);

        sol.primal_objective = p.objective.dot(sol.X);
        sol.dual_objective = 0.0;
        for (std::size_t j = 0; j < m; ++j) sol.dual_objective += p.rhs[j] * sol.y[j];
        sol.iterate_objectives.push_back({sol.primal_objective, sol.dual_objective});

        double rp_norm = 0.0;
        for (double v : rp) rp_norm += v * v;
        rp_norm = std::sqrt(rp_norm);
        sol.primal_residual = rp_norm / (1.0 + norm_b);
        sol.dual_residual = rd.frobenius() / (1.0 + norm_c);
        sol.relative_gap = (sol.primal_objective - sol.dual_objective) /
                           (1.0 + std::abs(sol.primal_objective) + std::abs(sol.dual_objective));
        if (sol.primal_residual <= opt.tol && sol.dual_residual <= opt.tol &&
            std::abs(sol.relative_gap) <= gap_tol) {
            sol.status = SdpStatus::optimal;
            sol.iterations = iter;
            return sol;
        }

        // Schur complement M_jk = <A_j, (Zi A_k X + X A_k Zi)/2>.
        for (std::size_t k = 0; k < m; ++k) {
            BlockMatrix t(p.block_dims);
            p.constraints[k].add_to(t, 1.0);
            BlockMatrix wk(p.block_dims);
            for (std::size_t b = 0; b < wk.num_blocks(); ++b)
                wk.block(b) = mul(zi.block(b), mul(t.block(b), sol.X.block(b)));
            w[k] = std::move(wk);
        }
        RealMatrix schur(m, m);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) schur(j, k) = p.constraints[j].dot(w[k]);
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const double v = 0.5 * (schur(j, k) + schur(k, j));
                schur(j, k) = v;
                schur(k, j) = v;
            }
        RealMatrix schur_l;
        {
            double ridge = 0.0;
            double base = 0.0;
            for (std::size_t j = 0; j < m; ++j) base = std::max(base, schur(j, j));
            base = std::max(base, 1e-300);
            while (true) {
                RealMatrix trial = schur;
                for (std::size_t j = 0; j < m; ++j) trial(j, j) += ridge;
                if (cholesky_lower(trial, schur_l)) break;
                ridge = (ridge == 0.0) ? 1e-14 * base : ridge * 100.0;
                if (ridge > 1e-4 * base) {
                    sol.status = SdpStatus::iteration_cap;
                    sol.iterations = iter;
                    return sol;
                }
            }
        }

        auto h_op = [&](const BlockMatrix& u) {
            BlockMatrix r(p.block_dims);
            for (std::size_t b = 0; b < r.num_blocks(); ++b)
                r.block(b) = sym_part(mul(zi.block(b), mul(u.block(b), sol.X.block(b))));
            return r;
        };

        const BlockMatrix h_rd = h_op(rd);
        std::vector<double> q(m);
        for (std::size_t j = 0; j < m; ++j) q[j] = p.constraints[j].dot(h_rd);

        auto solve_direction = [&](const BlockMatrix& rc, std::vector<double>& dy,
                                   BlockMatrix& dz, BlockMatrix& dx) {
            std::vector<double> rhs(m);
            for (std::size_t j = 0; j < m; ++j)
                rhs[j] = rp[j] - p.constraints[j].dot(rc) + q[j];
            dy = chol_solve_vec(schur_l, rhs);
            dz = rd;
            for (std::size_t j = 0; j < m; ++j) p.constraints[j].add_to(dz, -dy[j]);
            dx = rc;
            dx.axpy(-1.0, h_op(dz));
            dx.symmetrize();
        };

        // Predictor (affine scaling).
        BlockMatrix rc_aff = sol.X;
        rc_aff.scale(-1.0);
        std::vector<double> dy_aff;
        BlockMatrix dz_aff, dx_aff;
        solve_direction(rc_aff, dy_aff, dz_aff, dx_aff);

        const BlockChol chol_x = block_cholesky(sol.X);
        if (!chol_x.ok) break;
        const double ap_aff = max_step(sol.X, chol_x, dx_aff, opt.step_fraction);
        const double ad_aff = max_step(sol.Z, chol_z, dz_aff, opt.step_fraction);

        BlockMatrix xa = sol.X;
        xa.axpy(ap_aff, dx_aff);
        BlockMatrix za = sol.Z;
        za.axpy(ad_aff, dz_aff);
        const double mu_aff = std::max(inner(xa, za), 0.0) / nn;
        double sigma = std::pow(mu_aff / std::max(mu, 1e-300), 3);
        sigma = std::clamp(sigma, 0.0, 1.0);

        // Corrector.
        BlockMatrix rc = zi;
        rc.scale(sigma * mu);
        rc.axpy(-1.0, sol.X);
        for (std::size_t b = 0; b < rc.num_blocks(); ++b) {
            const RealMatrix cross =
                mul(zi.block(b), mul(dz_aff.block(b), dx_aff.block(b)));
            const RealMatrix s = sym_part(cross);
            for (std::size_t i = 0; i < s.rows(); ++i)
                for (std::size_t j = 0; j < s.cols(); ++j) rc.block(b)(i, j) -= s(i, j);
        }

        std::vector<double> dy;
        BlockMatrix dz, dx;
        solve_direction(rc, dy, dz, dx);

        const double ap = max_step(sol.X, chol_x, dx, opt.step_fraction);
        const double ad = max_step(sol.Z, chol_z, dz, opt.step_fraction);
        if (ap < 1e-10 && ad < 1e-10) break;  // stalled

        sol.X.axpy(ap, dx);
        sol.Z.axpy(ad, dz);
        for (std::size_t j = 0; j < m; ++j) sol.y[j] += ad * dy[j];
    }

    sol.status = SdpStatus::iteration_cap;
    sol.iterations = iter;
    return sol;
}

// ---------------------------------------------------------------------------
// Feasibility via phase-I slack minimization
// ---------------------------------------------------------------------------

FeasibilityResult feasibility(const SdpProblem& p, const SdpOptions& opt) {
    const std::size_t m = p.constraints.size();

    SdpProblem phase1;
    phase1.block_dims = p.block_dims;
    phase1.block_dims.push_back(1);
    const int slack = static_cast<int>(p.block_dims.size());

    BlockMatrix ident(p.block_dims);
    for (std::size_t b = 0; b < ident.num_blocks(); ++b)
        for (std::size_t i = 0; i < ident.block(b).rows(); ++i) ident.block(b)(i, i) = 1.0;

    double max_r = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        SparseSym a = p.constraints[j];
        const double r = p.rhs[j] - p.constraints[j].dot(ident);
        a.add(slack, 0, 0, r);
        phase1.constraints.push_back(std::move(a));
        max_r = std::max(max_r, std::abs(r));
    }
    phase1.rhs = p.rhs;
    phase1.objective.add(slack, 0, 0, 1.0);

    const SdpSolution sol = solve(phase1, opt);

    FeasibilityResult res;
    res.margin = sol.X.block(static_cast<std::size_t>(slack))(0, 0);

    double norm_b = 0.0;
    for (double v : p.rhs) norm_b = std::max(norm_b, std::abs(v));
    const double scale = 1.0 + norm_b;

    const double witness_err = res.margin * std::max(1.0, max_r);
    if (sol.status == SdpStatus::optimal && witness_err <= 1e-8 * scale) {
        res.status = FeasStatus::feasible;
        res.witness = BlockMatrix(p.block_dims);
        for (std::size_t b = 0; b < res.witness.num_blocks(); ++b)
            res.witness.block(b) = sol.X.block(b);
        return res;
    }

    // Candidate separating ray: -A^T(y) >= 0 and b.y > 0 rule out feasibility.
    if (res.margin >= 1e-8 * scale) {
        BlockMatrix aty(p.block_dims);
        for (std::size_t j = 0; j < m; ++j) p.constraints[j].add_to(aty, sol.y[j]);
        double lam = 0.0;
        for (std::size_t b = 0; b < aty.num_blocks(); ++b)
            lam = std::max(lam, approx_lambda_max(sym_part(aty.block(b))));
        double by = 0.0;
        for (std::size_t j = 0; j < m; ++j) by += p.rhs[j] * sol.y[j];
        const double ray_scale = std::max(1.0, aty.frobenius());
        if (by > 0.0 && lam <= 1e-7 * ray_scale) {
            res.status = FeasStatus::infeasible;
            res.certificate = sol.y;
            return res;
        }
    }

    res.status = FeasStatus::undecided;
    return res;
}

// ---------------------------------------------------------------------------
// Serialization / Hermitian bridge
// ---------------------------------------------------------------------------

std::string to_json(const SdpProblem& p) {
    nlohmann::ordered_json j;
    j["block_dims"] = p.block_dims;
    auto dump_sparse = [&](const SparseSym& a) {
        nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
        for (std::size_t b = 0; b < p.block_dims.size(); ++b) {
            const int n = p.block_dims[b];
            std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                               std::vector<double>(static_cast<std::size_t>(n), 0.0));
            for (const auto& e : a.entries())
                if (e.block == static_cast<int>(b)) {
                    d[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col)] = e.value;
                    d[static_cast<std::size_t>(e.col)][static_cast<std::size_t>(e.row)] = e.value;
                }
            blocks.push_back(d);
        }
        return blocks;
    };
    j["objective"] = dump_sparse(p.objective);
    nlohmann::ordered_json cons = nlohmann::ordered_json::array();
    for (const auto& a : p.constraints) cons.push_back(dump_sparse(a));
    j["constraints"] = cons;
    j["rhs"] = p.rhs;
    return j.dump();
}

std::vector<linalg::HermitianMatrix> hermitian_basis(std::size_t d) {
    using linalg::cplx;
    std::vector<linalg::HermitianMatrix> basis;
    basis.reserve(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        linalg::ComplexMatrix m(d, d);
        m(k, k) = 1.0;
        basis.emplace_back(m);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            linalg::ComplexMatrix x(d, d);
            x(i, j) = 1.0;
            x(j, i) = 1.0;
            basis.emplace_back(x);
            linalg::ComplexMatrix y(d, d);
            y(i, j) = cplx(0.0, 1.0);
            y(j, i) = cplx(0.0, -1.0);
            basis.emplace_back(y);
        }
    return basis;
}

void add_embedded(SparseSym& out, int block, double coef, const linalg::HermitianMatrix& a) {
    const linalg::RealMatrix e = linalg::real_embedding(a);
    const std::size_t n = e.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            const double v = coef * e(r, c);
            if (v != 0.0) out.add(block, static_cast<int>(r), static_cast<int>(c), v);
        }
}

}  // namespace steercube::sdp
