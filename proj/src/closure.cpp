#include "qcontrol/closure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace qcontrol {

namespace {

using Eigen::VectorXd;

// Brackets of unit-norm elements below this norm are treated as exact zeros
// rather than rank-decision candidates.
constexpr double kZeroFloor = 1e-13;

// ---------------------------------------------------------------------------
// Coordinate spaces: operators as real vectors whose Euclidean dot product is
// the Hilbert-Schmidt inner product, plus the bracket in those coordinates.
// ---------------------------------------------------------------------------

struct DenseSpace {
    int d;

    int ambient() const { return 2 * d * d; }
    int algebra_dim() const { return d * d - 1; }

    VectorXd flatten(const Matrix& m) const {
        const long long dd = static_cast<long long>(d) * d;
        VectorXd v(2 * dd);
        for (long long k = 0; k < dd; ++k) {
            v[k] = m.data()[k].real();
            v[dd + k] = m.data()[k].imag();
        }
        return v;
    }

    Matrix unflatten(const Eigen::Ref<const VectorXd>& v) const {
        const long long dd = static_cast<long long>(d) * d;
        Matrix m(d, d);
        for (long long k = 0; k < dd; ++k) {
            m.data()[k] = Complex(v[k], v[dd + k]);
        }
        return m;
    }

    VectorXd bracket(const Eigen::Ref<const VectorXd>& a,
                     const Eigen::Ref<const VectorXd>& b) const {
        const Matrix ma = unflatten(a);
        const Matrix mb = unflatten(b);
        Matrix out = ma * mb;
        out.noalias() -= mb * ma;
        return flatten(out);
    }
};

struct PauliSpace {
    int n;
    long long len;         // 4^n coordinates, index = string code
    double bracket_scale;  // folds the coordinate scaling into c3 = -2 s c1 c2

    explicit PauliSpace(int n_sites)
        : n(n_sites),
          len(1LL << (2 * n_sites)),
          bracket_scale(-2.0 / std::pow(2.0, 0.5 * n_sites)) {}

    int ambient() const { return static_cast<int>(len); }
    int algebra_dim() const { return static_cast<int>(len - 1); }

    VectorXd bracket(const Eigen::Ref<const VectorXd>& a,
                     const Eigen::Ref<const VectorXd>& b) const {
        std::vector<std::pair<std::uint32_t, double>> nza, nzb;
        nza.reserve(64);
        nzb.reserve(64);
        for (long long i = 1; i < len; ++i) {
            if (a[i] != 0.0) nza.emplace_back(static_cast<std::uint32_t>(i), a[i]);
        }
        for (long long i = 1; i < len; ++i) {
            if (b[i] != 0.0) nzb.emplace_back(static_cast<std::uint32_t>(i), b[i]);
        }

        VectorXd out = VectorXd::Zero(len);
        const std::uint32_t zmask = (1u << n) - 1;
        for (const auto& [ca, va] : nza) {
            const std::uint32_t x1 = ca >> n, z1 = ca & zmask;
            const int p1 = std::popcount(x1 & z1);
            for (const auto& [cb, vb] : nzb) {
                const std::uint32_t x2 = cb >> n, z2 = cb & zmask;
                // commuting strings contribute nothing to the bracket
                if (((std::popcount(z1 & x2) + std::popcount(z2 & x1)) & 1) == 0) continue;
                const std::uint32_t code3 = ca ^ cb;
                const int p2 = std::popcount(x2 & z2);
                const int p3 = std::popcount((x1 ^ x2) & (z1 ^ z2));
                const int e = (p1 + p2 - p3 + 2 * std::popcount(z1 & x2) + 8) & 3;
                out[code3] += (e == 1) ? va * vb : -va * vb;
            }
        }
        out *= bracket_scale;
        return out;
    }
};

// ---------------------------------------------------------------------------
// Incremental orthonormal basis with an explicit three-way rank decision.
// ---------------------------------------------------------------------------

class RankBasis {
public:
    RankBasis(int ambient, double tol) : tol_(tol) { q_.resize(ambient, 16); }

    enum class Add { Accepted, Dependent };

    Add add(VectorXd v) {
        const double pre_norm = v.norm();
        if (pre_norm <= kZeroFloor) return Add::Dependent;

        // modified Gram-Schmidt, then one re-orthogonalization pass
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < size_; ++j) {
                const double c = q_.col(j).dot(v);
                v.noalias() -= c * q_.col(j);
            }
        }
        const double residual = v.norm() / pre_norm;
        if (residual > tol_) {
            if (size_ == q_.cols()) {
                q_.conservativeResize(Eigen::NoChange, 2 * q_.cols());
            }
            q_.col(size_) = v / v.norm();
            ++size_;
            return Add::Accepted;
        }
        if (residual < tol_ / 10.0) {
            max_rejected_ = std::max(max_rejected_, residual);
            return Add::Dependent;
        }
        throw IndeterminateError(residual, size_);
    }

    int size() const { return size_; }
    double max_rejected() const { return max_rejected_; }
    Eigen::Ref<const VectorXd> column(int i) const { return q_.col(i); }

private:
    double tol_;
    Eigen::MatrixXd q_;
    int size_ = 0;
    double max_rejected_ = 0.0;
};

int effective_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Shared closure loop. Fills `result` (dim, rounds, saturated, max_residual)
// and returns the final orthonormal basis columns.
template <class Space>
std::vector<VectorXd> run_closure(const Space& space,
                                  const std::vector<VectorXd>& generator_coords,
                                  int target_dim, const ClosureOptions& opts,
                                  ClosureResult& result) {
    if (target_dim <= 0 || target_dim > space.algebra_dim()) {
        target_dim = space.algebra_dim();
    }

    RankBasis basis(space.ambient(), opts.tol);
    for (const auto& g : generator_coords) basis.add(g);

    const int threads = effective_threads(opts.max_threads);
    constexpr std::size_t kChunk = 64;

    int frontier_begin = 0;
    int frontier_end = basis.size();

    std::vector<std::pair<int, int>> chunk;
    std::vector<VectorXd> brackets(kChunk);
    chunk.reserve(kChunk);

    // returns true once the target dimension is reached
    auto process_chunk = [&]() -> bool {
        if (chunk.empty()) return false;
        const auto worker = [&](std::size_t first, std::size_t stride) {
            for (std::size_t k = first; k < chunk.size(); k += stride) {
                brackets[k] =
                    space.bracket(basis.column(chunk[k].first), basis.column(chunk[k].second));
            }
        };
        if (threads > 1 && chunk.size() > 8) {
            std::vector<std::thread> pool;
            pool.reserve(threads - 1);
            for (int t = 1; t < threads; ++t) pool.emplace_back(worker, t, threads);
            worker(0, threads);
            for (auto& th : pool) th.join();
        } else {
            worker(0, 1);
        }
        // acceptance is strictly sequential in candidate order
        bool reached = false;
        for (std::size_t k = 0; k < chunk.size() && !reached; ++k) {
            basis.add(std::move(brackets[k]));
            reached = basis.size() >= target_dim;
        }
        chunk.clear();
        return reached;
    };

    bool done = basis.size() >= target_dim;
    while (!done && frontier_end > frontier_begin) {
        ++result.rounds;
        for (int i = frontier_begin; i < frontier_end && !done; ++i) {
            for (int j = 0; j < i && !done; ++j) {
                chunk.emplace_back(i, j);
                if (chunk.size() == kChunk) done = process_chunk();
            }
        }
        if (!done) done = process_chunk();
        frontier_begin = frontier_end;
        frontier_end = basis.size();
    }

    result.dim = basis.size();
    result.saturated = basis.size() >= target_dim;
    result.max_residual = basis.max_rejected();

    std::vector<VectorXd> columns;
    columns.reserve(basis.size());
    for (int i = 0; i < basis.size(); ++i) columns.emplace_back(basis.column(i));
    return columns;
}

}  // namespace

ClosureResult lie_closure(const std::vector<DenseOperator>& generators, int target_dim,
                          const ClosureOptions& opts) {
    if (generators.empty()) {
        throw std::invalid_argument("lie_closure: no generators");
    }
    const int d = generators.front().dim();
    const DenseSpace space{d};
    std::vector<VectorXd> coords;
    coords.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.dim() != d) {
            throw std::invalid_argument("lie_closure: generator dimension mismatch");
        }
        const double norm = g.hs_norm();
        if (norm <= kZeroFloor) throw std::invalid_argument("lie_closure: zero generator");
        if (!g.is_skew_hermitian(1e-10)) {
            throw std::invalid_argument("lie_closure: generator is not skew-Hermitian");
        }
        if (std::abs(g.trace()) > 1e-10 * norm * std::sqrt(static_cast<double>(d))) {
            throw std::invalid_argument("lie_closure: generator has a trace component");
        }
        coords.push_back(space.flatten(g.entries()));
    }

    ClosureResult res;
    const std::vector<VectorXd> columns = run_closure(space, coords, target_dim, opts, res);
    std::vector<DenseOperator> ops;
    ops.reserve(columns.size());
    for (const auto& c : columns) ops.emplace_back(space.unflatten(c));
    res.basis = std::move(ops);
    return res;
}

ClosureResult lie_closure(const std::vector<PauliPolynomial>& generators, int target_dim,
                          const ClosureOptions& opts) {
    if (generators.empty()) {
        throw std::invalid_argument("lie_closure: no generators");
    }
    const int n = generators.front().n_sites();
    const PauliSpace space(n);
    std::vector<VectorXd> coords;
    coords.reserve(generators.size());
    for (const auto& g : generators) {
        if (g.n_sites() != n) {
            throw std::invalid_argument("lie_closure: generator site-count mismatch");
        }
        if (g.empty()) throw std::invalid_argument("lie_closure: zero generator");
        coords.push_back(g.coordinates());
    }

    ClosureResult res;
    const std::vector<VectorXd> columns = run_closure(space, coords, target_dim, opts, res);
    std::vector<PauliPolynomial> polys;
    polys.reserve(columns.size());
    for (const auto& c : columns) {
        polys.push_back(PauliPolynomial::from_coordinates(n, c, 1e-14));
    }
    res.basis = std::move(polys);
    return res;
}

}  // namespace qcontrol
