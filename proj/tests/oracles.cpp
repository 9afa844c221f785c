#include "oracles.hpp"

#include <stdexcept>

namespace oracles {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long long i = 0; i < a.rows(); ++i) {
        for (long long j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix kron_chain(const std::vector<const Matrix*>& factors, const std::vector<int>& dims) {
    if (factors.size() != dims.size()) throw std::invalid_argument("kron_chain: size mismatch");
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const Matrix id = Matrix::Identity(dims[k], dims[k]);
        out = kron(out, factors[k] ? *factors[k] : id);
    }
    return out;
}

namespace {

Eigen::MatrixXd flatten_all(const std::vector<Matrix>& ops) {
    const long long dd = ops.front().size();
    Eigen::MatrixXd cols(2 * dd, static_cast<long long>(ops.size()));
    for (std::size_t k = 0; k < ops.size(); ++k) {
        for (long long i = 0; i < dd; ++i) {
            cols(i, k) = ops[k].data()[i].real();
            cols(dd + i, k) = ops[k].data()[i].imag();
        }
    }
    return cols;
}

}  // namespace

int naive_closure_dim(std::vector<Matrix> generators, double tol) {
    if (generators.empty()) return 0;
    // Columns are normalized before ranking: iterated brackets shrink or grow
    // exponentially, and a rank threshold relative to the largest pivot would
    // otherwise drop genuine directions.
    for (auto& g : generators) g /= g.norm();
    int rank = 0;
    for (int round = 0; round < 64; ++round) {
        std::vector<Matrix> pool = generators;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            for (std::size_t j = i + 1; j < generators.size(); ++j) {
                Matrix br = generators[i] * generators[j] - generators[j] * generators[i];
                const double norm = br.norm();
                if (norm > 1e-12) pool.push_back(br / norm);
            }
        }
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(flatten_all(pool));
        qr.setThreshold(tol);
        const int new_rank = static_cast<int>(qr.rank());
        // keep one spanning representative per pivot
        std::vector<Matrix> reduced;
        for (int k = 0; k < new_rank; ++k) {
            reduced.push_back(pool[qr.colsPermutation().indices()[k]]);
        }
        generators = std::move(reduced);
        if (new_rank == rank) return rank;
        rank = new_rank;
    }
    throw std::runtime_error("naive_closure_dim: no fixpoint after 64 rounds");
}

std::uint32_t naive_infect(const std::vector<std::uint32_t>& adjacency, std::uint32_t seed) {
    const int n = static_cast<int>(adjacency.size());
    std::uint32_t infected = seed;
    while (true) {
        std::uint32_t next = infected;
        for (int i = 0; i < n; ++i) {
            if (!((infected >> i) & 1u)) continue;
            const std::uint32_t healthy = adjacency[i] & ~infected;
            if (healthy != 0 && (healthy & (healthy - 1)) == 0) next |= healthy;
        }
        if (next == infected) return infected;
        infected = next;
    }
}

Matrix random_hermitian(std::mt19937& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return 0.5 * (m + Matrix(m.adjoint()));
}

Matrix random_skew_hermitian_traceless(std::mt19937& rng, int d) {
    Matrix h = random_hermitian(rng, d);
    h -= (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    return Complex(0.0, 1.0) * h;
}

Matrix random_unitary(std::mt19937& rng, int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < d; ++k) {
        const Complex diag = r(k, k);
        q.col(k) *= diag / std::abs(diag);
    }
    return q;
}

Eigen::MatrixXd random_orthogonal(std::mt19937& rng, int k) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) m(i, j) = gauss(rng);
    }
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ();
}

}  // namespace oracles
