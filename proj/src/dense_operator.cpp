#include "qcontrol/dense_operator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcontrol {

DenseOperator::DenseOperator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("operator matrix must be square, got " +
                                    std::to_string(entries_.rows()) + "x" +
                                    std::to_string(entries_.cols()));
    }
    if (entries_.rows() < 1) {
        throw std::invalid_argument("operator dimension must be positive");
    }
}

DenseOperator DenseOperator::zero(int dim) { return DenseOperator(Matrix::Zero(dim, dim)); }

DenseOperator DenseOperator::identity(int dim) {
    return DenseOperator(Matrix::Identity(dim, dim));
}

DenseOperator DenseOperator::traceless_part() const {
    Matrix out = entries_;
    out -= (trace() / static_cast<double>(dim())) * Matrix::Identity(dim(), dim());
    return DenseOperator(std::move(out));
}

double DenseOperator::hs_norm() const { return entries_.norm(); }

bool DenseOperator::is_hermitian(double tol) const {
    return (entries_ - entries_.adjoint()).norm() <= tol * std::max(1.0, entries_.norm());
}

bool DenseOperator::is_skew_hermitian(double tol) const {
    return (entries_ + entries_.adjoint()).norm() <= tol * std::max(1.0, entries_.norm());
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& other) {
    if (dim() != other.dim()) throw std::invalid_argument("operator dimension mismatch");
    entries_ += other.entries_;
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& other) {
    if (dim() != other.dim()) throw std::invalid_argument("operator dimension mismatch");
    entries_ -= other.entries_;
    return *this;
}

DenseOperator& DenseOperator::operator*=(Complex scale) {
    entries_ *= scale;
    return *this;
}

DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("commutator: dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
    Matrix out = a.entries() * b.entries();
    out.noalias() -= b.entries() * a.entries();
    return DenseOperator(std::move(out));
}

double hs_inner(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("hs_inner: dimension mismatch");
    }
    // Re tr(a^dag b) = sum_ij Re(conj(a_ij) b_ij)
    return a.entries().cwiseProduct(b.entries().conjugate()).sum().real();
}

DenseOperator embed_local(const DenseOperator& op, const std::vector<int>& sites,
                          const std::vector<int>& net_dims) {
    const int n = static_cast<int>(net_dims.size());
    for (int d : net_dims) {
        if (d < 1) throw std::invalid_argument("embed_local: invalid local dimension");
    }
    std::vector<bool> listed(n, false);
    long long sub_dim = 1;
    for (int s : sites) {
        if (s < 0 || s >= n) {
            throw std::invalid_argument("embed_local: site " + std::to_string(s) +
                                        " out of range");
        }
        if (listed[s]) {
            throw std::invalid_argument("embed_local: duplicate site " + std::to_string(s));
        }
        listed[s] = true;
        sub_dim *= net_dims[s];
    }
    if (sub_dim != op.dim()) {
        throw std::invalid_argument(
            "embed_local: operator dimension " + std::to_string(op.dim()) +
            " does not match the product of the listed site dimensions " +
            std::to_string(sub_dim));
    }

    long long total = 1;
    std::vector<long long> stride(n, 1);
    for (int k = n - 1; k >= 0; --k) {
        stride[k] = total;
        total *= net_dims[k];
    }
    if (total > (1LL << 22)) {
        throw std::invalid_argument("embed_local: network dimension too large for a dense embedding");
    }

    // Offsets of each operator sub-index within the global index.
    const int m = static_cast<int>(sites.size());
    std::vector<long long> sub_offset(static_cast<std::size_t>(op.dim()), 0);
    for (long long i = 0; i < op.dim(); ++i) {
        long long rem = i;
        for (int t = m - 1; t >= 0; --t) {
            const int d = net_dims[sites[t]];
            sub_offset[i] += (rem % d) * stride[sites[t]];
            rem /= d;
        }
    }

    // Offsets of each configuration of the remaining sites.
    const long long rest = total / op.dim();
    std::vector<long long> rest_offset(static_cast<std::size_t>(rest), 0);
    for (long long e = 0; e < rest; ++e) {
        long long rem = e;
        for (int k = n - 1; k >= 0; --k) {
            if (listed[k]) continue;
            const int d = net_dims[k];
            rest_offset[e] += (rem % d) * stride[k];
            rem /= d;
        }
    }

    Matrix out = Matrix::Zero(total, total);
    for (long long e = 0; e < rest; ++e) {
        const long long base = rest_offset[e];
        for (int i = 0; i < op.dim(); ++i) {
            for (int j = 0; j < op.dim(); ++j) {
                const Complex v = op.entries()(i, j);
                if (v != Complex(0.0, 0.0)) {
                    out(base + sub_offset[i], base + sub_offset[j]) = v;
                }
            }
        }
    }
    return DenseOperator(std::move(out));
}

std::vector<DenseOperator> su_basis(int d) {
    if (d < 2) {
        throw std::invalid_argument("su_basis: local dimension must be at least 2");
    }
    const Complex I(0.0, 1.0);
    std::vector<DenseOperator> out;
    out.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Matrix sym = Matrix::Zero(d, d);
            sym(j, k) = 1.0;
            sym(k, j) = 1.0;
            out.emplace_back(Matrix(I * sym));
            Matrix asym = Matrix::Zero(d, d);
            asym(j, k) = Complex(0.0, -1.0);
            asym(k, j) = Complex(0.0, 1.0);
            out.emplace_back(Matrix(I * asym));
        }
    }
    for (int l = 1; l < d; ++l) {
        Matrix diag = Matrix::Zero(d, d);
        const double scale = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (int j = 0; j < l; ++j) diag(j, j) = scale;
        diag(l, l) = -scale * l;
        out.emplace_back(Matrix(I * diag));
    }
    return out;
}

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace qcontrol
