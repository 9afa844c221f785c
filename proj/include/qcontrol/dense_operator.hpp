#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace qcontrol {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Dense complex operator on a finite-dimensional Hilbert space.
///
/// Lie-algebra elements are stored in the skew-Hermitian convention
/// (A = iH with H Hermitian), so that real linear combinations stay inside
/// the algebra and the Hilbert-Schmidt geometry is real.
class DenseOperator {
public:
    DenseOperator() = default;
    explicit DenseOperator(Matrix entries);

    static DenseOperator zero(int dim);
    static DenseOperator identity(int dim);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }

    Complex trace() const { return entries_.trace(); }
    DenseOperator traceless_part() const;

    double hs_norm() const;
    bool is_hermitian(double tol = 1e-12) const;
    bool is_skew_hermitian(double tol = 1e-12) const;

    DenseOperator& operator+=(const DenseOperator& other);
    DenseOperator& operator-=(const DenseOperator& other);
    DenseOperator& operator*=(Complex scale);

    friend DenseOperator operator+(DenseOperator a, const DenseOperator& b) {
        a += b;
        return a;
    }
    friend DenseOperator operator-(DenseOperator a, const DenseOperator& b) {
        a -= b;
        return a;
    }
    friend DenseOperator operator*(Complex scale, DenseOperator a) {
        a *= scale;
        return a;
    }

private:
    Matrix entries_;
};

/// [a, b] = ab - ba. Skew-Hermitian inputs give a skew-Hermitian result.
DenseOperator commutator(const DenseOperator& a, const DenseOperator& b);

/// Hilbert-Schmidt inner product Re tr(a^dag b). Symmetric and
/// positive-definite on nonzero operators.
double hs_inner(const DenseOperator& a, const DenseOperator& b);

/// Embeds `op` (acting on the listed sites, in that order) into the full
/// network space, acting as the identity everywhere else. `sites` are
/// 0-based positions into `net_dims`; position 0 is the most significant
/// tensor factor, so an operator on site 0 of a 2-qubit chain is op (x) 1.
DenseOperator embed_local(const DenseOperator& op, const std::vector<int>& sites,
                          const std::vector<int>& net_dims);

/// Basis of su(d) in the skew-Hermitian convention: d^2 - 1 traceless
/// operators with <g_a, g_b>_HS = 2 delta_ab. For d = 2 these are exactly
/// {iX, iY, iZ}; for d = 3 the i-scaled Gell-Mann matrices.
std::vector<DenseOperator> su_basis(int d);

/// Single-qubit Pauli matrices.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

}  // namespace qcontrol
