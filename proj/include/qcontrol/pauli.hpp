#pragma once

#include "qcontrol/dense_operator.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace qcontrol {

enum class PauliAxis : std::uint8_t { X, Y, Z };

/// Tensor product of single-site Pauli operators (identity on all other
/// sites), encoded as X/Z bit masks: bit k of `x` means an X factor on site
/// k, bit k of `z` a Z factor, both bits a Y factor (Y = i X Z).
struct PauliString {
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    static constexpr int max_sites = 32;

    static PauliString single(int site, PauliAxis axis);
    static PauliString from_sites(const std::map<int, PauliAxis>& sites);

    std::map<int, PauliAxis> sites() const;
    bool is_identity() const { return x == 0 && z == 0; }
    int weight() const;         // number of non-identity sites
    int highest_site() const;   // -1 for the identity
    bool commutes_with(const PauliString& other) const;

    std::uint64_t code(int n_sites) const;
    static PauliString from_code(std::uint64_t code, int n_sites);

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// One term of a skew-Hermitian qubit operator: i * coefficient * string.
/// Terms are always traceless, so the string is never the identity.
struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// Commutator [p, q] of two single terms. Returns nullopt when the strings
/// commute (the bracket vanishes); otherwise the bracket is again a single
/// term, with an exactly representable coefficient -2 p.c q.c (sign from the
/// string product phase).
std::optional<PauliTerm> pauli_bracket(const PauliTerm& p, const PauliTerm& q);

/// Real-weighted sum of Pauli strings over a fixed number of qubit sites,
/// representing the skew-Hermitian traceless operator i * sum_s c_s W_s.
/// Stored strings are unique, coefficients nonzero, and the identity string
/// is rejected.
class PauliPolynomial {
public:
    explicit PauliPolynomial(int n_sites);

    int n_sites() const { return n_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Merges a term into the polynomial, erasing entries that cancel to zero.
    void add(const PauliTerm& term);
    void add(double coefficient, const PauliString& string) { add({coefficient, string}); }

    double coefficient(const PauliString& s) const;
    std::vector<PauliTerm> terms() const;  // sorted by string code

    PauliPolynomial bracket(const PauliPolynomial& other) const;
    double hs_inner(const PauliPolynomial& other) const;
    double hs_norm() const;

    DenseOperator to_dense() const;

    /// Coordinates in the Hilbert-Schmidt-orthonormal string basis: a vector
    /// of length 4^n indexed by string code, scaled so that the Euclidean dot
    /// product equals the operator Hilbert-Schmidt inner product.
    Eigen::VectorXd coordinates() const;
    static PauliPolynomial from_coordinates(int n_sites, const Eigen::VectorXd& coords,
                                            double drop_tol = 0.0);

    friend bool operator==(const PauliPolynomial& a, const PauliPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::unordered_map<std::uint64_t, double> terms_;
};

/// Expands a Hermitian matrix on n qubit sites into the polynomial for
/// i * (traceless part of h). The identity component (the trace) carries no
/// dynamics and is dropped.
PauliPolynomial pauli_drift_from_hermitian(const Matrix& h, int n_sites);

}  // namespace qcontrol
