#include "qcontrol/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcontrol {

namespace {

int popcount(std::uint32_t v) { return std::popcount(v); }

void check_site(int site) {
    if (site < 0 || site >= PauliString::max_sites) {
        throw std::invalid_argument("pauli site index out of range: " + std::to_string(site));
    }
}

// Reverses the lowest n bits (site k <-> significance n-1-k), used when
// converting between string masks and computational-basis indices where the
// first site is the most significant tensor factor.
std::uint32_t reverse_bits(std::uint32_t v, int n) {
    std::uint32_t out = 0;
    for (int k = 0; k < n; ++k) {
        out |= ((v >> k) & 1u) << (n - 1 - k);
    }
    return out;
}

// Phase exponent e in W(p) W(q) = i^e W(p^q) for the Hermitian string
// convention W(x, z) = i^{|x & z|} X^x Z^z.
int product_phase_exponent(const PauliString& p, const PauliString& q) {
    const int p1 = popcount(p.x & p.z);
    const int p2 = popcount(q.x & q.z);
    const int p3 = popcount((p.x ^ q.x) & (p.z ^ q.z));
    const int swaps = popcount(p.z & q.x);
    return (p1 + p2 - p3 + 2 * swaps + 8) & 3;
}

}  // namespace

PauliString PauliString::single(int site, PauliAxis axis) {
    check_site(site);
    PauliString s;
    const std::uint32_t bit = 1u << site;
    switch (axis) {
        case PauliAxis::X: s.x = bit; break;
        case PauliAxis::Y: s.x = bit; s.z = bit; break;
        case PauliAxis::Z: s.z = bit; break;
    }
    return s;
}

PauliString PauliString::from_sites(const std::map<int, PauliAxis>& sites) {
    PauliString out;
    for (const auto& [site, axis] : sites) {
        check_site(site);
        const std::uint32_t bit = 1u << site;
        if (axis == PauliAxis::X || axis == PauliAxis::Y) out.x |= bit;
        if (axis == PauliAxis::Z || axis == PauliAxis::Y) out.z |= bit;
    }
    return out;
}

std::map<int, PauliAxis> PauliString::sites() const {
    std::map<int, PauliAxis> out;
    std::uint32_t support = x | z;
    while (support != 0) {
        const int k = std::countr_zero(support);
        support &= support - 1;
        const bool has_x = (x >> k) & 1u;
        const bool has_z = (z >> k) & 1u;
        out[k] = has_x ? (has_z ? PauliAxis::Y : PauliAxis::X) : PauliAxis::Z;
    }
    return out;
}

int PauliString::weight() const { return popcount(x | z); }

int PauliString::highest_site() const {
    const std::uint32_t support = x | z;
    return support == 0 ? -1 : 31 - std::countl_zero(support);
}

bool PauliString::commutes_with(const PauliString& other) const {
    // Strings anticommute iff they differ on an odd number of shared
    // non-identity sites, i.e. the symplectic form is odd.
    const int sym = popcount(z & other.x) + popcount(other.z & x);
    return (sym & 1) == 0;
}

std::uint64_t PauliString::code(int n_sites) const {
    if (highest_site() >= n_sites) {
        throw std::invalid_argument("pauli string touches sites beyond the declared universe");
    }
    return (static_cast<std::uint64_t>(x) << n_sites) | z;
}

PauliString PauliString::from_code(std::uint64_t code, int n_sites) {
    PauliString s;
    const std::uint64_t mask = (n_sites >= 64) ? ~0ull : ((1ull << n_sites) - 1);
    s.z = static_cast<std::uint32_t>(code & mask);
    s.x = static_cast<std::uint32_t>((code >> n_sites) & mask);
    return s;
}

std::optional<PauliTerm> pauli_bracket(const PauliTerm& p, const PauliTerm& q) {
    if (p.string.commutes_with(q.string)) return std::nullopt;
    PauliString out;
    out.x = p.string.x ^ q.string.x;
    out.z = p.string.z ^ q.string.z;
    // [i c1 W1, i c2 W2] = -2 c1 c2 i^e W3 with e odd; i^e = +/- i folds back
    // into the i-prefixed convention with a real sign.
    const int e = product_phase_exponent(p.string, q.string);
    const double sign = (e == 1) ? 1.0 : -1.0;
    return PauliTerm{-2.0 * sign * p.coefficient * q.coefficient, out};
}

PauliPolynomial::PauliPolynomial(int n_sites) : n_(n_sites) {
    if (n_sites < 1 || n_sites > PauliString::max_sites) {
        throw std::invalid_argument("pauli polynomial: invalid site count " +
                                    std::to_string(n_sites));
    }
}

void PauliPolynomial::add(const PauliTerm& term) {
    if (term.string.is_identity()) {
        throw std::invalid_argument("pauli polynomial: identity strings are not traceless");
    }
    if (term.coefficient == 0.0) return;
    const std::uint64_t key = term.string.code(n_);
    auto [it, inserted] = terms_.try_emplace(key, term.coefficient);
    if (!inserted) {
        it->second += term.coefficient;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double PauliPolynomial::coefficient(const PauliString& s) const {
    const auto it = terms_.find(s.code(n_));
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<PauliTerm> PauliPolynomial::terms() const {
    std::vector<PauliTerm> out;
    out.reserve(terms_.size());
    for (const auto& [code, coeff] : terms_) {
        out.push_back({coeff, PauliString::from_code(code, n_)});
    }
    std::sort(out.begin(), out.end(), [this](const PauliTerm& a, const PauliTerm& b) {
        return a.string.code(n_) < b.string.code(n_);
    });
    return out;
}

PauliPolynomial PauliPolynomial::bracket(const PauliPolynomial& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("pauli bracket: mismatched site universes");
    }
    PauliPolynomial out(n_);
    for (const auto& [ca, va] : terms_) {
        const PauliTerm a{va, PauliString::from_code(ca, n_)};
        for (const auto& [cb, vb] : other.terms_) {
            const PauliTerm b{vb, PauliString::from_code(cb, n_)};
            if (auto r = pauli_bracket(a, b)) out.add(*r);
        }
    }
    return out;
}

double PauliPolynomial::hs_inner(const PauliPolynomial& other) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("pauli hs_inner: mismatched site universes");
    }
    // <i c W, i c' W'> = c c' tr(W W') = c c' 2^n delta_{W W'}
    const auto& small = terms_.size() <= other.terms_.size() ? terms_ : other.terms_;
    const auto& large = terms_.size() <= other.terms_.size() ? other.terms_ : terms_;
    double acc = 0.0;
    for (const auto& [code, coeff] : small) {
        const auto it = large.find(code);
        if (it != large.end()) acc += coeff * it->second;
    }
    return acc * std::pow(2.0, n_);
}

double PauliPolynomial::hs_norm() const { return std::sqrt(hs_inner(*this)); }

DenseOperator PauliPolynomial::to_dense() const {
    if (n_ > 12) {
        throw std::invalid_argument("pauli to_dense: site count too large for a dense matrix");
    }
    const long long dim = 1LL << n_;
    Matrix out = Matrix::Zero(dim, dim);
    const Complex I(0.0, 1.0);
    for (const auto& [code, coeff] : terms_) {
        const PauliString s = PauliString::from_code(code, n_);
        const std::uint32_t xr = reverse_bits(s.x, n_);
        const std::uint32_t zr = reverse_bits(s.z, n_);
        Complex phase = I * coeff;  // leading i of the skew-Hermitian convention
        switch (popcount(s.x & s.z) & 3) {
            case 1: phase *= I; break;
            case 2: phase *= -1.0; break;
            case 3: phase *= -I; break;
            default: break;
        }
        for (long long b = 0; b < dim; ++b) {
            const double sign = (popcount(zr & static_cast<std::uint32_t>(b)) & 1) ? -1.0 : 1.0;
            out(b ^ xr, b) += phase * sign;
        }
    }
    return DenseOperator(std::move(out));
}

Eigen::VectorXd PauliPolynomial::coordinates() const {
    if (n_ > 12) {
        throw std::invalid_argument("pauli coordinates: site count too large");
    }
    const long long len = 1LL << (2 * n_);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(len);
    const double scale = std::pow(2.0, 0.5 * n_);
    for (const auto& [code, coeff] : terms_) {
        out[static_cast<long long>(code)] = coeff * scale;
    }
    return out;
}

PauliPolynomial PauliPolynomial::from_coordinates(int n_sites, const Eigen::VectorXd& coords,
                                                  double drop_tol) {
    const long long len = 1LL << (2 * n_sites);
    if (coords.size() != len) {
        throw std::invalid_argument("pauli from_coordinates: wrong vector length");
    }
    PauliPolynomial out(n_sites);
    const double inv_scale = std::pow(2.0, -0.5 * n_sites);
    for (long long code = 1; code < len; ++code) {
        const double c = coords[code];
        if (c != 0.0 && std::abs(c) > drop_tol) {
            out.add(c * inv_scale, PauliString::from_code(static_cast<std::uint64_t>(code), n_sites));
        }
    }
    return out;
}

PauliPolynomial pauli_drift_from_hermitian(const Matrix& h, int n_sites) {
    const long long dim = 1LL << n_sites;
    if (h.rows() != dim || h.cols() != dim) {
        throw std::invalid_argument("pauli expansion: matrix size does not match site count");
    }
    PauliPolynomial out(n_sites);
    const Complex I(0.0, 1.0);
    for (std::uint64_t code = 1; code < static_cast<std::uint64_t>(dim) * dim; ++code) {
        const PauliString s = PauliString::from_code(code, n_sites);
        const std::uint32_t xr = reverse_bits(s.x, n_sites);
        const std::uint32_t zr = reverse_bits(s.z, n_sites);
        Complex phase = 1.0;
        switch (popcount(s.x & s.z) & 3) {
            case 1: phase = I; break;
            case 2: phase = -1.0; break;
            case 3: phase = -I; break;
            default: break;
        }
        // c = tr(W h) / 2^n; W row b has its single entry in column b ^ xr.
        Complex acc = 0.0;
        for (long long b = 0; b < dim; ++b) {
            const double sign = (popcount(zr & static_cast<std::uint32_t>(b)) & 1) ? -1.0 : 1.0;
            acc += phase * sign * h(b, b ^ xr);
        }
        const double c = (acc / static_cast<double>(dim)).real();
        if (c != 0.0) out.add(c, s);
    }
    return out;
}

}  // namespace qcontrol
