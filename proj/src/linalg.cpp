#include "ifsim/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace ifsim {

CVector::CVector(int n) : entries_(static_cast<size_t>(n > 0 ? n : 0), Complex(0, 0)) {
    if (n < 1) throw std::invalid_argument("vector length must be positive");
}

CVector CVector::basis(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("basis index out of range");
    CVector v(n);
    v[k - 1] = Complex(1, 0);
    return v;
}

Real CVector::norm() const {
    Real s = 0;
    for (const auto& e : entries_) s += std::norm(e);
    return sqrtl(s);
}

CMatrix::CMatrix(int dim)
    : dim_(dim), entries_(static_cast<size_t>(dim > 0 ? dim : 0) * (dim > 0 ? dim : 0)) {
    if (dim < 2) throw std::invalid_argument("matrix dimension must be at least 2");
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Complex(1, 0);
    return m;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
    if (m.dim() != v.size()) throw std::invalid_argument("dimension mismatch in mat_vec");
    CVector out(v.size());
    for (int r = 0; r < m.dim(); ++r) {
        Complex acc(0, 0);
        for (int c = 0; c < m.dim(); ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

bool is_unitary(const CMatrix& m, Real tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    const int d = m.dim();
    Real worst = 0;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            Complex acc(0, 0);
            for (int k = 0; k < d; ++k) acc += std::conj(m.at(k, r)) * m.at(k, c);
            if (r == c) acc -= Complex(1, 0);
            Real mag = fmaxl(fabsl(acc.real()), fabsl(acc.imag()));
            if (isnanl(mag)) return false;
            if (mag > worst) worst = mag;
        }
    }
    return worst <= tol;
}

}  // namespace ifsim
