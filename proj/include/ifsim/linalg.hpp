#ifndef IFSIM_LINALG_HPP
#define IFSIM_LINALG_HPP

#include <complex>
#include <vector>

namespace ifsim {

// All numeric work runs in 80-bit extended precision. Several spectral
// contracts (bin agreement at 1e-18 absolute on bins of order 0.25) sit
// below the ulp of an IEEE double, so the engines carry the extra bits
// end to end. Configuration values (amplitudes, phases) stay plain
// doubles; they are promoted on entry to the numeric kernel.
using Real = long double;
using Complex = std::complex<Real>;

/// Fixed-length complex column vector (one entry per interferometer path).
class CVector {
public:
    explicit CVector(int n);
    static CVector basis(int n, int k);  // unit vector, 1-based k

    int size() const { return static_cast<int>(entries_.size()); }
    Complex& operator[](int i) { return entries_[i]; }
    const Complex& operator[](int i) const { return entries_[i]; }

    Real norm() const;  // Euclidean norm

private:
    std::vector<Complex> entries_;
};

/// Dense square complex matrix, row-major. Dimensions are tiny (the
/// number of paths), so no sparse storage.
class CMatrix {
public:
    explicit CMatrix(int dim);
    static CMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex& at(int r, int c) { return entries_[r * dim_ + c]; }
    const Complex& at(int r, int c) const { return entries_[r * dim_ + c]; }

private:
    int dim_;
    std::vector<Complex> entries_;
};

/// Standard matrix-vector product. Throws std::invalid_argument on a
/// dimension mismatch.
CVector mat_vec(const CMatrix& m, const CVector& v);

/// True iff max-norm of (m^dagger m - I) <= tol.
bool is_unitary(const CMatrix& m, Real tol);

}  // namespace ifsim

#endif
