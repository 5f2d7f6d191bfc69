#include "ifsim/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace ifsim {

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

// w[m] = exp(-2 pi i m / N). Angles are built from the exact dyadic (or
// rational) fraction m/N so no error grows with m.
std::vector<Complex> twiddles(int n) {
    std::vector<Complex> w(static_cast<size_t>(n));
    for (int m = 0; m < n; ++m) {
        Real ang = -2 * kPi * (static_cast<Real>(m) / static_cast<Real>(n));
        w[static_cast<size_t>(m)] = Complex(cosl(ang), sinl(ang));
    }
    return w;
}

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Iterative radix-2 transform, fixed butterfly order (bit-for-bit
// reproducible across runs).
void fft_pow2(std::vector<Complex>& a, const std::vector<Complex>& tw) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const int half = len / 2;
        const int step = n / len;
        for (int base = 0; base < n; base += len) {
            for (int k = 0; k < half; ++k) {
                Complex u = a[static_cast<size_t>(base + k)];
                Complex v = a[static_cast<size_t>(base + k + half)] *
                            tw[static_cast<size_t>(k) * static_cast<size_t>(step)];
                a[static_cast<size_t>(base + k)] = u + v;
                a[static_cast<size_t>(base + k + half)] = u - v;
            }
        }
    }
}

struct NeumaierSum {
    Real sum = 0, comp = 0;
    void add(Real x) {
        Real t = sum + x;
        comp += (fabsl(sum) >= fabsl(x)) ? ((sum - t) + x) : ((x - t) + sum);
        sum = t;
    }
    Real value() const { return sum + comp; }
};

}  // namespace

int PowerSpectrum::frequency_of_bin(int k) const {
    return k <= sample_count / 2 ? k : k - sample_count;
}

Real PowerSpectrum::power_at(long long f) const {
    const long long n = sample_count;
    if (f < -(n / 2) || f > n / 2) throw std::invalid_argument("frequency beyond Nyquist");
    long long idx = f >= 0 ? f : f + n;
    if (idx == n) idx = 0;
    return bins[static_cast<size_t>(idx)];
}

Complex dft_bin(const TimeTrace& t, long long k) {
    const int n = t.sample_count;
    const auto tw = twiddles(n);
    long long kk = ((k % n) + n) % n;
    NeumaierSum re, im;
    for (int j = 0; j < n; ++j) {
        Complex term = t.samples[static_cast<size_t>(j)] *
                       tw[static_cast<size_t>((kk * j) % n)];
        re.add(term.real());
        im.add(term.imag());
    }
    return Complex(re.value() / n, im.value() / n);
}

PowerSpectrum dft_spectrum(const TimeTrace& t) {
    const int n = t.sample_count;
    if (n < 2) throw std::invalid_argument("spectrum needs at least 2 samples");
    PowerSpectrum out;
    out.sample_count = n;
    out.bins.resize(static_cast<size_t>(n));
    if (is_pow2(n)) {
        std::vector<Complex> a = t.samples;
        fft_pow2(a, twiddles(n));
        const Real scale = 1.0L / static_cast<Real>(n);  // exact for powers of two
        for (int k = 0; k < n; ++k) out.bins[static_cast<size_t>(k)] = std::norm(a[static_cast<size_t>(k)] * scale);
    } else {
        for (int k = 0; k < n; ++k) out.bins[static_cast<size_t>(k)] = std::norm(dft_bin(t, k));
    }
    return out;
}

std::vector<std::pair<int, Real>> band(const PowerSpectrum& s, int f_lo, int f_hi) {
    if (f_lo < 0 || f_lo > f_hi || f_hi > s.sample_count / 2)
        throw std::invalid_argument("band out of range");
    std::vector<std::pair<int, Real>> out;
    out.reserve(static_cast<size_t>(f_hi - f_lo + 1));
    for (int f = f_lo; f <= f_hi; ++f) out.emplace_back(f, s.power_at(f));
    return out;
}

Real parseval_check(const TimeTrace& t, const PowerSpectrum& s) {
    if (t.sample_count != s.sample_count)
        throw std::invalid_argument("trace and spectrum sizes differ");
    NeumaierSum spectral;
    for (Real g : s.bins) spectral.add(g);
    NeumaierSum temporal;
    for (const Complex& x : t.samples) temporal.add(std::norm(x));
    return fabsl(spectral.value() - temporal.value() / t.sample_count);
}

}  // namespace ifsim
