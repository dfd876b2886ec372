// AVX2 lane: four heights per iteration, operation order identical to
// batch_scalar.cpp so both lanes produce the same bits (all ops used here
// are correctly rounded; the build disables fp contraction). Tails shorter
// than one vector fall through to the scalar lane.

#if defined(CPRING_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstddef>

#include "cpring/batch.hpp"

namespace cpring::batch::avx2_lane {

namespace {

const __m256d k_sign = _mm256_set1_pd(-0.0);

inline __m256d neg(__m256d x) { return _mm256_xor_pd(x, k_sign); }

struct RingCommon {
    __m256d w, p, q;
};

inline RingCommon ring_common(__m256d h) {
    const __m256d h2 = _mm256_mul_pd(h, h);
    const __m256d w = _mm256_add_pd(_mm256_set1_pd(1.0), h2);
    const __m256d p = _mm256_add_pd(
        _mm256_set1_pd(26.0),
        _mm256_mul_pd(h2, _mm256_add_pd(_mm256_set1_pd(3.0),
                                        _mm256_mul_pd(_mm256_set1_pd(40.0), h2))));
    const __m256d q = _mm256_add_pd(
        _mm256_set1_pd(26.0),
        _mm256_mul_pd(h2, _mm256_add_pd(_mm256_set1_pd(-123.0),
                                        _mm256_mul_pd(_mm256_set1_pd(40.0), h2))));
    return {w, p, q};
}

// (w^4 * w) * sqrt(w) = w^(11/2)
inline __m256d pow_11_2(__m256d w) {
    const __m256d w2 = _mm256_mul_pd(w, w);
    const __m256d w4 = _mm256_mul_pd(w2, w2);
    return _mm256_mul_pd(_mm256_mul_pd(w4, w), _mm256_sqrt_pd(w));
}

// (w^4 * w^2) * sqrt(w) = w^(13/2)
inline __m256d pow_13_2(__m256d w) {
    const __m256d w2 = _mm256_mul_pd(w, w);
    const __m256d w4 = _mm256_mul_pd(w2, w2);
    return _mm256_mul_pd(_mm256_mul_pd(w4, w2), _mm256_sqrt_pd(w));
}

struct GParts {
    __m256d gi, ga, den;
};

// rho^2 enters as a loop constant (scalar r2). Sums associate left to right,
// matching the scalar expressions term for term.
inline GParts g_parts(double r2, __m256d h2, __m256d h4) {
    const double r4 = r2 * r2;
    const __m256d gi = _mm256_add_pd(
        _mm256_add_pd(_mm256_set1_pd(26.0 * r4),
                      _mm256_mul_pd(_mm256_set1_pd(17.0 * r2), h2)),
        _mm256_mul_pd(_mm256_set1_pd(26.0), h4));
    const __m256d ga = _mm256_add_pd(
        _mm256_sub_pd(_mm256_set1_pd(26.0 * r4),
                      _mm256_mul_pd(_mm256_set1_pd(73.0 * r2), h2)),
        _mm256_mul_pd(_mm256_set1_pd(6.0), h4));
    const __m256d u = _mm256_add_pd(_mm256_set1_pd(r2), h2);
    const __m256d u2 = _mm256_mul_pd(u, u);
    const __m256d u4 = _mm256_mul_pd(u2, u2);
    const __m256d den = _mm256_mul_pd(u4, _mm256_sqrt_pd(u));
    return {gi, ga, den};
}

inline GParts dg_parts(double r2, __m256d h2, __m256d h4) {
    const double r4 = r2 * r2;
    const __m256d di = neg(_mm256_add_pd(
        _mm256_add_pd(_mm256_set1_pd(200.0 * r4),
                      _mm256_mul_pd(_mm256_set1_pd(15.0 * r2), h2)),
        _mm256_mul_pd(_mm256_set1_pd(130.0), h4)));
    const __m256d da = _mm256_sub_pd(
        _mm256_add_pd(_mm256_set1_pd(-380.0 * r4),
                      _mm256_mul_pd(_mm256_set1_pd(535.0 * r2), h2)),
        _mm256_mul_pd(_mm256_set1_pd(30.0), h4));
    const __m256d u = _mm256_add_pd(_mm256_set1_pd(r2), h2);
    const __m256d u2 = _mm256_mul_pd(u, u);
    const __m256d u4 = _mm256_mul_pd(u2, u2);
    const __m256d den = _mm256_mul_pd(_mm256_mul_pd(u4, u), _mm256_sqrt_pd(u));
    return {di, da, den};
}

}  // namespace

void ring_energy(const double* h, std::size_t n, double cos2t, double* out) {
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const RingCommon rc = ring_common(hv);
        const __m256d num = _mm256_add_pd(rc.p, _mm256_mul_pd(rc.q, c2));
        const __m256d val = neg(_mm256_div_pd(num, pow_11_2(rc.w)));
        _mm256_storeu_pd(out + i, val);
    }
    if (i < n) scalar_lane::ring_energy(h + i, n - i, cos2t, out + i);
}

void ring_force(const double* h, std::size_t n, double cos2t, double* out) {
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d w = _mm256_add_pd(_mm256_set1_pd(1.0), h2);
        const __m256d b0 = _mm256_add_pd(
            _mm256_set1_pd(-280.0),
            _mm256_mul_pd(h2, _mm256_add_pd(_mm256_set1_pd(133.0),
                                            _mm256_mul_pd(_mm256_set1_pd(-280.0), h2))));
        const __m256d b1 = _mm256_add_pd(
            _mm256_set1_pd(-532.0),
            _mm256_mul_pd(h2, _mm256_add_pd(_mm256_set1_pd(1267.0),
                                            _mm256_mul_pd(_mm256_set1_pd(-280.0), h2))));
        const __m256d num =
            _mm256_mul_pd(hv, _mm256_add_pd(b0, _mm256_mul_pd(b1, c2)));
        _mm256_storeu_pd(out + i, _mm256_div_pd(num, pow_13_2(w)));
    }
    if (i < n) scalar_lane::ring_force(h + i, n - i, cos2t, out + i);
}

void ring_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const RingCommon rc = ring_common(hv);
        const __m256d den = pow_11_2(rc.w);
        _mm256_storeu_pd(iso + i, neg(_mm256_div_pd(rc.p, den)));
        _mm256_storeu_pd(aniso + i, neg(_mm256_div_pd(rc.q, den)));
    }
    if (i < n) scalar_lane::ring_iso_aniso(h + i, n - i, iso + i, aniso + i);
}

void annulus_energy(const double* h, std::size_t n, double b, double cos2t, double* out) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts g1 = g_parts(1.0, h2, h4);
        __m256d gb = _mm256_setzero_pd();
        if (finite) {
            const GParts gB = g_parts(b2, h2, h4);
            gb = _mm256_div_pd(_mm256_add_pd(gB.gi, _mm256_mul_pd(gB.ga, c2)), gB.den);
        }
        const __m256d g1v =
            _mm256_div_pd(_mm256_add_pd(g1.gi, _mm256_mul_pd(g1.ga, c2)), g1.den);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_set1_pd(0.2),
                                                _mm256_sub_pd(gb, g1v)));
    }
    if (i < n) scalar_lane::annulus_energy(h + i, n - i, b, cos2t, out + i);
}

void annulus_force(const double* h, std::size_t n, double b, double cos2t, double* out) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts d1 = dg_parts(1.0, h2, h4);
        __m256d db = _mm256_setzero_pd();
        if (finite) {
            const GParts dB = dg_parts(b2, h2, h4);
            db = _mm256_div_pd(_mm256_add_pd(dB.gi, _mm256_mul_pd(dB.ga, c2)), dB.den);
        }
        const __m256d d1v =
            _mm256_div_pd(_mm256_add_pd(d1.gi, _mm256_mul_pd(d1.ga, c2)), d1.den);
        const __m256d pre = neg(_mm256_mul_pd(hv, _mm256_set1_pd(0.2)));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(pre, _mm256_sub_pd(db, d1v)));
    }
    if (i < n) scalar_lane::annulus_force(h + i, n - i, b, cos2t, out + i);
}

void annulus_iso_aniso(const double* h, std::size_t n, double b, double* iso, double* aniso) {
    const double b2 = b * b;
    const bool finite = std::isfinite(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts g1 = g_parts(1.0, h2, h4);
        __m256d gib = _mm256_setzero_pd();
        __m256d gab = _mm256_setzero_pd();
        __m256d denb = _mm256_set1_pd(1.0);
        if (finite) {
            const GParts gB = g_parts(b2, h2, h4);
            gib = gB.gi;
            gab = gB.ga;
            denb = gB.den;
        }
        const __m256d fifth = _mm256_set1_pd(0.2);
        _mm256_storeu_pd(
            iso + i, _mm256_mul_pd(fifth, _mm256_sub_pd(_mm256_div_pd(gib, denb),
                                                        _mm256_div_pd(g1.gi, g1.den))));
        _mm256_storeu_pd(
            aniso + i, _mm256_mul_pd(fifth, _mm256_sub_pd(_mm256_div_pd(gab, denb),
                                                          _mm256_div_pd(g1.ga, g1.den))));
    }
    if (i < n) scalar_lane::annulus_iso_aniso(h + i, n - i, b, iso + i, aniso + i);
}

void plate_energy(const double* h, std::size_t n, double cos2t, double* out) {
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts g1 = g_parts(1.0, h2, h4);
        const __m256d g1v =
            _mm256_div_pd(_mm256_add_pd(g1.gi, _mm256_mul_pd(g1.ga, c2)), g1.den);
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_set1_pd(-0.2), g1v));
    }
    if (i < n) scalar_lane::plate_energy(h + i, n - i, cos2t, out + i);
}

void plate_force(const double* h, std::size_t n, double cos2t, double* out) {
    const __m256d c2 = _mm256_set1_pd(cos2t);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts d1 = dg_parts(1.0, h2, h4);
        const __m256d d1v =
            _mm256_div_pd(_mm256_add_pd(d1.gi, _mm256_mul_pd(d1.ga, c2)), d1.den);
        const __m256d pre = _mm256_mul_pd(hv, _mm256_set1_pd(0.2));
        _mm256_storeu_pd(out + i, _mm256_mul_pd(pre, d1v));
    }
    if (i < n) scalar_lane::plate_force(h + i, n - i, cos2t, out + i);
}

void plate_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d hv = _mm256_loadu_pd(h + i);
        const __m256d h2 = _mm256_mul_pd(hv, hv);
        const __m256d h4 = _mm256_mul_pd(h2, h2);
        const GParts g1 = g_parts(1.0, h2, h4);
        const __m256d mfifth = _mm256_set1_pd(-0.2);
        _mm256_storeu_pd(iso + i, _mm256_mul_pd(mfifth, _mm256_div_pd(g1.gi, g1.den)));
        _mm256_storeu_pd(aniso + i, _mm256_mul_pd(mfifth, _mm256_div_pd(g1.ga, g1.den)));
    }
    if (i < n) scalar_lane::plate_iso_aniso(h + i, n - i, iso + i, aniso + i);
}

}  // namespace cpring::batch::avx2_lane

#endif  // CPRING_HAVE_AVX2
