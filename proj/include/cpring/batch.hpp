#pragma once

#include <cstddef>
#include <span>

// Grid evaluators for the closed forms: the same arithmetic as the point
// functions in closed_forms.hpp applied across a span of heights. Two lanes
// share one operation order so results agree to the last bit: a portable
// scalar reference and an AVX2 variant picked at runtime on x86-64. All
// cos(2 theta) and b_hat parameters are loop constants.

namespace cpring::batch {

enum class Lane { Scalar, Avx2 };

// Lane the dispatcher will use. Honors the CPRING_FORCE_SCALAR environment
// variable (any non-empty value) and force_lane() below; otherwise AVX2 when
// the CPU supports it.
Lane active_lane();

// Test hook: pin the lane (Lane::Avx2 throws std::runtime_error when the CPU
// lacks it). Pass std::nullopt-like sentinel via reset_lane() to restore
// automatic selection. Not thread-safe against concurrent batch calls.
void force_lane(Lane lane);
void reset_lane();
bool cpu_has_avx2();

void ring_energy(std::span<const double> h, double cos2t, std::span<double> out);
void ring_force(std::span<const double> h, double cos2t, std::span<double> out);
void ring_iso_aniso(std::span<const double> h, std::span<double> iso, std::span<double> aniso);

void annulus_energy(std::span<const double> h, double b_hat, double cos2t, std::span<double> out);
void annulus_force(std::span<const double> h, double b_hat, double cos2t, std::span<double> out);
void annulus_iso_aniso(std::span<const double> h, double b_hat,
                       std::span<double> iso, std::span<double> aniso);

void plate_energy(std::span<const double> h, double cos2t, std::span<double> out);
void plate_force(std::span<const double> h, double cos2t, std::span<double> out);
void plate_iso_aniso(std::span<const double> h, std::span<double> iso, std::span<double> aniso);

// Raw lanes, exposed for equivalence tests.
namespace scalar_lane {
void ring_energy(const double* h, std::size_t n, double cos2t, double* out);
void ring_force(const double* h, std::size_t n, double cos2t, double* out);
void ring_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso);
void annulus_energy(const double* h, std::size_t n, double b, double cos2t, double* out);
void annulus_force(const double* h, std::size_t n, double b, double cos2t, double* out);
void annulus_iso_aniso(const double* h, std::size_t n, double b, double* iso, double* aniso);
void plate_energy(const double* h, std::size_t n, double cos2t, double* out);
void plate_force(const double* h, std::size_t n, double cos2t, double* out);
void plate_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso);
}  // namespace scalar_lane

#if defined(CPRING_HAVE_AVX2)
namespace avx2_lane {
void ring_energy(const double* h, std::size_t n, double cos2t, double* out);
void ring_force(const double* h, std::size_t n, double cos2t, double* out);
void ring_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso);
void annulus_energy(const double* h, std::size_t n, double b, double cos2t, double* out);
void annulus_force(const double* h, std::size_t n, double b, double cos2t, double* out);
void annulus_iso_aniso(const double* h, std::size_t n, double b, double* iso, double* aniso);
void plate_energy(const double* h, std::size_t n, double cos2t, double* out);
void plate_force(const double* h, std::size_t n, double cos2t, double* out);
void plate_iso_aniso(const double* h, std::size_t n, double* iso, double* aniso);
}  // namespace avx2_lane
#endif

}  // namespace cpring::batch
