#include "cpring/batch.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace cpring::batch {

namespace {

std::optional<Lane>& lane_override() {
    static std::optional<Lane> v;
    return v;
}

bool detect_avx2() {
#if defined(CPRING_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace

bool cpu_has_avx2() {
    static const bool has = detect_avx2();
    return has;
}

Lane active_lane() {
    if (lane_override()) return *lane_override();
    const char* env = std::getenv("CPRING_FORCE_SCALAR");
    if (env != nullptr && env[0] != '\0') return Lane::Scalar;
    return cpu_has_avx2() ? Lane::Avx2 : Lane::Scalar;
}

void force_lane(Lane lane) {
    if (lane == Lane::Avx2 && !cpu_has_avx2())
        throw std::runtime_error("force_lane: CPU does not support AVX2");
    lane_override() = lane;
}

void reset_lane() { lane_override().reset(); }

namespace {

void check(std::span<const double> in, std::span<double> out) {
    if (in.size() != out.size())
        throw std::invalid_argument("batch: input and output spans differ in size");
}

}  // namespace

#if defined(CPRING_HAVE_AVX2)
#define CPRING_PICK(fn, ...)                          \
    if (active_lane() == Lane::Avx2)                  \
        avx2_lane::fn(__VA_ARGS__);                   \
    else                                              \
        scalar_lane::fn(__VA_ARGS__)
#else
#define CPRING_PICK(fn, ...) scalar_lane::fn(__VA_ARGS__)
#endif

void ring_energy(std::span<const double> h, double cos2t, std::span<double> out) {
    check(h, out);
    CPRING_PICK(ring_energy, h.data(), h.size(), cos2t, out.data());
}

void ring_force(std::span<const double> h, double cos2t, std::span<double> out) {
    check(h, out);
    CPRING_PICK(ring_force, h.data(), h.size(), cos2t, out.data());
}

void ring_iso_aniso(std::span<const double> h, std::span<double> iso, std::span<double> aniso) {
    check(h, iso);
    check(h, aniso);
    CPRING_PICK(ring_iso_aniso, h.data(), h.size(), iso.data(), aniso.data());
}

void annulus_energy(std::span<const double> h, double b_hat, double cos2t,
                    std::span<double> out) {
    check(h, out);
    CPRING_PICK(annulus_energy, h.data(), h.size(), b_hat, cos2t, out.data());
}

void annulus_force(std::span<const double> h, double b_hat, double cos2t,
                   std::span<double> out) {
    check(h, out);
    CPRING_PICK(annulus_force, h.data(), h.size(), b_hat, cos2t, out.data());
}

void annulus_iso_aniso(std::span<const double> h, double b_hat, std::span<double> iso,
                       std::span<double> aniso) {
    check(h, iso);
    check(h, aniso);
    CPRING_PICK(annulus_iso_aniso, h.data(), h.size(), b_hat, iso.data(), aniso.data());
}

void plate_energy(std::span<const double> h, double cos2t, std::span<double> out) {
    check(h, out);
    CPRING_PICK(plate_energy, h.data(), h.size(), cos2t, out.data());
}

void plate_force(std::span<const double> h, double cos2t, std::span<double> out) {
    check(h, out);
    CPRING_PICK(plate_force, h.data(), h.size(), cos2t, out.data());
}

void plate_iso_aniso(std::span<const double> h, std::span<double> iso, std::span<double> aniso) {
    check(h, iso);
    check(h, aniso);
    CPRING_PICK(plate_iso_aniso, h.data(), h.size(), iso.data(), aniso.data());
}

#undef CPRING_PICK

}  // namespace cpring::batch
