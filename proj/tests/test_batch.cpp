#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "cpring/batch.hpp"
#include "cpring/closed_forms.hpp"

using namespace cpring;

namespace {

std::vector<double> test_grid() {
    std::vector<double> h;
    for (int i = 0; i <= 256; ++i) h.push_back(-3.0 + 6.0 * i / 256.0);
    // Exact zeros, denormal-adjacent magnitudes, large heights, and a count
    // that is not a multiple of the vector width (tail handling).
    for (double extra : {0.0, 1e-12, -1e-12, 1e-6, 37.5, -125.0, 1e3, 0.25, -0.75})
        h.push_back(extra);
    return h;
}

struct LaneGuard {
    ~LaneGuard() { batch::reset_lane(); }
};

// Bitwise comparison; NaN-free inputs by construction.
bool identical(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("batch grids agree bitwise with the point closed forms") {
    // The point functions are defined as single-element calls into the scalar
    // lane, so any difference here means the dispatcher or a lane diverged.
    LaneGuard guard;
    batch::force_lane(batch::Lane::Scalar);

    const auto h = test_grid();
    std::vector<double> e(h.size()), f(h.size()), iso(h.size()), aniso(h.size());

    for (double theta : {0.0, 0.42, 1.5707963267948966}) {
        const double c = std::cos(2.0 * theta);
        batch::ring_energy(h, c, e);
        batch::ring_force(h, c, f);
        for (size_t i = 0; i < h.size(); ++i) {
            const AtomConfiguration cfg{h[i], theta};
            CHECK(e[i] == ring_energy(cfg));
            CHECK(f[i] == ring_force(cfg));
        }

        batch::plate_energy(h, c, e);
        batch::annulus_energy(h, 1.9, c, f);
        for (size_t i = 0; i < h.size(); ++i) {
            const AtomConfiguration cfg{h[i], theta};
            CHECK(e[i] == plate_energy(cfg));
            CHECK(f[i] == annulus_energy(cfg, 1.9));
        }
    }

    batch::ring_iso_aniso(h, iso, aniso);
    for (size_t i = 0; i < h.size(); ++i) {
        const auto d = decompose({BodyKind::Ring, 1.0, Polarization::Axial}, h[i]);
        CHECK(iso[i] == d.e_iso);
        CHECK(aniso[i] == d.e_aniso);
    }
}

TEST_CASE("lanes agree bitwise") {
    if (!batch::cpu_has_avx2()) {
        MESSAGE("no AVX2 on this CPU; lane equivalence not exercised");
        return;
    }
    LaneGuard guard;
    const auto h = test_grid();
    std::vector<double> a(h.size()), b(h.size()), a2(h.size()), b2(h.size());

    for (double c2t : {1.0, -1.0, 0.31}) {
        batch::force_lane(batch::Lane::Scalar);
        batch::ring_energy(h, c2t, a);
        batch::force_lane(batch::Lane::Avx2);
        batch::ring_energy(h, c2t, b);
        CHECK(identical(a, b));

        batch::force_lane(batch::Lane::Scalar);
        batch::ring_force(h, c2t, a);
        batch::force_lane(batch::Lane::Avx2);
        batch::ring_force(h, c2t, b);
        CHECK(identical(a, b));

        for (double bh : {1.2, 2.5, 40.0}) {
            batch::force_lane(batch::Lane::Scalar);
            batch::annulus_energy(h, bh, c2t, a);
            batch::annulus_force(h, bh, c2t, a2);
            batch::force_lane(batch::Lane::Avx2);
            batch::annulus_energy(h, bh, c2t, b);
            batch::annulus_force(h, bh, c2t, b2);
            CHECK(identical(a, b));
            CHECK(identical(a2, b2));
        }

        batch::force_lane(batch::Lane::Scalar);
        batch::plate_energy(h, c2t, a);
        batch::plate_force(h, c2t, a2);
        batch::force_lane(batch::Lane::Avx2);
        batch::plate_energy(h, c2t, b);
        batch::plate_force(h, c2t, b2);
        CHECK(identical(a, b));
        CHECK(identical(a2, b2));
    }

    batch::force_lane(batch::Lane::Scalar);
    batch::ring_iso_aniso(h, a, a2);
    batch::force_lane(batch::Lane::Avx2);
    batch::ring_iso_aniso(h, b, b2);
    CHECK(identical(a, b));
    CHECK(identical(a2, b2));

    batch::force_lane(batch::Lane::Scalar);
    batch::plate_iso_aniso(h, a, a2);
    batch::force_lane(batch::Lane::Avx2);
    batch::plate_iso_aniso(h, b, b2);
    CHECK(identical(a, b));
    CHECK(identical(a2, b2));

    batch::force_lane(batch::Lane::Scalar);
    batch::annulus_iso_aniso(h, 3.3, a, a2);
    batch::force_lane(batch::Lane::Avx2);
    batch::annulus_iso_aniso(h, 3.3, b, b2);
    CHECK(identical(a, b));
    CHECK(identical(a2, b2));
}

TEST_CASE("lane selection respects the override and the environment") {
    LaneGuard guard;

    batch::force_lane(batch::Lane::Scalar);
    CHECK(batch::active_lane() == batch::Lane::Scalar);
    batch::reset_lane();

    // The environment veto applies only when no explicit override is set.
    setenv("CPRING_FORCE_SCALAR", "1", 1);
    CHECK(batch::active_lane() == batch::Lane::Scalar);
    unsetenv("CPRING_FORCE_SCALAR");

    // Empty value does not count as set.
    setenv("CPRING_FORCE_SCALAR", "", 1);
    const batch::Lane expected =
        batch::cpu_has_avx2() ? batch::Lane::Avx2 : batch::Lane::Scalar;
    CHECK(batch::active_lane() == expected);
    unsetenv("CPRING_FORCE_SCALAR");

    if (!batch::cpu_has_avx2()) {
        CHECK_THROWS_AS(batch::force_lane(batch::Lane::Avx2), std::runtime_error);
    }
}

TEST_CASE("span size mismatch is rejected") {
    std::vector<double> h(8, 1.0), out(7);
    CHECK_THROWS_AS(batch::ring_energy(h, 1.0, out), std::invalid_argument);
}
