#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "vrkit/disc.hpp"
#include "vrkit/representations.hpp"
#include "vrkit/rng.hpp"

using namespace vrkit;

namespace {
// 0.9 * exp(i pi / 4)
const cx zd{0.63639610306789285, 0.63639610306789274};
const cx zr{1.0 / 3.0, 0.5};
}  // namespace

TEST_CASE("slit curves match frozen references and stay in the closed disc") {
    CHECK(std::abs(disc_curve_point(disc_curve::Cplus, zd, 1.0) -
                   cx{0.1391417260477798, 0.0080384370730139341}) < 1e-13);
    CHECK(std::abs(disc_curve_point(disc_curve::Cminus, zd, 1.0) -
                   cx{0.17092538408015548, 0.79563328833993696}) < 1e-13);
    CHECK(std::abs(disc_curve_point(disc_curve::Cplus, zd, 30.0)) < 1e-12);
    CHECK(std::abs(disc_curve_point(disc_curve::CplusStar, zd, -1.0) -
                   cx{-0.35959660268018417, 0.90182648540160348}) < 1e-13);
    CHECK(std::abs(disc_curve_point(disc_curve::CminusStar, zd, -1.0) -
                   cx{0.83949753523126969, 0.42531027359341417}) < 1e-13);
    CHECK(std::abs(disc_curve_point(disc_curve::CplusStar, zd, -30.0) - cx{-1.0, 0.0}) < 1e-5);
    CHECK(std::abs(disc_curve_point(disc_curve::CminusStar, zd, -30.0) - cx{1.0, 0.0}) < 1e-5);

    for (auto k : {disc_curve::Cplus, disc_curve::Cminus, disc_curve::CplusStar,
                   disc_curve::CminusStar})
        CHECK(std::abs(disc_curve_point(k, zd, 0.0) - zd) < 1e-14);

    for (double t = 0.0; t <= 30.0; t += 0.37) {
        CHECK(std::abs(disc_curve_point(disc_curve::Cplus, zd, t)) < 1.0 + 1e-12);
        CHECK(std::abs(disc_curve_point(disc_curve::CminusStar, zd, -t)) < 1.0 + 1e-12);
    }

    CHECK_THROWS_AS(disc_curve_point(disc_curve::Cplus, zd, -0.5), out_of_domain);
    CHECK_THROWS_AS(disc_curve_point(disc_curve::CplusStar, zd, 0.5), out_of_domain);
    CHECK_THROWS_AS(disc_curve_point(disc_curve::Cplus, cx{1.5, 0.0}, 1.0), out_of_domain);
}

TEST_CASE("the slit maps fix 0, reduce to the identity at t = 0, and are typically real") {
    splitmix64 gen(11);
    for (int i = 0; i < 40; ++i) {
        const cx z{gen.uniform(-0.7, 0.7), gen.uniform(-0.7, 0.7)};
        CHECK(std::abs(extremal_map(1, 0.0, z) - z) < 1e-12);
        CHECK(std::abs(extremal_map(2, 0.0, z) - z) < 1e-12);
        for (int family : {1, 2}) {
            const cx f = extremal_map(family, 0.8, z);
            CHECK(std::abs(f) < 1.0 + 1e-12);
            CHECK(f.imag() * z.imag() >= -1e-12);  // typical reality
            CHECK(std::abs(extremal_map(family, 0.8, std::conj(z)) - std::conj(f)) < 1e-12);
        }
    }
    CHECK(extremal_map(1, 2.0, cx{0.0, 0.0}) == cx{0.0, 0.0});
    CHECK_THROWS_AS(extremal_map(3, 1.0, cx{0.1, 0.1}), out_of_range);

    // the first family omits a real slit whose tip at t = ln 2 is 3 - 2 sqrt(2)
    const double tip = 3.0 - 2.0 * std::sqrt(2.0);
    CHECK(tip == doctest::Approx(0.17157287525380971).epsilon(1e-15));
    for (double x : {0.2, 0.5, 0.9, 0.99}) {
        const cx f = extremal_map(1, std::log(2.0), cx{x, 0.0});
        CHECK(std::abs(f.imag()) < 1e-12);
        CHECK(f.real() < tip + 1e-12);
        CHECK(f.real() > 0.0);
    }
}

TEST_CASE("squared-coordinate landmarks match frozen references") {
    CHECK(std::abs(tau_point_p(cx{0.0, 0.5}, 0.5) - cx{1.0, 4.0 / 3.0}) < 1e-14);
    CHECK(std::abs(tau_point_p(cx{0.0, 0.5}, 1.0) - cx{-0.28, 0.96}) < 1e-14);
    CHECK(std::abs(tau_point_q(cx{0.0, 0.5}, 0.5) - cx{0.36, 0.48}) < 1e-14);
    CHECK(std::abs(tau_point_p(zd, 0.5) - cx{2.391071730635693, 0.1460241043208737}) < 1e-12);
    CHECK(std::abs(tau_point_q(zd, 0.5) - cx{-2.2441835301229398, 0.83796619455251709}) < 1e-12);

    // the circle carrying the tau sweep, pinned by three of its points
    auto k = circle_through(cx{1.0, 0.0}, tau_point_p(zd, 0.5), tau_point_p(zd, 1.0));
    REQUIRE_FALSE(k.is_line);
    CHECK(std::abs(k.as_circle.center - cx{0.50000000000000067, 11.462064242819926}) < 1e-9);
    CHECK(k.as_circle.radius == doctest::Approx(11.472964599724481).epsilon(1e-10));
}

TEST_CASE("the two arc parametrizations meet at the shared corners") {
    for (double tau : {0.1, 0.37, 0.5, 0.82, 0.99}) {
        const double join = 2.0 * tau - 1.0;
        const cx p = tau_point_p(zd, tau), q = tau_point_q(zd, tau);
        CHECK(std::abs(vt_arc_point(zd, tau, 1, join) - p) < 1e-12 * (1.0 + std::abs(p)));
        CHECK(std::abs(vt_arc_point(zd, tau, 2, join) - p) < 1e-12 * (1.0 + std::abs(p)));
        CHECK(std::abs(vt_arc_point(zd, tau, 1, 1.0) - q) < 1e-12 * (1.0 + std::abs(q)));
        CHECK(std::abs(vt_arc_point(zd, tau, 2, -1.0) - q) < 1e-12 * (1.0 + std::abs(q)));
    }
    // at full derivative the two corners collapse
    CHECK(std::abs(tau_point_p(zd, 1.0) - tau_point_q(zd, 1.0)) < 1e-12);
}

TEST_CASE("curve values and the squared-coordinate sweep agree") {
    // square_side(Cplus(t)) runs along the P landmark at tau = e^{-t}, and
    // square_side(Cminus(t)) along the Q landmark
    for (double t : {0.05, 0.3, 1.0, 2.5, 6.0}) {
        const double tau = std::exp(-t);
        const cx gp = mobius(mobius_kind::square_side, disc_curve_point(disc_curve::Cplus, zd, t));
        const cx gq = mobius(mobius_kind::square_side, disc_curve_point(disc_curve::Cminus, zd, t));
        CHECK(std::abs(gp - tau_point_p(zd, tau)) < 1e-10 * (1.0 + std::abs(gp)));
        CHECK(std::abs(gq - tau_point_q(zd, tau)) < 1e-10 * (1.0 + std::abs(gq)));
    }
}

TEST_CASE("region membership for the union-over-derivatives region") {
    CHECK(classify_vu(zd, zd).member);
    CHECK(classify_vu(zd, zd).where == locus::at_z0);
    CHECK(classify_vu(zd, zd / 2.0).member);
    CHECK(classify_vu(zd, cx{0.2, 0.1}).member);
    CHECK(classify_vu(zd, cx{-0.1, 0.05}).member);
    CHECK_FALSE(classify_vu(zd, zd * zd).member);
    CHECK_FALSE(classify_vu(zd, cx{-0.5, 0.5}).member);

    auto origin = classify_vu(zd, cx{0.0, 0.0});
    CHECK_FALSE(origin.member);
    CHECK(origin.where == locus::on_excluded);

    // boundary curves are included edges
    for (double t : {0.2, 1.0, 3.0}) {
        auto vp = classify_vu(zd, disc_curve_point(disc_curve::Cplus, zd, t));
        CHECK(vp.member);
        CHECK(vp.where == locus::on_boundary);
        auto vm = classify_vu(zd, disc_curve_point(disc_curve::Cminus, zd, t));
        CHECK(vm.member);
        CHECK(vm.where == locus::on_boundary);
    }
}

TEST_CASE("region membership for the fixed-derivative lens") {
    const double tau = 0.5;
    // corners and arc points lie on the boundary
    for (cx g : {tau_point_p(zd, tau), tau_point_q(zd, tau), vt_arc_point(zd, tau, 1, 0.3),
                 vt_arc_point(zd, tau, 2, -0.7)}) {
        auto v = classify_vt(zd, tau, mobius(mobius_kind::sqrt_side, g));
        CHECK(v.member);
        CHECK(v.where == locus::on_boundary);
    }
    // the base point itself is not attainable at a reduced derivative
    CHECK_FALSE(classify_vt(zd, tau, zd).member);
    CHECK_FALSE(classify_vt(zd, tau, cx{0.0, 0.0}).member);

    // sampled representation values always land inside
    for (uint64_t i = 0; i < 50; ++i) {
        auto spec = sample_szapiel(tau - 1e-9, tau, 3, 1000 + i);
        spec.tau = tau;
        const cx w = szapiel_eval(spec, zd);
        CHECK(classify_vt(zd, tau, w, 1e-7).member);
        CHECK(classify_vu(zd, w, 1e-7).member);
    }

    // full derivative pins the single point
    CHECK(classify_vt(zd, 1.0, zd).member);
    CHECK(classify_vt(zd, 1.0, zd).where == locus::at_z0);
    CHECK_FALSE(classify_vt(zd, 1.0, zd * 0.99).member);
    CHECK_THROWS_AS(classify_vt(zd, 1.5, zd), out_of_range);
}

TEST_CASE("region membership for real-coefficient families") {
    CHECK(classify_vr(zr, zr).where == locus::at_z0);
    CHECK(classify_vr(zr, cx{0.0, 0.0}).member);          // the zero map
    CHECK(classify_vr(zr, zr * zr).member);               // the square map
    CHECK(classify_vr(zr, -zr * zr).member);              // atom at pi/2
    CHECK(classify_vr(zr, -zr).member);                   // the negated identity
    CHECK_FALSE(classify_vr(zr, cx{0.9, 0.0}).member);
    CHECK_FALSE(classify_vr(zr, cx{-0.6, 0.3}).member);
    CHECK_THROWS_AS(classify_vr(cx{0.5, 0.0}, cx{0.1, 0.0}), degenerate_input);

    CHECK(classify_vrgeq(zr, zr).where == locus::at_z0);
    CHECK(classify_vrgeq(zr, zr * zr).member);
    CHECK(classify_vrgeq(zr, -zr * zr).member);
    CHECK_FALSE(classify_vrgeq(zr, -zr).member);  // needs a negative derivative

    // the nonnegative-derivative region sits between the zero-derivative lens
    // and the full region
    splitmix64 gen(31);
    for (int i = 0; i < 300; ++i) {
        const cx w{gen.uniform(-0.5, 0.5), gen.uniform(-0.5, 0.5)};
        if (classify_vr0(zr, w).member) CHECK(classify_vrgeq(zr, w).member);
        if (classify_vrgeq(zr, w).member) CHECK(classify_vr(zr, w).member);
    }
}

TEST_CASE("the zero-derivative edge is excluded from the strict region") {
    for (double x : {0.0, 0.3, 0.77, 1.0}) {
        const cx on_edge = real_coeff_curve('C', zr, x);
        CHECK(classify_vrgeq(zr, on_edge).member);
        auto v = classify_vrgt(zr, on_edge);
        CHECK_FALSE(v.member);
        CHECK(v.where == locus::on_excluded);
        CHECK(v.edge == "C");
    }
    CHECK(classify_vrgt(zr, zr).where == locus::at_z0);
    // just inside of the excluded edge the strict region resumes
    const cx mid = real_coeff_curve('C', zr, 0.5);
    const cx inward = mid + 1e-6 * (zr - mid) / std::abs(zr - mid);
    CHECK(classify_vrgt(zr, inward).member);
}

TEST_CASE("zero-derivative lens membership") {
    CHECK(classify_vr0(zr, zr * zr).member);
    CHECK(classify_vr0(zr, -zr * zr).member);
    CHECK_FALSE(classify_vr0(zr, zr).member);
    CHECK_FALSE(classify_vr0(zr, -zr).member);
    for (double x : {0.2, 0.5, 0.8}) {
        auto v = classify_vr0(zr, real_coeff_curve('C', zr, x));
        CHECK(v.member);
        CHECK(v.where == locus::on_boundary);
        auto vn = classify_vr0(zr, -real_coeff_curve('C', zr, x));
        CHECK(vn.member);
        CHECK(vn.where == locus::on_boundary);
    }
}

TEST_CASE("real base points collapse the disc regions to intervals") {
    const cx z{0.5, 0.0};
    CHECK(classify_vu(z, cx{0.3, 0.0}).member);
    CHECK(classify_vu(z, z).where == locus::at_z0);
    CHECK_FALSE(classify_vu(z, cx{-0.1, 0.0}).member);
    CHECK_FALSE(classify_vu(z, cx{0.3, 0.05}).member);
    CHECK(classify_vu(z, cx{0.0, 0.0}).where == locus::on_excluded);

    CHECK(classify_vustar(z, cx{0.7, 0.0}).member);
    CHECK(classify_vustar(z, cx{1.0, 0.0}).where == locus::on_excluded);
    CHECK_FALSE(classify_vustar(z, cx{0.3, 0.0}).member);

    // interval ends for the fixed-derivative region at tau = 1/2
    CHECK(classify_vt(z, 0.5, cx{0.2, 0.0}).member);
    CHECK(classify_vt(z, 0.5, cx{0.3, 0.0}).member);
    CHECK_FALSE(classify_vt(z, 0.5, cx{0.1, 0.0}).member);
    CHECK_FALSE(classify_vt(z, 0.5, cx{0.4, 0.0}).member);

    CHECK(classify_vrgeq(z, cx{-0.25, 0.0}).member);
    CHECK(classify_vrgeq(z, cx{0.5, 0.0}).member);
    CHECK_FALSE(classify_vrgeq(z, cx{0.51, 0.0}).member);
    CHECK(classify_vrgt(z, cx{-0.25, 0.0}).where == locus::on_excluded);
    CHECK(classify_vrgt(z, cx{-0.24, 0.0}).member);
    CHECK(classify_vr0(z, cx{0.25, 0.0}).member);
    CHECK(classify_vr0(z, cx{-0.25, 0.0}).member);
    CHECK_FALSE(classify_vr0(z, cx{0.26, 0.0}).member);

    const cx zn{-0.5, 0.0};
    CHECK(classify_vu(zn, cx{-0.3, 0.0}).member);
    CHECK(classify_vustar(zn, cx{-0.7, 0.0}).member);
    CHECK(classify_vrgt(zn, cx{0.25, 0.0}).where == locus::on_excluded);
}

TEST_CASE("region exports expose edges, flags, and excluded points") {
    auto vu = make_disc_region("VU", zd);
    REQUIRE(vu.edges.size() == 2);
    CHECK(vu.edges[0].name == "Cplus");
    CHECK(vu.edges[0].included);
    CHECK(vu.edges[1].included);
    REQUIRE(vu.excluded_points.size() == 1);
    CHECK(std::abs(vu.excluded_points[0]) == 0.0);
    CHECK(std::abs(vu.edges[0].points.front() - zd) < 1e-15);

    auto vus = make_disc_region("VUstar", zd);
    REQUIRE(vus.edges.size() == 3);
    CHECK(vus.edges[1].name == "unit_circle");
    CHECK_FALSE(vus.edges[1].included);
    CHECK(vus.excluded_points.size() == 2);

    auto vrgt = make_disc_region("VRgt", zr);
    REQUIRE(vrgt.edges.size() == 3);
    CHECK(vrgt.edges[1].name == "C");
    CHECK_FALSE(vrgt.edges[1].included);

    CHECK(make_disc_region("VT", zd, 1.0).point_region);
    CHECK(make_disc_region("VU", cx{0.5, 0.0}).degenerate);
    CHECK_THROWS_AS(make_disc_region("VR", cx{0.5, 0.0}), degenerate_input);
    CHECK_THROWS_AS(make_disc_region("bogus", zd), out_of_range);

    // conjugating the base point conjugates the region
    auto upper = make_disc_region("VR", zr);
    auto lower = make_disc_region("VR", std::conj(zr));
    REQUIRE(upper.edges.size() == lower.edges.size());
    for (size_t e = 0; e < upper.edges.size(); ++e) {
        REQUIRE(upper.edges[e].points.size() == lower.edges[e].points.size());
        for (size_t i = 0; i < upper.edges[e].points.size(); ++i)
            CHECK(std::abs(std::conj(upper.edges[e].points[i]) - lower.edges[e].points[i]) < 1e-15);
    }
}

TEST_CASE("winding of exported boundaries agrees with the closed-form tests") {
    struct probe {
        const char* kind;
        cx z0;
        double tau;
    };
    for (const probe& p : {probe{"VU", zd, 0.0}, probe{"VT", zd, 0.5}, probe{"VR", zr, 0.0},
                           probe{"VRgeq", zr, 0.0}, probe{"VR0", zr, 0.0}}) {
        auto spec = make_disc_region(p.kind, p.z0, p.tau);
        auto poly = boundary_polyline(spec);
        splitmix64 gen(555);
        int checked = 0;
        while (checked < 500) {
            const cx w{gen.uniform(-1.0, 1.0), gen.uniform(-1.0, 1.0)};
            if (std::abs(w) >= 1.0) continue;
            if (distance_to_polyline(poly, w) < 2e-5) continue;  // blur margin
            const bool wind = winding_contains(poly, w, 1e-9) == containment::inside;
            const bool closed_form = classify_region(spec, w, 1e-9).member;
            CHECK(wind == closed_form);
            ++checked;
        }
    }
}

TEST_CASE("membership for the backward-curve region uses the stored boundary") {
    CHECK(classify_vustar(zd, zd).where == locus::at_z0);
    // the region is the sliver between the two curves and the circle, so
    // members hug the rim while points nearer the center fall outside
    CHECK(classify_vustar(zd, cx{0.0, 0.98}).member);
    CHECK(classify_vustar(zd, cx{-0.9610, 0.2665}).member);
    CHECK(classify_vustar(zd, cx{0.48, 0.8314}).member);
    CHECK(classify_vustar(zd, cx{0.8650, 0.4389}).member);
    CHECK_FALSE(classify_vustar(zd, cx{0.0, 0.95}).member);
    CHECK_FALSE(classify_vustar(zd, cx{-0.9, 0.25}).member);
    CHECK_FALSE(classify_vustar(zd, cx{0.0, 0.0}).member);
    CHECK_FALSE(classify_vustar(zd, cx{0.0, -0.5}).member);

    for (double t : {-0.5, -2.0, -6.0}) {
        auto vp = classify_vustar(zd, disc_curve_point(disc_curve::CplusStar, zd, t));
        CHECK(vp.member);
        CHECK(vp.where == locus::on_boundary);
        CHECK(vp.edge == "CplusStar");
        auto vm = classify_vustar(zd, disc_curve_point(disc_curve::CminusStar, zd, t));
        CHECK(vm.member);
        CHECK(vm.where == locus::on_boundary);
        CHECK(vm.edge == "CminusStar");
    }

    auto rim = classify_vustar(zd, std::polar(1.0, 2.0));
    CHECK_FALSE(rim.member);
    CHECK(rim.where == locus::on_excluded);
    CHECK(rim.edge == "unit_circle");
    CHECK_FALSE(classify_vustar(zd, std::polar(1.0, -2.0)).member);

    auto ends = classify_vustar(zd, cx{1.0, 0.0});
    CHECK_FALSE(ends.member);
    CHECK(ends.where == locus::on_excluded);
}
