#include "doctest.h"
#include "gdgap/certificate.hpp"
#include "gdgap/examples.hpp"
#include "gdgap/fuzz.hpp"

using namespace gdgap;

namespace {
Point2 pt(const char* a, const char* b) { return {Scalar::parse(a), Scalar::parse(b)}; }
Point3 pt3(const char* a, const char* b, const char* c) {
    return {Scalar::parse(a), Scalar::parse(b), Scalar::parse(c)};
}
}  // namespace

TEST_CASE("tangent points of the Heronian fixture") {
    BaseConfig cfg = example_config(1);
    TangentPoints tp = tangent_points(cfg);
    CHECK(tp.X == pt3("360890/3761", "197328/3761", "62720/3761"));
    CHECK(tp.Y == pt3("126018/1445", "14208/289", "28224/1445"));
    CHECK(tp.Z == pt3("90", "26448/601", "11520/601"));
}

TEST_CASE("tangent points at the critical radius stay well defined") {
    BaseConfig crit = with_radius(example_config(3), Scalar::parse("1/2*sqrt(2)"));
    TangentPoints tp = tangent_points(crit);
    CHECK(tp.X == pt3("2/5*sqrt(2)", "2/5", "2/5*sqrt(2)"));
    CHECK(tp.Y == pt3("-2/5*sqrt(2)", "2/5", "2/5*sqrt(2)"));
    CHECK(tp.Z == pt3("0", "-2/3", "2/3*sqrt(2)"));
}

TEST_CASE("tangency invariants") {
    RandomStream rs(21, 4);
    for (int i = 0; i < 50; ++i) {
        BaseConfig cfg = random_config(rs, 30, 6);
        TangentPoints tp = tangent_points(cfg);
        Point3 inc{cfg.c.x1, cfg.c.x2, cfg.r};
        Scalar r2 = cfg.r * cfg.r;
        CHECK(norm2(tp.X - inc) == r2);
        CHECK(norm2(tp.Y - inc) == r2);
        CHECK(norm2(tp.Z - inc) == r2);
        for (const Plane& pl : lateral_planes(cfg, tp))
            CHECK(point_plane_dist_sq(pl, inc) == r2);
    }
}

TEST_CASE("tangent points lie on the faces through the apex") {
    BaseConfig cfg = example_config(1);
    TangentPoints tp = tangent_points(cfg);
    Point3 w = apex(cfg);
    // Z on the plane through x, y, w; cyclically for the others
    Plane pxyw = plane_through(lift(cfg.x), lift(cfg.y), w);
    Plane pyzw = plane_through(lift(cfg.y), lift(cfg.z), w);
    Plane pzxw = plane_through(lift(cfg.z), lift(cfg.x), w);
    CHECK(dot(pxyw.n, tp.Z) == pxyw.d);
    CHECK(dot(pyzw.n, tp.X) == pyzw.d);
    CHECK(dot(pzxw.n, tp.Y) == pzxw.d);
}

TEST_CASE("apex of the fixtures") {
    CHECK(apex(example_config(1)) == pt3("215490/2309", "339416/6927", "49280/2309"));
    CHECK(apex(example_config(2)) == pt3("0", "1/3*sqrt(3)", "4"));
}

TEST_CASE("apex height closed form") {
    BaseConfig ex1 = example_config(1);
    CHECK(apex_height(ex1) == Scalar(Rational(49280, 2309)));
    CriticalPair ab = critical_pair(ex1);
    CHECK(apex_height(ex1) ==
          Scalar(2) * Scalar(10) * ab.A / (ab.A - ab.B * Scalar(100)));
    CHECK(apex_height(example_config(2)) == Scalar(4));

    // the A/B form and the critical-square form agree identically
    RandomStream rs(23, 5);
    for (int i = 0; i < 30; ++i) {
        BaseConfig cfg = random_config(rs, 30, 6);
        Scalar rc2 = critical_inradius_sq(cfg);
        CHECK(apex_height(cfg) == Scalar(2) * cfg.r * rc2 / (rc2 - cfg.r * cfg.r));
    }
}

TEST_CASE("equilateral closed form 2 l2 r / (l2 - 12 r^2)") {
    // side 2 base in Q(sqrt(3)) at various radii
    BaseConfig base = example_config(2);
    for (const char* rt : {"1/5", "1/2", "4/7"}) {
        Scalar r = Scalar::parse(rt);
        BaseConfig cfg = with_radius(base, r);
        Scalar l2(4);
        CHECK(apex_height(cfg) == Scalar(2) * l2 * r / (l2 - Scalar(12) * r * r));
    }
}

TEST_CASE("critical radius degenerates to a prism, supercritical is distinct") {
    BaseConfig crit = with_radius(example_config(3), Scalar::parse("1/2*sqrt(2)"));
    CHECK_THROWS_WITH_AS(apex(crit), doctest::Contains("prism"), degeneracy_error);
    BaseConfig super = with_radius(example_config(3), Scalar(1));
    CHECK_THROWS_WITH_AS(apex(super), doctest::Contains("exceeds"), degeneracy_error);
    CHECK_THROWS_AS(apex_height(crit), degeneracy_error);
}

TEST_CASE("coplanarity determinant detects criticality") {
    BaseConfig crit = with_radius(example_config(3), Scalar::parse("1/2*sqrt(2)"));
    CHECK(criticality_coplanarity(crit).is_zero());

    BaseConfig ex1 = example_config(1);
    CHECK(criticality_coplanarity(ex1) ==
          Scalar(Rational(mpz_class("312812236800"), mpz_class("653244329"))));

    // rational isoceles configs whose critical value is a perfect square
    struct Fixture {
        const char* h;
        const char* e;
        const char* r_crit;
    };
    for (const Fixture& f : {Fixture{"2/3", "1/2", "1/4"}, Fixture{"3", "1/3", "2/3"},
                             Fixture{"3/4", "1/3", "1/3"}}) {
        BaseConfig cfg = BaseConfig::make(pt("-1", "0"), pt("1", "0"), pt("0", f.h),
                                          pt("0", f.e), Scalar::parse(f.r_crit));
        CHECK(critical_inradius_sq(cfg) == cfg.r * cfg.r);
        CHECK(classify_radius(cfg) == RadiusRegime::critical);
        CHECK(criticality_coplanarity(cfg).is_zero());
    }
}

TEST_CASE("1/w3 decreases monotonically toward the prism limit") {
    BaseConfig base = example_config(1);
    Scalar rc2 = critical_inradius_sq(base);
    Scalar prev;
    bool first = true;
    for (long num = 1; num <= 9; ++num) {
        Scalar r = Scalar(Rational(num, 10)) * Scalar(39);  // approaches r_crit ~ 39.87
        if (compare(r * r, rc2) >= 0) break;
        Scalar inv = Scalar(1) / apex_height(with_radius(base, r));
        if (!first) CHECK(compare(inv, prev) < 0);
        prev = inv;
        first = false;
    }
    CHECK(!first);
}

TEST_CASE("lateral edges are parallel exactly at criticality") {
    BaseConfig crit = with_radius(example_config(3), Scalar::parse("1/2*sqrt(2)"));
    auto dirs = lateral_edge_directions(crit);
    for (int i = 0; i < 3; ++i) {
        Point3 c = cross(dirs[i], dirs[(i + 1) % 3]);
        CHECK(c.x1.is_zero());
        CHECK(c.x2.is_zero());
        CHECK(c.x3.is_zero());
    }
    Point3 shared = pt3("0", "1", "2*sqrt(2)");
    Point3 c0 = cross(dirs[0], shared);
    CHECK((c0.x1.is_zero() && c0.x2.is_zero() && c0.x3.is_zero()));

    // subcritical: not parallel
    BaseConfig sub = example_config(1);
    auto d2 = lateral_edge_directions(sub);
    Point3 c1 = cross(d2[0], d2[1]);
    CHECK(!(c1.x1.is_zero() && c1.x2.is_zero() && c1.x3.is_zero()));
}
