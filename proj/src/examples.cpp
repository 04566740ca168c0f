#include "gdgap/examples.hpp"

#include "gdgap/certificate.hpp"
#include "gdgap/fuzz.hpp"

namespace gdgap {

namespace {

Point2 pt(const char* a, const char* b) { return {Scalar::parse(a), Scalar::parse(b)}; }

void push(std::vector<ExampleCheck>& out, std::string name, const std::string& expected,
          const std::string& actual) {
    bool ok = Scalar::parse(expected) == Scalar::parse(actual);
    out.push_back({std::move(name), expected, actual, ok});
}

void push_point3(std::vector<ExampleCheck>& out, const std::string& name, const char* e1,
                 const char* e2, const char* e3, const Point3& p) {
    push(out, name + ".1", e1, p.x1.str());
    push(out, name + ".2", e2, p.x2.str());
    push(out, name + ".3", e3, p.x3.str());
}

}  // namespace

BaseConfig example_config(int n) {
    switch (n) {
        case 1:
            return BaseConfig::make(pt("0", "0"), pt("154", "0"), pt("55", "132"),
                                    pt("90", "48"), Scalar::parse("10"));
        case 2:
            return BaseConfig::make(pt("-1", "0"), pt("1", "0"), pt("0", "sqrt(3)"),
                                    pt("0", "1/3*sqrt(3)"), Scalar::parse("1/2"));
        case 3:
            // critical radius fixture; r here is a subcritical placeholder,
            // the checks evaluate specific radii explicitly
            return BaseConfig::make(pt("-sqrt(2)", "-1"), pt("sqrt(2)", "-1"), pt("0", "1"),
                                    pt("0", "0"), Scalar::parse("1/3"));
        default:
            throw input_error("example: n must be 1, 2 or 3");
    }
}

namespace {

std::vector<ExampleCheck> example1() {
    std::vector<ExampleCheck> out;
    BaseConfig cfg = example_config(1);
    AreaSet a = area_set(cfg);
    push(out, "a0", "20328", a.a0.str());
    push(out, "a_x", "3696", a.ax.str());
    push(out, "a_y", "9240", a.ay.str());
    push(out, "a_z", "7392", a.az.str());
    CriticalPair ab = critical_pair(cfg);
    push(out, "A", "252444487680", ab.A.str());
    push(out, "B", "158802336", ab.B.str());
    Tetrahedron tet = build_tetrahedron(cfg);
    push_point3(out, "w", "215490/2309", "339416/6927", "49280/2309", tet.w);
    Metrics m = metrics(tet);
    push_point3(out, "o", "77", "363/8", "-15818598389/93098880", m.o);
    push(out, "R^2", "319462309835987155321/8667401457254400", m.R2.str());
    push(out, "d^2", "282073185661355308921/8667401457254400", m.d2.str());
    GapCertificate cert = certificate(cfg);
    push(out, "gap", "198873308525/145467", cert.lhs.str());
    push(out, "u1", "1057056", cert.u1.str());
    push(out, "v1", "-7868399616", cert.v1.str());
    push(out, "u2", "213444", cert.u2.str());
    push(out, "v2", "-2363251968", cert.v2.str());
    return out;
}

std::vector<ExampleCheck> example2() {
    std::vector<ExampleCheck> out;
    BaseConfig cfg = example_config(2);
    AreaSet a = area_set(cfg);
    push(out, "a_x", "2/3*sqrt(3)", a.ax.str());
    push(out, "a_y", "2/3*sqrt(3)", a.ay.str());
    push(out, "a_z", "2/3*sqrt(3)", a.az.str());
    CriticalPair ab = critical_pair(cfg);
    push(out, "A", "8/9*sqrt(3)", ab.A.str());
    push(out, "B", "8/3*sqrt(3)", ab.B.str());
    Tetrahedron tet = build_tetrahedron(cfg);
    push_point3(out, "w", "0", "1/3*sqrt(3)", "4", tet.w);
    Metrics m = metrics(tet);
    push_point3(out, "o", "0", "1/3*sqrt(3)", "11/6", m.o);
    push(out, "R^2", "169/36", m.R2.str());
    push(out, "d^2", "16/9", m.d2.str());
    GapCertificate cert = certificate(cfg);
    push(out, "gap", "0", cert.lhs.str());
    Verdict v = gd_verdict(m);
    push(out, "equality", "1", Scalar(v.equality ? 1 : 0).str());
    return out;
}

std::vector<ExampleCheck> example3() {
    std::vector<ExampleCheck> out;
    BaseConfig cfg = example_config(3);
    push(out, "r_crit^2", "1/2", critical_inradius_sq(cfg).str());

    BaseConfig crit = with_radius(cfg, Scalar::parse("1/2*sqrt(2)"));
    TangentPoints tp = tangent_points(crit);
    push_point3(out, "X", "2/5*sqrt(2)", "2/5", "2/5*sqrt(2)", tp.X);
    push_point3(out, "Y", "-2/5*sqrt(2)", "2/5", "2/5*sqrt(2)", tp.Y);
    push_point3(out, "Z", "0", "-2/3", "2/3*sqrt(2)", tp.Z);
    push(out, "coplanarity_det", "0", criticality_coplanarity(crit).str());

    // at criticality the three lateral edges share the direction (0, 1, 2*sqrt(2))
    Point3 dir{Scalar(0), Scalar(1), Scalar::parse("2*sqrt(2)")};
    auto dirs = lateral_edge_directions(crit);
    for (int i = 0; i < 3; ++i) {
        Point3 c = cross(dirs[i], dir);
        push(out, "edge_direction_parallel." + std::to_string(i + 1), "1",
             Scalar(c.x1.is_zero() && c.x2.is_zero() && c.x3.is_zero() ? 1 : 0).str());
    }

    // the gap polynomial for this base is r^2 (1 - 2 r^2)
    for (const char* rtext : {"1/4", "1/3", "2/5"}) {
        Scalar r = Scalar::parse(rtext);
        Scalar expect = r * r * (Scalar(1) - Scalar(2) * r * r);
        Scalar got = pipeline_gap(with_radius(cfg, r));
        push(out, std::string("gap(r=") + rtext + ")", expect.str(), got.str());
    }
    return out;
}

}  // namespace

std::vector<ExampleCheck> run_example(int n) {
    switch (n) {
        case 1: return example1();
        case 2: return example2();
        case 3: return example3();
        default: throw input_error("example: n must be 1, 2 or 3");
    }
}

}  // namespace gdgap
