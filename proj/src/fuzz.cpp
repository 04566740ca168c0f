#include "gdgap/fuzz.hpp"

#include <atomic>
#include <sstream>
#include <thread>

#include "gdgap/config_io.hpp"

namespace gdgap {

namespace {
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix(seed) ^ mix(0x5deece66dULL + index)) {
    next();
    next();
}

std::uint64_t RandomStream::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long RandomStream::next_in(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

Rational RandomStream::rational(long max_abs_num, long max_den) {
    return Rational(next_in(-max_abs_num, max_abs_num), next_in(1, max_den));
}

Rational RandomStream::positive_rational(long max_num, long max_den) {
    return Rational(next_in(1, max_num), next_in(1, max_den));
}

Rational random_subcritical_radius(RandomStream& rs, const Scalar& rc2) {
    Rational q(1);
    while (compare(Scalar(q * q), rc2) >= 0) q = q / Rational(2);
    while (compare(Scalar(q * Rational(2) * q * Rational(2)), rc2) < 0) q = q * Rational(2);
    return q * Rational(rs.next_in(1, 29), 30);
}

BaseConfig random_config(RandomStream& rs, long coord_bound, long den_bound) {
    for (;;) {
        Point2 x{rs.rational(coord_bound, den_bound), rs.rational(coord_bound, den_bound)};
        Point2 y{rs.rational(coord_bound, den_bound), rs.rational(coord_bound, den_bound)};
        Point2 z{rs.rational(coord_bound, den_bound), rs.rational(coord_bound, den_bound)};
        Scalar a0 = twice_area(x, y, z);
        if (a0.is_zero()) continue;
        if (a0.sign() < 0) std::swap(y, z);
        Rational t1 = rs.positive_rational(20, 5), t2 = rs.positive_rational(20, 5),
                 t3 = rs.positive_rational(20, 5);
        Scalar ts{t1 + t2 + t3};
        Point2 c{(Scalar(t1) * x.x1 + Scalar(t2) * y.x1 + Scalar(t3) * z.x1) / ts,
                 (Scalar(t1) * x.x2 + Scalar(t2) * y.x2 + Scalar(t3) * z.x2) / ts};
        BaseConfig probe = BaseConfig::make(x, y, z, c, Scalar(1));
        Rational r = random_subcritical_radius(rs, critical_inradius_sq(probe));
        return with_radius(probe, Scalar(r));
    }
}

BaseConfig random_acute_circumcenter_config(RandomStream& rs) {
    for (;;) {
        Point2 x{rs.rational(12, 3), rs.rational(12, 3)};
        Point2 y{rs.rational(12, 3), rs.rational(12, 3)};
        Point2 z{rs.rational(12, 3), rs.rational(12, 3)};
        Scalar a0 = twice_area(x, y, z);
        if (a0.is_zero()) continue;
        if (a0.sign() < 0) std::swap(y, z);
        if (dot(y - x, z - x).sign() <= 0 || dot(x - y, z - y).sign() <= 0 ||
            dot(x - z, y - z).sign() <= 0)
            continue;  // not strictly acute
        Point2 c = circumcenter2(x, y, z);
        BaseConfig probe = BaseConfig::make(x, y, z, c, Scalar(1));
        Rational r = random_subcritical_radius(rs, critical_inradius_sq(probe));
        return with_radius(probe, Scalar(r));
    }
}

BaseConfig random_heronian_incenter_config(RandomStream& rs) {
    long m = rs.next_in(2, 6), n = rs.next_in(1, m - 1);
    long p = rs.next_in(2, 6), q = rs.next_in(1, p - 1);
    // two rational right triangles scaled to a common height 4mnpq
    Rational leg1((m * m - n * n) * 2 * p * q);
    Rational leg2((p * p - q * q) * 2 * m * n);
    Rational h(4 * m * n * p * q);
    Rational scale = rs.positive_rational(6, 4);
    Rational tx = rs.rational(30, 3), ty = rs.rational(30, 3);
    Point2 x{tx, ty};
    Point2 y{Scalar(scale * (leg1 + leg2)) + Scalar(tx), ty};
    Point2 z{Scalar(scale * leg1) + Scalar(tx), Scalar(scale * h) + Scalar(ty)};
    Point2 c = incenter2(x, y, z);
    BaseConfig probe = BaseConfig::make(x, y, z, c, Scalar(1));
    Rational r = random_subcritical_radius(rs, critical_inradius_sq(probe));
    return with_radius(probe, Scalar(r));
}

std::optional<std::string> check_invariants(const BaseConfig& cfg) {
    try {
        AreaSet a = area_set(cfg);
        if (!(a.ax + a.ay + a.az == a.a0)) return "area additivity failed";
        CriticalPair ab = critical_pair(cfg);
        if (ab.B.sign() <= 0) return "B <= 0";
        Scalar den = a.a0 * (ab.A - ab.B * cfg.r * cfg.r);
        if (den.sign() <= 0) return "denominator a0 (A - B r^2) <= 0";

        TangentPoints tp = tangent_points(cfg);
        Point3 inc{cfg.c.x1, cfg.c.x2, cfg.r};
        Scalar r2 = cfg.r * cfg.r;
        for (const Point3* t : {&tp.X, &tp.Y, &tp.Z})
            if (!(norm2(*t - inc) == r2)) return "tangent point off the insphere";
        for (const Plane& pl : lateral_planes(cfg, tp))
            if (!(point_plane_dist_sq(pl, inc) == r2)) return "lateral face not tangent";

        Tetrahedron tet = build_tetrahedron(cfg);  // asserts apex height internally
        if (!(tet.w.x3 == apex_height(cfg))) return "apex height mismatch";
        Metrics m = metrics(tet);  // asserts circumcenter equidistance
        Verdict v = gd_verdict(m);
        if (!v.satisfied) return "inequality verdict not satisfied";

        GapCertificate cert = certificate(cfg);  // asserts lhs == rhs, dis exactness
        if (cert.rhs.sign() < 0) return "negative certificate value";
        if (!(cert.lhs == v.squared_gap)) return "certificate lhs differs from verdict gap";
        if (!cert.alpha.is_zero()) {
            auto [av1, av2] = closed_form_v(cfg);
            if (!(av1 == cert.v1) || !(av2 == cert.v2))
                return "closed-form v pair differs from the recovered pair";
        }
        return std::nullopt;
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

FuzzSummary run_fuzz(const FuzzParams& params) {
    if (params.trials < 1) throw input_error("fuzz: trials must be >= 1");
    std::vector<std::optional<std::string>> results(params.trials);
    std::vector<std::string> configs(params.trials);

    auto worker = [&](std::atomic<int>& cursor) {
        for (;;) {
            int i = cursor.fetch_add(1);
            if (i >= params.trials) return;
            RandomStream rs(params.seed, static_cast<std::uint64_t>(i));
            BaseConfig cfg = random_config(rs, params.coord_bound, params.den_bound);
            configs[i] = config_text(cfg);
            results[i] = check_invariants(cfg);
        }
    };

    unsigned n = params.threads ? params.threads : std::thread::hardware_concurrency();
    if (n <= 1) {
        std::atomic<int> cursor{0};
        worker(cursor);
    } else {
        std::atomic<int> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back([&] { worker(cursor); });
        for (auto& th : pool) th.join();
    }

    FuzzSummary summary;
    summary.trials = params.trials;
    for (int i = 0; i < params.trials; ++i) {
        if (!results[i]) {
            ++summary.ok;
        } else {
            summary.failures.push_back({i, configs[i], *results[i]});
        }
    }
    return summary;
}

std::string FuzzSummary::text() const {
    std::ostringstream out;
    out << ok << "/" << trials << " ok\n";
    for (const auto& f : failures) {
        out << "trial " << f.trial << " FAILED: " << f.message << "\n";
        out << f.config;  // verbatim, replayable
    }
    return out.str();
}

}  // namespace gdgap
