#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "shellga/charts.hpp"
#include "shellga/multivector.hpp"
#include "shellga/surface.hpp"

using namespace shellga;

namespace {

// Independent blade-product oracle: a blade is a sorted index list over
// {1,2,3}; multiply by concatenating, bubble-sorting with sign bookkeeping,
// and cancelling repeated indices (unit square).  Completely separate from
// the kernel's expanded table.
struct BladeProduct {
    int index;  // resulting blade slot 0..7
    int sign;
};

const std::vector<std::vector<int>> kBlades = {
    {}, {1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};

int blade_slot(const std::vector<int>& blade)
{
    for (size_t k = 0; k < kBlades.size(); ++k)
        if (kBlades[k] == blade) return static_cast<int>(k);
    REQUIRE(false);
    return -1;
}

BladeProduct blade_multiply(int i, int j)
{
    std::vector<int> seq = kBlades[i];
    seq.insert(seq.end(), kBlades[j].begin(), kBlades[j].end());
    int sign = 1;
    // bubble sort, each adjacent swap flips the sign
    for (size_t pass = 0; pass + 1 < seq.size() || pass == 0; ++pass) {
        bool swapped = false;
        for (size_t k = 0; k + 1 < seq.size(); ++k) {
            if (seq[k] > seq[k + 1]) {
                std::swap(seq[k], seq[k + 1]);
                sign = -sign;
                swapped = true;
            }
        }
        if (!swapped) break;
    }
    // cancel adjacent duplicates (e_a e_a = 1)
    std::vector<int> reduced;
    for (size_t k = 0; k < seq.size();) {
        if (k + 1 < seq.size() && seq[k] == seq[k + 1]) {
            k += 2;
        } else {
            reduced.push_back(seq[k]);
            ++k;
        }
    }
    return {blade_slot(reduced), sign};
}

Multivector blade(int slot)
{
    Multivector m;
    m.c[slot] = 1.0;
    return m;
}

Multivector random_mv(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Multivector m;
    for (auto& v : m.c) v = dist(rng);
    return m;
}

Vec3 random_vec(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    return {dist(rng), dist(rng), dist(rng)};
}

// Curved, non-orthogonal graph chart for frame-dependent checks.
Chart make_skew_chart()
{
    Chart c;
    c.id = "skew";
    c.domain = {-1.0, 1.0, -1.0, 1.0};
    c.position = [](double u, double v) {
        return Vec3{u + 0.4 * v, 0.8 * v, 0.3 * u * v + 0.1 * u * u};
    };
    c.d1 = [](double u, double v) { return Vec3{1.0, 0.0, 0.3 * v + 0.2 * u}; };
    c.d2 = [](double u, double) { return Vec3{0.4, 0.8, 0.3 * u}; };
    c.d11 = [](double, double) { return Vec3{0.0, 0.0, 0.2}; };
    c.d12 = [](double, double) { return Vec3{0.0, 0.0, 0.3}; };
    c.d22 = [](double, double) { return Vec3{}; };
    return c;
}

} // namespace

TEST_CASE("geometric product reproduces the independent blade oracle")
{
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const BladeProduct expect = blade_multiply(i, j);
            const Multivector got = blade(i) * blade(j);
            for (int k = 0; k < 8; ++k) {
                const double want = (k == expect.index) ? double(expect.sign) : 0.0;
                CHECK(got.c[k] == want);
            }
        }
}

TEST_CASE("unit vector squares to one")
{
    const Multivector e1 = blade(1);
    CHECK((e1 * e1).scalar_part() == 1.0);
}

TEST_CASE("unit bivector and pseudoscalar square to minus one")
{
    const Multivector e12 = blade(4);
    CHECK((e12 * e12).scalar_part() == -1.0);
    const Multivector i3 = ambient_pseudoscalar();
    CHECK((i3 * i3).scalar_part() == -1.0);
}

TEST_CASE("geometric product is bilinear and associative on random inputs")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 50; ++k) {
        const Multivector a = random_mv(rng), b = random_mv(rng), c = random_mv(rng);
        CHECK(approx_equal((a + b) * c, a * c + b * c, 1e-12));
        CHECK(approx_equal((a * b) * c, a * (b * c), 1e-12));
    }
}

TEST_CASE("vector product splits into symmetric dot and antisymmetric wedge")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        const Vec3 a = random_vec(rng), b = random_vec(rng);
        const Multivector ma = Multivector::vector(a), mb = Multivector::vector(b);
        const Multivector sym = 0.5 * (ma * mb + mb * ma);
        const Multivector asym = 0.5 * (ma * mb - mb * ma);
        CHECK(sym.scalar_part() == doctest::Approx(dot(a, b)).epsilon(1e-12));
        CHECK(max_abs(sym - sym.grade(0)) <= 1e-12);
        CHECK(approx_equal(asym, wedge(a, b), 1e-12));
    }
}

TEST_CASE("dual maps oriented planes to normals")
{
    CHECK(approx_equal(dual(Multivector::bivector(1, 0, 0)),
                       Multivector::vector({0, 0, 1})));
    // dual(e3) = e2^e1 = -e1^e2
    CHECK(approx_equal(dual(Multivector::vector({0, 0, 1})),
                       Multivector::bivector(-1, 0, 0)));
    CHECK(approx_equal(dual(Multivector{}), Multivector{}));
}

TEST_CASE("dual twice negates vectors and bivectors")
{
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const Multivector v = Multivector::vector(random_vec(rng));
        const Multivector b = random_mv(rng).grade(2);
        CHECK(approx_equal(dual(dual(v)), -v, 1e-12));
        CHECK(approx_equal(dual(dual(b)), -b, 1e-12));
    }
}

TEST_CASE("cross product basics")
{
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0};
    CHECK(max_abs(cross(e1, e2) - Vec3{0, 0, 1}) == 0.0);
    const Vec3 a{0.3, -0.7, 0.2};
    CHECK(max_abs(cross(a, a)) <= 1e-15);
    CHECK(max_abs(cross(Vec3{1, 2, 0}, Vec3{0, 1, 0}) - Vec3{0, 0, 1}) <= 1e-15);
}

TEST_CASE("cross product equals the determinant formula on 1000 random pairs")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 1000; ++k) {
        const Vec3 a = random_vec(rng), b = random_vec(rng);
        const Vec3 got = cross(a, b);
        const Vec3 det{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
                       a.x * b.y - a.y * b.x};
        CHECK(max_abs(got - det) <= 1e-12);
        CHECK(std::abs(dot(got, a)) <= 1e-12);
        CHECK(std::abs(dot(got, b)) <= 1e-12);
    }
}

TEST_CASE("grade projection is idempotent and partitions the element")
{
    std::mt19937_64 rng(19);
    const Multivector m = random_mv(rng);
    Multivector sum;
    for (int k = 0; k < 4; ++k) {
        const Multivector g = m.grade(k);
        CHECK(approx_equal(g.grade(k), g));
        sum = sum + g;
    }
    CHECK(approx_equal(sum, m));
}

TEST_CASE("bivector components reconstruct in an orthonormal frame")
{
    const Chart plane = make_plane();
    const SurfaceFrame f = frames_at(plane, 0.1, -0.2);
    const Multivector omega = Multivector::bivector(1, 0, 0); // e1^e2
    const BivectorComponents comp = bivector_components(omega, f);
    CHECK(approx_equal(bivector_from_cov(comp.cov, f), omega, 1e-12));
    CHECK(approx_equal(bivector_from_contra(comp.contra, f), omega, 1e-12));
}

TEST_CASE("bivector components reconstruct through a random non-orthogonal frame")
{
    const Chart skew = make_skew_chart();
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coord(-0.8, 0.8);
    for (int k = 0; k < 50; ++k) {
        const SurfaceFrame f = frames_at(skew, coord(rng), coord(rng));
        const Multivector omega = random_mv(rng).grade(2);
        const BivectorComponents comp = bivector_components(omega, f);
        CHECK(max_abs(bivector_from_cov(comp.cov, f) - omega) < 1e-12);
        CHECK(max_abs(bivector_from_contra(comp.contra, f) - omega) < 1e-12);
    }
}

TEST_CASE("zero bivector gives zero components")
{
    const SurfaceFrame f = frames_at(make_skew_chart(), 0.3, 0.1);
    const BivectorComponents comp = bivector_components(Multivector{}, f);
    for (int A = 0; A < 3; ++A) {
        CHECK(comp.cov[A] == 0.0);
        CHECK(comp.contra[A] == 0.0);
    }
}

TEST_CASE("bivector basis duality holds on sampled frames")
{
    const Chart skew = make_skew_chart();
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> coord(-0.8, 0.8);
    for (int k = 0; k < 20; ++k) {
        const SurfaceFrame f = frames_at(skew, coord(rng), coord(rng));
        for (int A = 0; A < 3; ++A)
            for (int B = 0; B < 3; ++B) {
                const double want = (A == B) ? 1.0 : 0.0;
                CHECK(inner_scalar(f.biv_recip[A], f.biv_frame[B]) ==
                      doctest::Approx(want).epsilon(1e-12));
            }
    }
}
