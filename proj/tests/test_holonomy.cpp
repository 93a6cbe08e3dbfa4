#include <doctest.h>

#include <cmath>

#include "conewright/holonomy.hpp"

using namespace cw;

namespace {
constexpr double kPi = 3.14159265358979323846;

// [[i, 0], [0, -i]] and [[1, 1], [-2, -1]], both determinant one, both of
// order two in the projective group.
const ExactMatrix kA{{0, 1}, {0, 0}, {0, 0}, {0, -1}};
const ExactMatrix kB{{1, 0}, {1, 0}, {-2, 0}, {-1, 0}};
const ExactMatrix kI{{1, 0}, {0, 0}, {0, 0}, {1, 0}};
}  // namespace

TEST_CASE("exact matrix algebra") {
    CHECK(kA.det() == GaussInt{1, 0});
    CHECK(kB.det() == GaussInt{1, 0});
    CHECK((kA * kA.inverse()).is_one());
    CHECK((kB * kB.inverse()).is_one());
    CHECK((kA * kA).is_minus_one());
    CHECK((kB * kB).is_minus_one());
    CHECK(kI.is_one());
    CHECK(!kI.is_minus_one());

    const ExactMatrix K = kA * kB * kA.inverse() * kB.inverse();
    const ExactMatrix expect{{-3, 0}, {-2, 0}, {-4, 0}, {-3, 0}};
    CHECK(K == expect);
    const IsomClass cls = classify(K.to_isometry());
    CHECK(cls.kind == IsomClass::Kind::Loxodromic);
}

TEST_CASE("relator verification agrees between exact and floating paths") {
    Presentation p;
    p.generators = {"m", "a", "b"};
    p.relators.push_back({{"m", 1}, {"a", 1}, {"m", -1}, {"b", -2}, {"a", -1}});
    p.relators.push_back(
        {{"m", 1}, {"b", 1}, {"m", -1}, {"b", -2}, {"a", -1}, {"b", -2}, {"a", -1}, {"b", -1}});

    RepAssignment exact;
    exact.exact = true;
    exact.exact_images = {{"m", kI}, {"a", kA}, {"b", kB}};
    for (const auto& [g, em] : exact.exact_images) exact.images[g] = em.to_isometry();
    const auto ve = verify_presentation(p, exact);
    REQUIRE(ve.size() == 2);
    CHECK(ve[0]);
    CHECK(ve[1]);

    RepAssignment fl;
    fl.exact = false;
    fl.images = exact.images;
    const auto vf = verify_presentation(p, fl);
    CHECK(vf[0]);
    CHECK(vf[1]);

    // perturb one image: relators fail in the floating path
    RepAssignment bad = fl;
    bad.images["b"] = compose(bad.images["b"], Isometry(1.0, 1e-3, 0.0, 1.0));
    const auto vb = verify_presentation(p, bad);
    CHECK(!(vb[0] && vb[1]));
}

TEST_CASE("sign lifts: obstructed and unobstructed cases") {
    // order-two cyclic group, image squares to minus one: never lifts
    Presentation p2;
    p2.generators = {"a"};
    p2.relators = {{{"a", 2}}};
    RepAssignment r2;
    r2.exact = true;
    r2.exact_images = {{"a", kA}};
    r2.images["a"] = kA.to_isometry();
    const LiftResult l2 = lift_obstruction(p2, r2);
    CHECK(verify_presentation(p2, r2)[0]);
    CHECK(!l2.liftable);
    REQUIRE(l2.signs.size() == 1);
    CHECK(l2.signs[0] == 1);
    REQUIRE(l2.parity.size() == 1);
    CHECK(l2.parity[0][0] == 0);  // even exponent sum: flips cannot help

    // same group represented trivially: lifts
    RepAssignment triv;
    triv.exact = true;
    triv.exact_images = {{"a", kI}};
    triv.images["a"] = kI.to_isometry();
    const LiftResult lt = lift_obstruction(p2, triv);
    CHECK(lt.liftable);

    // free group: no relators, always liftable, no flips needed
    Presentation pf;
    pf.generators = {"a", "b"};
    RepAssignment rf;
    rf.exact = true;
    rf.exact_images = {{"a", kA}, {"b", kB}};
    for (const auto& [g, em] : rf.exact_images) rf.images[g] = em.to_isometry();
    const LiftResult lf = lift_obstruction(pf, rf);
    CHECK(lf.liftable);
    for (uint8_t f : lf.flips) CHECK(f == 0);

    // odd-exponent relator: a generator flip can always absorb a minus sign
    Presentation po;
    po.generators = {"a"};
    po.relators = {{{"a", 3}}};
    RepAssignment ro;
    const double c = std::cos(2 * kPi / 3), s = std::sin(2 * kPi / 3);
    ro.images["a"] = Isometry(complexd(c, s), 0.0, 0.0, complexd(c, -s));
    CHECK(verify_presentation(po, ro)[0]);
    CHECK(lift_obstruction(po, ro).liftable);
}

TEST_CASE("sign lifts: floating-point images carry relator signs") {
    // half-turn whose matrix squares to minus one, as plain floats
    Presentation p2;
    p2.generators = {"a"};
    p2.relators = {{{"a", 2}}};
    RepAssignment r2;
    r2.images["a"] = Isometry(complexd(0, 1), 0.0, 0.0, complexd(0, -1));
    CHECK(verify_presentation(p2, r2)[0]);
    const LiftResult l2 = lift_obstruction(p2, r2);
    REQUIRE(l2.signs.size() == 1);
    CHECK(l2.signs[0] == 1);
    CHECK(!l2.liftable);

    // a * a^-1 multiplies out to plus the identity: no sign to absorb
    Presentation pid;
    pid.generators = {"a"};
    pid.relators = {{{"a", 1}, {"a", -1}}};
    const LiftResult lid = lift_obstruction(pid, r2);
    REQUIRE(lid.signs.size() == 1);
    CHECK(lid.signs[0] == 0);
    CHECK(lid.liftable);

    // sixth turn, relator a^6: even exponent sum with a sign, so no lift
    Presentation p6;
    p6.generators = {"a"};
    p6.relators = {{{"a", 6}}};
    RepAssignment r6;
    const double ch = std::cos(kPi / 6), sh = std::sin(kPi / 6);
    r6.images["a"] = Isometry(complexd(ch, sh), 0.0, 0.0, complexd(ch, -sh));
    CHECK(verify_presentation(p6, r6)[0]);
    const LiftResult l6 = lift_obstruction(p6, r6);
    REQUIRE(l6.signs.size() == 1);
    CHECK(l6.signs[0] == 1);
    CHECK(!l6.liftable);
}

TEST_CASE("cone pair conditions: straight axis cases") {
    const Geodesic up{BPoint::at({0.0, 0.0}), BPoint::infinity()};
    const Isometry mu = rotation_about(up, 1.1);
    const Isometry la = loxodromic_along(up, 0.9, 0.4);

    const ConeVerdict v = cone_conditions(mu, la);
    CHECK(v.kind == ConeVerdict::Kind::ConePair);
    CHECK(v.angle == doctest::Approx(1.1).epsilon(1e-10));
    CHECK(v.length == doctest::Approx(0.9).epsilon(1e-10));
    CHECK(v.twist == doctest::Approx(0.4).epsilon(1e-10));

    // trivial meridian is accepted with angle zero
    const ConeVerdict vid = cone_conditions(Isometry::identity(), la);
    CHECK(vid.kind == ConeVerdict::Kind::ConePair);
    CHECK(vid.angle == 0.0);

    // angle beyond pi is reported as measured, not folded
    const ConeVerdict vbig = cone_conditions(rotation_about(up, 4.0), la);
    CHECK(vbig.kind == ConeVerdict::Kind::ConePair);
    CHECK(vbig.angle == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("cone pair conditions: failure reasons") {
    const Geodesic up{BPoint::at({0.0, 0.0}), BPoint::infinity()};
    const Geodesic other{BPoint::at({3.0, 0.0}), BPoint::at({5.0, 1.0})};

    // lambda elliptic: not a tube direction
    const ConeVerdict v1 = cone_conditions(rotation_about(up, 0.5), rotation_about(up, 1.0));
    CHECK(v1.kind == ConeVerdict::Kind::Fails);
    CHECK(v1.reason == "trace of lambda in [-2,2]");

    // mu loxodromic: not a cone rotation
    const ConeVerdict v2 = cone_conditions(loxodromic_along(up, 0.5, 0.0), loxodromic_along(up, 1.0, 0.0));
    CHECK(v2.kind == ConeVerdict::Kind::Fails);
    CHECK(v2.reason == "mu not elliptic or identity");

    // distinct axes
    const ConeVerdict v3 = cone_conditions(rotation_about(other, 0.5), loxodromic_along(up, 1.0, 0.0));
    CHECK(v3.kind == ConeVerdict::Kind::Fails);
    CHECK(v3.reason == "skew axes");

    // non-commuting elliptic/loxodromic sharing one endpoint only
    const Geodesic half{BPoint::at({0.0, 0.0}), BPoint::at({1.0, 0.0})};
    const ConeVerdict v4 = cone_conditions(rotation_about(half, 0.7), loxodromic_along(up, 1.0, 0.0));
    CHECK(v4.kind == ConeVerdict::Kind::Fails);
}

TEST_CASE("parabolic pairs: rank two versus rank one") {
    const Isometry t1(1.0, complexd(1.0, 0.0), 0.0, 1.0);
    const Isometry t2(1.0, complexd(0.0, 1.0), 0.0, 1.0);
    const Isometry t3(1.0, complexd(-2.5, 0.0), 0.0, 1.0);

    const ConeVerdict v12 = cone_conditions(t1, t2);
    CHECK(v12.kind == ConeVerdict::Kind::ParabolicRankTwo);

    const ConeVerdict v13 = cone_conditions(t1, t3);
    CHECK(v13.kind == ConeVerdict::Kind::Fails);
    CHECK(v13.reason == "rank one");

    // conjugate away from infinity: verdicts are conjugation invariant
    const Isometry g(complexd(0.4, 1.0), complexd(-0.3, 0.2), complexd(1.1, 0.0), complexd(0.7, -0.5));
    const auto conj = [&](const Isometry& h) { return compose(compose(g, h), g.inverse()); };
    CHECK(cone_conditions(conj(t1), conj(t2)).kind == ConeVerdict::Kind::ParabolicRankTwo);
    const ConeVerdict c13 = cone_conditions(conj(t1), conj(t3));
    CHECK(c13.kind == ConeVerdict::Kind::Fails);
    CHECK(c13.reason == "rank one");
}

TEST_CASE("angle shifts by even full turns") {
    const std::array<double, 4> theta{0.5, 1.0, 2.0, 3.0};
    const auto shifted = prop_angle_witness(theta, {1, 0, 0, 0});
    CHECK(shifted[0] == doctest::Approx(0.5 + 4 * kPi));
    CHECK(shifted[1] == doctest::Approx(1.0));
    CHECK_THROWS(prop_angle_witness(theta, {-1, 0, 0, 0}));  // would go negative
    const auto down = prop_angle_witness({20.0, 1.0, 1.0, 1.0}, {-1, 0, 0, 0});
    CHECK(down[0] == doctest::Approx(20.0 - 4 * kPi));
}
