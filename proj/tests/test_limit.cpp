#include "doctest.h"

#include "enriques/errors.hpp"
#include "enriques/limit_surface.hpp"

#include <string>

using namespace enriques;

namespace {

PClass pclass(std::array<Int, 10> v)
{
    PClass p;
    p.v = v;
    return p;
}

// The three half-pencil limits: a fiber glued to a line through one blown-up
// point (twice) and to a conic through four of them.
LimitClass e1_limit(const LimitModel& m)
{
    return m.make_limit_class({0, 1}, pclass({1, -1, 0, 0, 0, 0, 0, 0, 0, 0}));
}

LimitClass e2_limit(const LimitModel& m)
{
    return m.make_limit_class({0, 1}, pclass({1, 0, -1, 0, 0, 0, 0, 0, 0, 0}));
}

LimitClass e3_limit(const LimitModel& m)
{
    return m.make_limit_class({0, 1},
                              pclass({2, 0, 0, -1, -1, -1, -1, 0, 0, 0}));
}

} // namespace

TEST_CASE("Cartier validation compares restriction degrees")
{
    const LimitModel m;
    CHECK(m.is_cartier({0, 1}, pclass({1, -1, 0, 0, 0, 0, 0, 0, 0, 0})));
    CHECK(!m.is_cartier({0, 1}, pclass({1, 0, 0, 0, 0, 0, 0, 0, 0, 0})));
    try {
        (void)m.make_limit_class({0, 1},
                                 pclass({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
        FAIL("expected NotCartierError");
    } catch (const NotCartierError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("R side 2") != std::string::npos);
        CHECK(msg.find("P side 3") != std::string::npos);
    }
}

TEST_CASE("the gluing curve is anticanonical on both components")
{
    const LimitModel m(2);
    CHECK(m.t_r() + m.canonical_r() == RClass{0, 0});
    CHECK(LimitModel::t_p() + LimitModel::canonical_p() == PClass{});
    CHECK(m.pair_r(m.t_r(), m.t_r()) == 0);
    CHECK(LimitModel::pair_p(LimitModel::t_p(), LimitModel::t_p()) == 0);
}

TEST_CASE("half-pencil limits pair like the basis triple")
{
    const LimitModel m;
    const LimitClass e1 = e1_limit(m);
    const LimitClass e2 = e2_limit(m);
    const LimitClass e3 = e3_limit(m);

    CHECK(m.pair_limit(e1, e1) == 0);
    CHECK(m.pair_limit(e2, e2) == 0);
    CHECK(m.pair_limit(e3, e3) == 0);
    CHECK(m.pair_limit(e1, e2) == 1);
    CHECK(m.pair_limit(e1, e3) == 2);
    CHECK(m.pair_limit(e2, e3) == 2);

    // The distinguished class is twice their sum and has square 40.
    const LimitClass l0 = m.l0_class();
    const LimitClass sum{e1.r + e2.r + e3.r, e1.p + e2.p + e3.p};
    CHECK(LimitClass{Int(2) * sum.r, Int(2) * sum.p} == l0);
    CHECK(m.pair_limit(l0, l0) == 40);
}

TEST_CASE("xi is isotropic and orthogonal to Cartier classes")
{
    const LimitModel m;
    const LimitClass xi = m.xi();
    CHECK(m.pair_limit(xi, xi) == 0);
    for (const LimitClass& x :
         {e1_limit(m), e2_limit(m), e3_limit(m), m.l0_class()})
        CHECK(m.pair_limit(xi, x) == 0);
}

TEST_CASE("twisting preserves pairings of Cartier classes")
{
    const LimitModel m;
    const LimitClass l0 = m.l0_class();
    const LimitClass e1 = e1_limit(m);
    for (int a = -3; a <= 3; ++a) {
        const LimitClass tl = m.twist(l0, a);
        CHECK(m.is_cartier(tl.r, tl.p));
        CHECK(m.pair_limit(tl, tl) == 40);
        CHECK(m.pair_limit(tl, m.twist(e1, a)) == m.pair_limit(l0, e1));
        CHECK(m.pair_limit(tl, e1) == m.pair_limit(l0, e1));
    }
    CHECK(m.twist(l0, 0) == l0);
    CHECK(m.twist(m.twist(l0, 2), -2) == l0);
}

TEST_CASE("parity obstruction detects odd fiber degree, twist-invariantly")
{
    const LimitModel m;
    const LimitClass odd =
        m.make_limit_class({1, 0}, pclass({1, -1, -1, 0, 0, 0, 0, 0, 0, 0}));
    const LimitClass l0 = m.l0_class();

    CHECK(m.parity_obstruction(odd));
    CHECK(!m.parity_obstruction(l0));
    CHECK(!m.parity_obstruction(e1_limit(m)));
    for (int a = -5; a <= 5; ++a) {
        CHECK(m.parity_obstruction(m.twist(odd, a)));
        CHECK(!m.parity_obstruction(m.twist(l0, a)));
    }
}

TEST_CASE("plane dimension counts through general simple points")
{
    CHECK(effective_on_p_general_points(0, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(effective_on_p_general_points(1, {1, 1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(effective_on_p_general_points(3, {1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(!effective_on_p_general_points(2, {1, 1, 1, 1, 1, 1, 0, 0, 0}));
    CHECK(!effective_on_p_general_points(-1, {0, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(
        (void)effective_on_p_general_points(4, {2, 0, 0, 0, 0, 0, 0, 0, 0}),
        UnsupportedMultiplicityError);
    CHECK_THROWS_AS(
        (void)effective_on_p_general_points(4, {-1, 0, 0, 0, 0, 0, 0, 0, 0}),
        BadParameterError);
}

TEST_CASE("the multiplicity obstruction chain for m = 7 on the limit class")
{
    const LimitModel m;
    const ObstructionCertificate cert =
        m.multiplicity_obstruction(m.l0_class(), 7);

    CHECK(cert.verdict == ObstructionVerdict::impossible);
    CHECK(cert.normalizing_twist == 0);
    REQUIRE(cert.steps.size() == 5);
    for (const CertStep& s : cert.steps) {
        CHECK(s.ok);
        CHECK(!s.claim.empty());
        CHECK(!s.citation.empty());
    }
    // Six fibers against a 7-fold point, then six forced pencil members
    // leaving a residual conic short of its six base points.
    CHECK(cert.steps[1].check == "6 < 7");
    CHECK(cert.steps[3].check.find("forced count 6") != std::string::npos);
    CHECK(cert.steps[4].check.find("virtual dimension -1") !=
          std::string::npos);
}

TEST_CASE("the chain is twist-invariant up to normalization")
{
    const LimitModel m;
    const LimitClass twisted = m.twist(m.l0_class(), 2);
    const ObstructionCertificate cert =
        m.multiplicity_obstruction(twisted, 7);
    CHECK(cert.verdict == ObstructionVerdict::impossible);
    CHECK(cert.normalizing_twist == -2);
    REQUIRE(cert.steps.size() == 5);
    const ObstructionCertificate base =
        m.multiplicity_obstruction(m.l0_class(), 7);
    // Step 0 records the normalizing twist itself; the rest of the chain is
    // identical because both runs normalize to the same class.
    CHECK(cert.steps[0].check.find("R-part = 6 * fiber") != std::string::npos);
    for (std::size_t i = 1; i < 5; ++i)
        CHECK(cert.steps[i].check == base.steps[i].check);
}

TEST_CASE("m = 6 is not obstructed by this pipeline")
{
    const LimitModel m;
    const ObstructionCertificate cert =
        m.multiplicity_obstruction(m.l0_class(), 6, /*allow_general=*/true);
    CHECK(cert.verdict == ObstructionVerdict::not_obstructed);
    REQUIRE(cert.steps.size() == 5);
    CHECK(cert.steps[0].ok);
    CHECK(!cert.steps[1].ok); // six fibers do not exceed a 6-fold point
    CHECK(!cert.steps[2].ok);
    CHECK(!cert.steps[3].ok); // no pencil member is forced at m = 6
    CHECK(!cert.steps[4].ok);
}

TEST_CASE("pipeline gates")
{
    const LimitModel m;
    CHECK_THROWS_AS((void)m.multiplicity_obstruction(m.l0_class(), 1),
                    PipelineInapplicableError);
    // Unsupported input class without the general escape hatch.
    CHECK_THROWS_AS((void)m.multiplicity_obstruction(e1_limit(m), 7),
                    PipelineInapplicableError);
    // Odd fiber degree admits no normalizing twist at all.
    const LimitClass odd =
        m.make_limit_class({1, 0}, pclass({1, -1, -1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS((void)m.multiplicity_obstruction(odd, 7, true),
                    PipelineInapplicableError);

    // The general escape hatch runs the numeric steps and concludes nothing
    // for a single fiber.
    const ObstructionCertificate weak =
        m.multiplicity_obstruction(e1_limit(m), 7, true);
    CHECK(weak.verdict == ObstructionVerdict::not_obstructed);
}

TEST_CASE("quotient lattice invariants are Enriques-shaped for several k")
{
    for (int k = 0; k <= 3; ++k) {
        const LimitModel m((Int(k)));
        const QuotientInvariants q = m.quotient_invariants();
        CHECK(q.rank == 10);
        CHECK(q.determinant == -1);
        CHECK(q.even);
        CHECK(q.signature.positive == 1);
        CHECK(q.signature.negative == 9);
        CHECK(q.signature.zero == 0);
        CHECK(q.xi_orthogonal);
    }
}

TEST_CASE("model validation")
{
    CHECK_THROWS_AS(LimitModel(Int(-1)), BadParameterError);
}
