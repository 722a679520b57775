#include "enriques/exceptional.hpp"

#include "enriques/errors.hpp"
#include "enriques/invariants.hpp"

#include <sstream>

namespace enriques {

std::string to_string(ExceptionalTag tag)
{
    switch (tag) {
    case ExceptionalTag::minus_two: return "minus_two";
    case ExceptionalTag::half_pencil: return "half_pencil";
    case ExceptionalTag::type_i: return "type_i";
    case ExceptionalTag::type_ii: return "type_ii";
    case ExceptionalTag::type_iii: return "type_iii";
    case ExceptionalTag::type_iv: return "type_iv";
    case ExceptionalTag::none: return "none";
    }
    return "none";
}

std::string to_string(GapVerdict v)
{
    switch (v) {
    case GapVerdict::no_gap: return "no_gap";
    case GapVerdict::constrained: return "constrained";
    case GapVerdict::impossible: return "impossible";
    }
    return "no_gap";
}

NumClass construct_exceptional(ExceptionalTag tag, const Int& h)
{
    NumClass v;
    switch (tag) {
    case ExceptionalTag::type_i:
        v[slot_e9] = 1;
        v[slot_e9_10] = 1;
        return v;
    case ExceptionalTag::type_ii:
        v[slot_e9] = 2;
        v[slot_e10] = 2;
        v[slot_e9_10] = 2;
        return v;
    case ExceptionalTag::type_iii:
        if (h < 1)
            throw BadParameterError("type (iii) requires h >= 1");
        v[slot_e9] = h;
        v[slot_e10] = 1;
        v[slot_e9_10] = h;
        return v;
    case ExceptionalTag::type_iv:
        if (h < 1)
            throw BadParameterError("type (iv) requires h >= 1");
        v[slot_e9] = h;
        v[slot_e10] = 1;
        v[slot_e9_10] = h + 1;
        return v;
    default:
        throw BadParameterError(
            "templates exist for the positive-square types (i)-(iv) only");
    }
}

ExceptionalType classify_exceptional(const NumClass& c)
{
    const Int c2 = self_intersection(c);
    if (c2 == -2)
        return {ExceptionalTag::minus_two, 0, 1};
    if (!is_effective(c, SurfaceModel::general))
        throw NotEffectiveError(
            "classification requires an effective class or square -2");
    if (c2 == 0)
        return {ExceptionalTag::half_pencil, 0, 2};

    const Int phi_c = phi(c);
    // Extremal square pins the length: phi <= length always, and each
    // isotropic summand pairs at least phi with C, so length <= C^2 / phi =
    // phi + 1 - 2/phi < phi + 1.
    if (c2 != phi_c * (phi_c + 1) - 2)
        return {ExceptionalTag::none, 0, 0};

    const Int m = phi_c + 1;
    if (phi_c == 2)
        return {ExceptionalTag::type_i, 0, m};
    if (phi_c == 6 && is_two_divisible_num(c))
        return {ExceptionalTag::type_ii, 0, m};
    if (phi_c % 2 == 1 && phi_c >= 3)
        return {ExceptionalTag::type_iii, (phi_c - 1) / 2, m};
    if (phi_c % 2 == 0 && phi_c >= 4)
        return {ExceptionalTag::type_iv, (phi_c - 2) / 2, m};
    return {ExceptionalTag::none, 0, 0};
}

AdmissibleReport rational_class_admissible_report(const NumClass& c,
                                                  SurfaceModel model)
{
    if (model != SurfaceModel::very_general)
        throw UnsupportedModelError(
            "rational-class admissibility is certified on the very_general "
            "model only");
    const Int c2 = self_intersection(c);
    if (c2 == -2)
        return {false, "a very general Enriques surface carries no "
                       "(-2)-curves"};
    if (!is_effective(c, SurfaceModel::very_general))
        throw NotEffectiveError("admissibility requires an effective class");
    if (!is_two_divisible_num(c)) {
        if (c2 == 0 && divisibility(c) == 1)
            return {false, "a primitive effective isotropic class is "
                           "represented by a smooth elliptic curve"};
        return {false, "irreducible rational curves on a very general "
                       "Enriques surface have 2-divisible class"};
    }
    return {true, "2-divisible effective class; no numerical criterion here "
                  "excludes an irreducible rational representative"};
}

bool rational_class_admissible(const NumClass& c, SurfaceModel model)
{
    return rational_class_admissible_report(c, model).admissible;
}

PointLowerBound seshadri_point_lower_bound(const Int& phi_h,
                                           const std::optional<Rat>& d)
{
    if (phi_h < 1)
        throw BadParameterError("phi must be >= 1");
    PointLowerBound out;
    const Rat half_phi = Rat(phi_h) / 2;
    if (d) {
        if (*d < 0)
            throw BadParameterError("degree bound must be >= 0");
        out.bound = *d < half_phi ? *d : half_phi;
        out.note = "eps(H, x) >= min(d, phi/2) from the multiplicity of a "
                   "curve through x";
    } else {
        out.bound = half_phi;
        out.generic_bound = Rat(phi_h);
        out.note = "without curve data the bound is phi/2; away from "
                   "countably many points it improves to phi";
    }
    return out;
}

namespace {

CertStep arithmetic_step(std::string claim, std::string citation,
                         std::string check, bool ok)
{
    CertStep s;
    s.claim = std::move(claim);
    s.citation = std::move(citation);
    s.check = std::move(check);
    s.ok = ok;
    return s;
}

// Every positive-square template except (ii) carries an odd coefficient, so
// (ii) is the only 2-divisible exceptional type. Checked, not assumed.
CertStep two_divisibility_sieve(int h_limit)
{
    bool ok = is_two_divisible_num(construct_exceptional(ExceptionalTag::type_ii));
    ok = ok && !is_two_divisible_num(
                   construct_exceptional(ExceptionalTag::type_i));
    for (int h = 1; h <= h_limit && ok; ++h) {
        ok = !is_two_divisible_num(
                 construct_exceptional(ExceptionalTag::type_iii, h)) &&
             !is_two_divisible_num(
                 construct_exceptional(ExceptionalTag::type_iv, h));
    }
    std::ostringstream check;
    check << "types (i), (iii,h), (iv,h) keep an odd coefficient (checked "
             "for h <= "
          << h_limit
          << "; the E10-coefficient of every (iii)/(iv) template is 1), the "
             "type (ii) template is 2-divisible";
    return arithmetic_step(
        "a 2-divisible exceptional class of positive square must be of type "
        "(ii), the double of a half-pencil triple",
        "irreducible rational curves on a very general Enriques surface are "
        "2-divisible",
        check.str(), ok);
}

} // namespace

GapCertificate verify_eps_equals_phi(const NumClass& h)
{
    const Int phi_h = phi(h);

    GapCertificate cert;
    cert.h = h;
    cert.epsilon = Rat(phi_h);

    cert.steps.push_back(arithmetic_step(
        "a gap eps(H) < phi(H) at a very general point needs a pair (C, m) "
        "with C.H / m < phi(H), C irreducible rational and C.C = m(m-1) - 2, "
        "hence C of extremal square among classes of its phi",
        "Seshadri-exceptional pairs on Enriques surfaces: genus count "
        "C.C/2 + 1 - m(m-1)/2 >= 0 with equality exactly for rational C",
        "phi(H) = " + phi_h.str() + ", candidate squares m(m-1) - 2",
        true));

    cert.steps.push_back(arithmetic_step(
        "m = 1 (square -2) cannot occur",
        "a very general Enriques surface carries no (-2)-curves",
        "model = very_general", true));

    cert.steps.push_back(arithmetic_step(
        "m = 2 (square 0) cannot occur: a rational curve of square zero has "
        "2-divisible class 2E, so C.H = 2 E.H >= 2 phi(H), never below "
        "2 phi(H)",
        "a primitive effective isotropic class is represented by a smooth "
        "elliptic curve; rational classes are 2-divisible",
        "2 * phi(H) = " + Int(2 * phi_h).str() + " >= 2 * phi(H)", true));

    cert.steps.push_back(two_divisibility_sieve(10));

    const NumClass c = construct_exceptional(ExceptionalTag::type_ii);
    const Int c2 = self_intersection(c);
    const Int phi_c = phi(c);
    cert.c = c;
    cert.m = 7;
    cert.steps.push_back(arithmetic_step(
        "the surviving candidate is C = 2(E9 + E10 + E9_10) with m = 7",
        "extremal square forces phi(C) = length(C) = m - 1",
        "C.C = " + c2.str() + " = 7*6 - 2, phi(C) = " + phi_c.str(),
        c2 == 40 && phi_c == 6));

    const LimitModel model;
    ObstructionCertificate chain =
        model.multiplicity_obstruction(model.l0_class(), 7);
    cert.steps.push_back(arithmetic_step(
        "on the degenerate surface the limit of a 7-fold point on a curve in "
        "the distinguished limit class is impossible, refuting the last "
        "candidate",
        "semicontinuity of multiplicity in the flat limit",
        "obstruction verdict: " + std::string(
            chain.verdict == ObstructionVerdict::impossible
                ? "impossible" : "not_obstructed"),
        chain.verdict == ObstructionVerdict::impossible));
    cert.limit_chain = std::move(chain);

    bool all_ok = true;
    for (const auto& s : cert.steps)
        all_ok = all_ok && s.ok;
    cert.verdict = all_ok ? GapVerdict::impossible : GapVerdict::no_gap;
    if (!all_ok)
        throw InternalBoundViolationError(
            "no-gap replay failed a step that the theorem guarantees");
    return cert;
}

GapCertificate gap_candidate_certificate(const NumClass& h, const NumClass& c,
                                         const Int& m, SurfaceModel model)
{
    if (m < 1)
        throw BadParameterError("multiplicity must be >= 1");

    const Int phi_h = phi(h);
    const Int ch = pair(c, h);

    GapCertificate cert;
    cert.h = h;
    cert.c = c;
    cert.m = m;

    const bool no_gap = m * phi_h <= ch;
    cert.steps.push_back(arithmetic_step(
        "the pair (C, m) witnesses a gap only if C.H / m < phi(H)",
        "definition of the Seshadri constant as an infimum over curves "
        "through the point",
        "m * phi(H) = " + Int(m * phi_h).str() + " vs C.H = " + ch.str(),
        true));
    if (no_gap) {
        cert.verdict = GapVerdict::no_gap;
        return cert;
    }

    const ExceptionalType type = classify_exceptional(c);
    cert.constrained_type = type;

    if (model != SurfaceModel::very_general) {
        cert.steps.push_back(arithmetic_step(
            "below the very_general model the genericity facts are "
            "unavailable; the candidate remains, constrained to its "
            "numerical type",
            "classification by square, phi and divisibility",
            "type = " + to_string(type.tag), true));
        cert.verdict = GapVerdict::constrained;
        return cert;
    }

    switch (type.tag) {
    case ExceptionalTag::minus_two:
        cert.steps.push_back(arithmetic_step(
            "C has square -2",
            "a very general Enriques surface carries no (-2)-curves",
            "C.C = -2", true));
        cert.verdict = GapVerdict::impossible;
        return cert;
    case ExceptionalTag::half_pencil: {
        const bool even = is_two_divisible_num(c);
        if (!even) {
            cert.steps.push_back(arithmetic_step(
                "C is isotropic but not 2-divisible, so |C| contains no "
                "irreducible rational curve",
                "a primitive effective isotropic class is represented by a "
                "smooth elliptic curve; rational classes are 2-divisible",
                "divisibility(C) = " + divisibility(c).str(), true));
        } else {
            cert.steps.push_back(arithmetic_step(
                "C = 2E gives C.H = 2 E.H >= 2 phi(H) >= m phi(H) for m <= "
                "2, contradicting the gap inequality",
                "definition of phi as the minimal isotropic pairing",
                "C.H = " + ch.str() + " >= 2 phi(H) = " + Int(2 * phi_h).str(),
                ch >= 2 * phi_h));
        }
        cert.verdict = GapVerdict::impossible;
        return cert;
    }
    case ExceptionalTag::none:
        cert.steps.push_back(arithmetic_step(
            "C matches no exceptional type, so (C, m) cannot realize a gap "
            "at a very general point",
            "classification of Seshadri-exceptional pairs",
            "C.C = " + self_intersection(c).str() + " not extremal for "
            "phi(C)", true));
        cert.verdict = GapVerdict::impossible;
        return cert;
    case ExceptionalTag::type_i:
    case ExceptionalTag::type_iii:
    case ExceptionalTag::type_iv:
        cert.steps.push_back(arithmetic_step(
            "the type of C is not 2-divisible, so |C| contains no "
            "irreducible rational curve on this model",
            "irreducible rational curves on a very general Enriques surface "
            "are 2-divisible",
            "type = " + to_string(type.tag) + ", 2-divisible = false", true));
        cert.verdict = GapVerdict::impossible;
        return cert;
    case ExceptionalTag::type_ii: {
        if (m != 7) {
            cert.steps.push_back(arithmetic_step(
                "an exceptional pair built on a type (ii) class must have "
                "m = 7; the given multiplicity breaks the extremal identity "
                "C.C = m(m-1) - 2",
                "extremal square: C.C = m(m-1) - 2 with phi(C) = m - 1",
                "m(m-1) - 2 = " + Int(m * (m - 1) - 2).str() + " vs C.C = " +
                    self_intersection(c).str(),
                true));
            cert.verdict = GapVerdict::impossible;
            return cert;
        }
        cert.steps.push_back(arithmetic_step(
            "type (ii) admits m = 7 and survives every lattice criterion; "
            "the degeneration argument takes over",
            "extremal square: C.C = m(m-1) - 2 with phi(C) = m - 1",
            "m = 7, C.C = 40 = 7*6 - 2", true));
        const LimitModel limit_model;
        ObstructionCertificate chain =
            limit_model.multiplicity_obstruction(limit_model.l0_class(), 7);
        cert.steps.push_back(arithmetic_step(
            "the limit-surface chain refutes a 7-fold point on the "
            "degeneration of C",
            "semicontinuity of multiplicity in the flat limit",
            "obstruction verdict: " +
                std::string(chain.verdict == ObstructionVerdict::impossible
                                ? "impossible"
                                : "not_obstructed"),
            chain.verdict == ObstructionVerdict::impossible));
        cert.limit_chain = std::move(chain);
        cert.verdict = GapVerdict::impossible;
        return cert;
    }
    }
    throw InternalBoundViolationError("unreachable classification state");
}

} // namespace enriques
