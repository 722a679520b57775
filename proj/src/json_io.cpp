#include "enriques/json_io.hpp"

#include <limits>

namespace enriques {

json int_json(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return static_cast<std::int64_t>(v);
    return v.str();
}

json rat_json(const Rat& v)
{
    return rat_to_string(v);
}

json num_class_json(const NumClass& v)
{
    json arr = json::array();
    for (int i = 0; i < kRank; ++i)
        arr.push_back(int_json(v[i]));
    return arr;
}

json pic_class_json(const PicClass& v)
{
    json j;
    j["num"] = num_class_json(v.num);
    j["torsion"] = v.torsion;
    return j;
}

json signature_json(const Signature& s)
{
    json j;
    j["positive"] = s.positive;
    j["negative"] = s.negative;
    j["zero"] = s.zero;
    return j;
}

json lattice_certificate_json(const LatticeCertificate& c)
{
    json j;
    j["determinant"] = int_json(c.determinant);
    j["even"] = c.even;
    j["signature"] = signature_json(c.signature);
    json smith = json::array();
    for (const auto& d : c.smith)
        smith.push_back(int_json(d));
    j["smith_diagonal"] = smith;
    j["unimodular"] = c.unimodular;
    j["e8_pairings_ok"] = c.e8_pairings_ok;
    return j;
}

json slice_result_json(const SliceResult& r)
{
    json j;
    json sols = json::array();
    for (const auto& s : r.solutions)
        sols.push_back(num_class_json(s));
    j["solutions"] = sols;
    j["empty_by_divisibility"] = r.empty_by_divisibility;
    json cert;
    json pivots = json::array();
    for (const auto& p : r.certificate.pivots)
        pivots.push_back(rat_json(p));
    cert["pivots"] = pivots;
    cert["radius"] = rat_json(r.certificate.radius);
    cert["kernel_det"] = int_json(r.certificate.kernel_det);
    cert["nodes"] = r.certificate.nodes;
    j["certificate"] = cert;
    return j;
}

json min_pairing_json(const MinPairing& m)
{
    json j;
    j["value"] = int_json(m.value);
    json w = json::array();
    for (const auto& x : m.witnesses)
        w.push_back(num_class_json(x));
    j["witnesses"] = w;
    return j;
}

json seshadri_report_json(const SeshadriReport& r)
{
    json j;
    j["class"] = num_class_json(r.h);
    j["model"] = to_string(r.model);
    j["phi"] = int_json(r.phi_value);
    j["exact"] = r.exact;
    if (r.exact)
        j["epsilon"] = rat_json(r.epsilon());
    j["epsilon_lower"] = rat_json(r.epsilon_lower);
    j["epsilon_upper"] = rat_json(r.epsilon_upper);
    j["kleiman_consistent"] = r.kleiman_consistent;
    json caveats = json::array();
    for (const auto& c : r.caveats) {
        json cj;
        cj["code"] = c.code;
        cj["note"] = c.note;
        caveats.push_back(cj);
    }
    j["caveats"] = caveats;
    return j;
}

json coefficients_json(const FundamentalCoefficients& c)
{
    json j;
    json a = json::array();
    for (int i = 0; i < kRank; ++i)
        a.push_back(int_json(c.a[i]));
    j["a"] = a;
    j["epsilon"] = c.epsilon;
    return j;
}

json fundrep_witness_json(const FundRepWitness& w)
{
    json j;
    j["coefficients"] = coefficients_json(w.coefficients);
    json seq = json::array();
    for (int i = 0; i < kRank; ++i)
        seq.push_back(num_class_json(w.sequence[i]));
    j["sequence"] = seq;
    j["derived_e8"] = num_class_json(w.derived_e8());
    j["gram_ok"] = w.gram_ok;
    j["reconstruction_ok"] = w.reconstruction_ok;
    return j;
}

json exceptional_type_json(const ExceptionalType& t)
{
    json j;
    j["tag"] = to_string(t.tag);
    if (t.tag == ExceptionalTag::type_iii || t.tag == ExceptionalTag::type_iv)
        j["h"] = int_json(t.h);
    if (t.tag != ExceptionalTag::none)
        j["m"] = int_json(t.m);
    return j;
}

json point_lower_bound_json(const PointLowerBound& b)
{
    json j;
    j["bound"] = rat_json(b.bound);
    if (b.generic_bound)
        j["generic_bound"] = rat_json(*b.generic_bound);
    j["note"] = b.note;
    return j;
}

json cert_step_json(const CertStep& s)
{
    json j;
    j["claim"] = s.claim;
    j["citation"] = s.citation;
    j["check"] = s.check;
    j["ok"] = s.ok;
    return j;
}

json r_class_json(const RClass& r)
{
    json j = json::array();
    j.push_back(int_json(r.c0));
    j.push_back(int_json(r.f));
    return j;
}

json p_class_json(const PClass& p)
{
    json j = json::array();
    for (int i = 0; i < 10; ++i)
        j.push_back(int_json(p.v[i]));
    return j;
}

json limit_class_json(const LimitClass& l)
{
    json j;
    j["r"] = r_class_json(l.r);
    j["p"] = p_class_json(l.p);
    return j;
}

json obstruction_certificate_json(const ObstructionCertificate& c)
{
    json j;
    j["class"] = limit_class_json(c.input);
    j["m"] = int_json(c.m);
    j["normalizing_twist"] = int_json(c.normalizing_twist);
    j["verdict"] = c.verdict == ObstructionVerdict::impossible
                       ? "impossible"
                       : "not_obstructed";
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(cert_step_json(s));
    j["steps"] = steps;
    return j;
}

json quotient_invariants_json(const QuotientInvariants& q)
{
    json j;
    j["rank"] = q.rank;
    j["determinant"] = int_json(q.determinant);
    j["even"] = q.even;
    j["signature"] = signature_json(q.signature);
    j["xi_orthogonal"] = q.xi_orthogonal;
    return j;
}

json gap_certificate_json(const GapCertificate& c)
{
    json j;
    j["class"] = num_class_json(c.h);
    if (c.c)
        j["candidate"] = num_class_json(*c.c);
    if (c.m)
        j["m"] = int_json(*c.m);
    j["verdict"] = to_string(c.verdict);
    if (c.constrained_type)
        j["constrained_type"] = exceptional_type_json(*c.constrained_type);
    if (c.epsilon)
        j["epsilon"] = rat_json(*c.epsilon);
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(cert_step_json(s));
    j["steps"] = steps;
    if (c.limit_chain)
        j["limit_chain"] = obstruction_certificate_json(*c.limit_chain);
    return j;
}

} // namespace enriques
