#pragma once

#include "enriques/exceptional.hpp"
#include "enriques/fundrep.hpp"
#include "enriques/invariants.hpp"
#include "enriques/isotropy.hpp"
#include "enriques/lattice.hpp"
#include "enriques/limit_surface.hpp"

#include "json.hpp"

namespace enriques {

// Canonical JSON forms. Key order is fixed (ordered_json), lists are sorted
// by the producing operations, integers that fit in 64 bits are emitted as
// numbers and larger ones as decimal strings; rationals are always strings.
using json = nlohmann::ordered_json;

json int_json(const Int& v);
json rat_json(const Rat& v);
json num_class_json(const NumClass& v);
json pic_class_json(const PicClass& v);
json signature_json(const Signature& s);
json lattice_certificate_json(const LatticeCertificate& c);
json slice_result_json(const SliceResult& r);
json min_pairing_json(const MinPairing& m);
json seshadri_report_json(const SeshadriReport& r);
json coefficients_json(const FundamentalCoefficients& c);
json fundrep_witness_json(const FundRepWitness& w);
json exceptional_type_json(const ExceptionalType& t);
json point_lower_bound_json(const PointLowerBound& b);
json cert_step_json(const CertStep& s);
json r_class_json(const RClass& r);
json p_class_json(const PClass& p);
json limit_class_json(const LimitClass& l);
json obstruction_certificate_json(const ObstructionCertificate& c);
json quotient_invariants_json(const QuotientInvariants& q);
json gap_certificate_json(const GapCertificate& c);

} // namespace enriques
