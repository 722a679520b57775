#include "enriques/selftest.hpp"

#include "enriques/corpus.hpp"
#include "enriques/errors.hpp"
#include "enriques/exceptional.hpp"
#include "enriques/fundrep.hpp"
#include "enriques/invariants.hpp"
#include "enriques/lattice.hpp"
#include "enriques/limit_surface.hpp"
#include "enriques/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

namespace enriques {
namespace {

struct Check {
    bool pass = true;
    std::string detail;

    void fail(const std::string& msg)
    {
        if (pass) {
            pass = false;
            detail = msg;
        }
    }
    void require(bool cond, const std::string& msg)
    {
        if (!cond)
            fail(msg);
    }
    // Summary shown only when every requirement held.
    void summary(const std::string& msg)
    {
        if (pass)
            detail = msg;
    }
};

std::string class_str(const NumClass& v)
{
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < kRank; ++i) {
        if (i)
            os << ',';
        os << v[static_cast<std::size_t>(i)];
    }
    os << ']';
    return os.str();
}

std::vector<NumClass> thin(const std::vector<NumClass>& in, std::size_t stride)
{
    std::vector<NumClass> out;
    for (std::size_t i = 0; i < in.size(); i += stride)
        out.push_back(in[i]);
    return out;
}

Check criterion_lattice(bool)
{
    Check c;
    const LatticeCertificate cert = change_of_basis_certificate();
    c.require(cert.determinant == -1,
              "det(G) = " + cert.determinant.str() + ", expected -1");
    c.require(cert.even, "Gram matrix is not even");
    c.require(cert.signature.positive == 1 && cert.signature.negative == 9 &&
                  cert.signature.zero == 0,
              "signature is not (1,9)");
    c.require(cert.unimodular, "Smith form is not trivial");
    c.require(cert.e8_pairings_ok, "E8-class pairing identities failed");
    c.summary("det -1, even, signature (1,9), trivial Smith form, E8 "
              "identities hold");
    return c;
}

Check criterion_phi_oracle(bool quick)
{
    Check c;
    const auto corpus =
        quick ? thin(corpus::phi_corpus(), 5) : corpus::phi_corpus();
    Int max_phi = 0;
    for (const NumClass& h : corpus) {
        const Int engine = phi(h);
        const Int shell = oracle::shell_phi(h);
        if (engine != shell) {
            c.fail("phi mismatch on " + class_str(h) + ": engine " +
                   engine.str() + ", oracle " + shell.str());
            return c;
        }
        if (engine > max_phi)
            max_phi = engine;
    }
    c.summary(std::to_string(corpus.size()) +
              " classes agree with the shell oracle, max phi " +
              max_phi.str());
    return c;
}

Check criterion_bounds(bool quick)
{
    Check c;
    const auto corpus =
        quick ? thin(corpus::phi_corpus(), 5) : corpus::phi_corpus();
    for (const NumClass& h : corpus) {
        const Int p = phi(h);
        const Int h2 = self_intersection(h);
        c.require(p * p <= h2, "phi^2 > H^2 on " + class_str(h));
        for (SurfaceModel model :
             {SurfaceModel::very_general, SurfaceModel::general,
              SurfaceModel::arbitrary}) {
            const SeshadriReport r = seshadri(h, model);
            c.require(r.epsilon_upper <= Rat(p),
                      "epsilon > phi on " + class_str(h));
            c.require(r.epsilon_lower <= r.epsilon_upper,
                      "inverted epsilon interval on " + class_str(h));
            c.require(r.kleiman_consistent,
                      "epsilon^2 > H^2 on " + class_str(h));
        }
        if (!c.pass)
            return c;
    }
    c.summary("phi^2 <= H^2 and eps <= phi on " +
              std::to_string(corpus.size()) + " classes, all three models");
    return c;
}

Check criterion_length(bool quick)
{
    Check c;
    std::set<NumClass> classes;
    for (const NumClass& h : corpus::phi_corpus())
        if (self_intersection(h) <= 40)
            classes.insert(h);
    if (!quick)
        for (const NumClass& h : corpus::grid_corpus(40))
            classes.insert(h);

    std::size_t extremal = 0;
    for (const NumClass& l : classes) {
        const Int l2 = self_intersection(l);
        const Int p = phi(l);
        const Int len = length(l);
        if (p > len) {
            c.fail("phi > length on " + class_str(l));
            return c;
        }
        if (l2 > len * len + len - 2) {
            c.fail("L^2 > l^2 + l - 2 on " + class_str(l));
            return c;
        }
        if (l2 == len * len + len - 2 && l2 > 0) {
            ++extremal;
            if (p != len) {
                c.fail("extremal square without phi = length on " +
                       class_str(l));
                return c;
            }
        }
    }
    c.summary("length lemmas hold on " + std::to_string(classes.size()) +
              " classes (" + std::to_string(extremal) +
              " extremal equalities)");
    return c;
}

struct TemplateRow {
    ExceptionalTag tag;
    Int h;
    Int square;
    Int phi_value;
    Int expect_m;
};

Check criterion_templates(bool quick)
{
    Check c;
    std::vector<TemplateRow> rows = {
        {ExceptionalTag::type_i, 0, 4, 2, 3},
        {ExceptionalTag::type_ii, 0, 40, 6, 7},
    };
    const int h_max = quick ? 2 : 5;
    for (int h = 1; h <= h_max; ++h) {
        rows.push_back({ExceptionalTag::type_iii, h, Int(4) * h * h + 6 * h,
                        Int(2) * h + 1, Int(2) * h + 2});
        rows.push_back({ExceptionalTag::type_iv, h,
                        Int(4) * h * h + 10 * h + 4, Int(2) * h + 2,
                        Int(2) * h + 3});
    }

    LengthOptions opts;
    opts.cap = 160; // largest template square here is 154 (type iv, h = 5)

    for (const TemplateRow& row : rows) {
        const NumClass t = construct_exceptional(row.tag, row.h);
        const std::string label =
            to_string(row.tag) + (row.h > 0 ? " h=" + row.h.str() : "");
        c.require(self_intersection(t) == row.square,
                  label + ": square " + self_intersection(t).str() +
                      ", expected " + row.square.str());
        c.require(phi(t) == row.phi_value,
                  label + ": phi " + phi(t).str() + ", expected " +
                      row.phi_value.str());
        const Int len = length(t, opts);
        c.require(len == row.phi_value,
                  label + ": length " + len.str() + ", expected " +
                      row.phi_value.str());
        const ExceptionalType back = classify_exceptional(t);
        c.require(back.tag == row.tag && back.h == row.h &&
                      back.m == row.expect_m,
                  label + ": classification round-trip failed (" +
                      to_string(back.tag) + ", h=" + back.h.str() +
                      ", m=" + back.m.str() + ")");
        if (!c.pass)
            return c;
    }
    c.summary(std::to_string(rows.size()) +
              " templates match the closed forms (square, phi, length, "
              "classification)");
    return c;
}

Check criterion_fundrep(bool quick)
{
    Check c;
    std::vector<NumClass> classes;
    for (const NumClass& h : corpus::phi_corpus()) {
        const Int h2 = self_intersection(h);
        if (h2 > 0 && h2 <= 20)
            classes.push_back(h);
    }
    if (quick && classes.size() > 8)
        classes.resize(8);

    const int seed_count = quick ? 2 : 5;
    for (const NumClass& l : classes) {
        const PicClass pl{l, 0};
        const FundRepWitness w = fundamental_coefficients(pl);
        c.require(w.reconstruction_ok,
                  "reconstruction failed on " + class_str(l));
        c.require(w.gram_ok, "witness Gram check failed on " + class_str(l));
        c.require(w.coefficients.constraints_ok(),
                  "constraint chain violated on " + class_str(l));
        c.require(w.coefficients.q_value() == self_intersection(l),
                  "Q(a) != L^2 on " + class_str(l));
        for (int seed = 1; seed <= seed_count; ++seed) {
            FundRepOptions opts;
            opts.randomized = true;
            opts.seed = static_cast<std::uint64_t>(seed);
            const FundRepWitness w2 = fundamental_coefficients(pl, opts);
            c.require(w2.coefficients == w.coefficients,
                      "coefficients depend on the search order on " +
                          class_str(l) + " (seed " + std::to_string(seed) +
                          ")");
        }
        if (!c.pass)
            return c;
    }
    c.summary(std::to_string(classes.size()) + " classes, coefficients "
              "verified and stable across " + std::to_string(seed_count) +
              " randomized orders");
    return c;
}

Check criterion_census(bool quick)
{
    Check c;

    const auto rows = enumerate_components(4);
    std::array<Int, kRank> tuple_a{}; // a9 = 1, a0 = 1
    tuple_a[7] = 1;
    tuple_a[9] = 1;
    std::array<Int, kRank> tuple_b{}; // a1 = 2, a2 = 1
    tuple_b[0] = 2;
    tuple_b[1] = 1;
    c.require(rows.size() == 2,
              "enumerate_components(4) has " + std::to_string(rows.size()) +
                  " rows, expected 2");
    if (rows.size() == 2) {
        c.require(rows[0].a == tuple_a && rows[0].epsilon == 0,
                  "first genus-3 component row is wrong");
        c.require(rows[1].a == tuple_b && rows[1].epsilon == 0,
                  "second genus-3 component row is wrong");
    }

    std::size_t total = 0;
    const int sq_max = quick ? 12 : 20;
    for (int sq = 2; sq <= sq_max; sq += 2) {
        const auto engine = census_tuples(sq);
        const auto exhaustive = oracle::census_tuples_exhaustive(sq);
        if (engine != exhaustive) {
            c.fail("census mismatch at square " + std::to_string(sq) +
                   ": engine " + std::to_string(engine.size()) +
                   " tuples, oracle " + std::to_string(exhaustive.size()));
            return c;
        }
        total += engine.size();
    }
    c.summary("genus-3 rows exact; tuples for squares 2.." +
              std::to_string(sq_max) + " match the oracle (" +
              std::to_string(total) + " tuples)");
    return c;
}

Check criterion_limit(bool)
{
    Check c;
    const LimitModel model;

    auto pencil_p = [](int i) {
        PClass p;
        p.v[0] = 1;
        p.v[i] = -1;
        return p;
    };
    const LimitClass e1 = model.make_limit_class(LimitModel::fiber(), pencil_p(1));
    const LimitClass e2 = model.make_limit_class(LimitModel::fiber(), pencil_p(2));
    PClass conic;
    conic.v[0] = 2;
    for (int i = 3; i <= 6; ++i)
        conic.v[i] = -1;
    const LimitClass e3 = model.make_limit_class(LimitModel::fiber(), conic);

    c.require(model.pair_limit(e1, e2) == 1, "E1.E2 != 1");
    c.require(model.pair_limit(e1, e3) == 2, "E1.E3 != 2");
    c.require(model.pair_limit(e2, e3) == 2, "E2.E3 != 2");

    const LimitClass l0 = model.l0_class();
    c.require(model.pair_limit(l0, l0) == 40, "(L0)^2 != 40");
    c.require(l0 == LimitClass{Int(2) * (e1.r + e2.r + e3.r),
                               Int(2) * (e1.p + e2.p + e3.p)},
              "L0 != 2(E1 + E2 + E3)");

    const LimitClass xi = model.xi();
    c.require(model.pair_limit(xi, xi) == 0, "xi^2 != 0");
    for (const LimitClass& g : {e1, e2, e3, l0})
        c.require(model.pair_limit(xi, g) == 0,
                  "xi not orthogonal to a Cartier class");

    RClass odd_r{1, 0};
    PClass odd_p;
    odd_p.v[0] = 1;
    odd_p.v[1] = -1;
    odd_p.v[2] = -1;
    const LimitClass odd = model.make_limit_class(odd_r, odd_p);
    c.require(model.parity_obstruction(odd), "odd class not flagged");
    c.require(!model.parity_obstruction(l0), "even class flagged");
    for (const LimitClass& base : {l0, e1, odd}) {
        const bool expect = model.parity_obstruction(base);
        for (int a = -5; a <= 5; ++a)
            c.require(model.parity_obstruction(model.twist(base, a)) == expect,
                      "parity obstruction not twist-invariant");
    }

    for (int k = 0; k <= 3; ++k) {
        const LimitModel mk{Int(k)};
        const QuotientInvariants qi = mk.quotient_invariants();
        const std::string label = "k = " + std::to_string(k) + ": ";
        c.require(qi.rank == 10, label + "quotient rank != 10");
        c.require(qi.determinant == -1, label + "quotient det != -1");
        c.require(qi.even, label + "quotient form not even");
        c.require(qi.signature.positive == 1 && qi.signature.negative == 9 &&
                      qi.signature.zero == 0,
                  label + "quotient signature != (1,9)");
        c.require(qi.xi_orthogonal, label + "xi not in the radical");
    }

    c.summary("pairings 1/2/2, (L0)^2 = 40, xi isotropic and central, parity "
              "twist-invariant, quotient invariants match for k = 0..3");
    return c;
}

Check criterion_replay(bool)
{
    Check c;
    std::vector<NumClass> polarizations;
    {
        NumClass h1; // 2 E1 + E2
        h1[0] = 2;
        h1[1] = 1;
        NumClass h2; // E1 + E2
        h2[0] = 1;
        h2[1] = 1;
        polarizations = {h1, h2,
                         construct_exceptional(ExceptionalTag::type_ii)};
    }
    for (const NumClass& h : polarizations) {
        const GapCertificate cert = verify_eps_equals_phi(h);
        const std::string label = "H = " + class_str(h) + ": ";
        c.require(cert.verdict == GapVerdict::impossible,
                  label + "verdict is not impossible");
        for (const CertStep& s : cert.steps)
            c.require(s.ok, label + "step failed: " + s.claim);
        if (!cert.limit_chain) {
            c.fail(label + "missing limit chain");
            return c;
        }
        c.require(cert.limit_chain->steps.size() == 5,
                  label + "limit chain has " +
                      std::to_string(cert.limit_chain->steps.size()) +
                      " steps, expected 5");
        c.require(cert.limit_chain->normalizing_twist == 0,
                  label + "normalizing twist is not 0");
        for (const CertStep& s : cert.limit_chain->steps)
            c.require(s.ok, label + "limit step failed: " + s.claim);
        c.require(cert.limit_chain->verdict == ObstructionVerdict::impossible,
                  label + "limit verdict is not impossible");
        c.require(cert.epsilon && *cert.epsilon == Rat(phi(h)),
                  label + "certified epsilon != phi");
        if (!c.pass)
            return c;
    }
    c.summary("3 polarizations replayed: verdict impossible, cited chain "
              "complete, 5-step limit certificate checks out");
    return c;
}

Check criterion_seshadri(bool quick)
{
    Check c;
    const auto corpus =
        quick ? thin(corpus::phi_corpus(), 5) : corpus::phi_corpus();
    for (const NumClass& h : corpus) {
        const SeshadriReport r = seshadri(h, SurfaceModel::very_general);
        if (!r.exact || r.epsilon() != Rat(phi(h))) {
            c.fail("seshadri != phi on " + class_str(h));
            return c;
        }
    }

    NumClass h1; // 2 E1 + E2
    h1[0] = 2;
    h1[1] = 1;
    c.require(seshadri(h1, SurfaceModel::very_general).epsilon() == Rat(1),
              "eps(2E1 + E2) != 1");
    c.require(seshadri(construct_exceptional(ExceptionalTag::type_ii),
                       SurfaceModel::very_general)
                      .epsilon() == Rat(6),
              "eps(2(E9 + E10 + E9_10)) != 6");
    c.summary("seshadri = phi on " + std::to_string(corpus.size()) +
              " classes; spot values 1 and 6 confirmed");
    return c;
}

struct CriterionSpec {
    int index;
    const char* name;
    Check (*run)(bool quick);
    double budget_seconds; // 0 means no stated budget
};

const CriterionSpec kCriteria[] = {
    {1, "lattice certification", criterion_lattice, 1.0},
    {2, "phi oracle equivalence", criterion_phi_oracle, 60.0},
    {3, "bound suite", criterion_bounds, 0.0},
    {4, "length lemmas", criterion_length, 300.0},
    {5, "exceptional templates", criterion_templates, 0.0},
    {6, "fundamental representation", criterion_fundrep, 0.0},
    {7, "census", criterion_census, 0.0},
    {8, "limit surface", criterion_limit, 10.0},
    {9, "theorem replay", criterion_replay, 10.0},
    {10, "seshadri values", criterion_seshadri, 0.0},
};

} // namespace

std::vector<CriterionResult> run_acceptance_criteria(
    const AcceptanceOptions& options, std::ostream* progress)
{
    std::vector<CriterionResult> results;
    for (const CriterionSpec& spec : kCriteria) {
        CriterionResult r;
        r.index = spec.index;
        r.name = spec.name;
        const auto start = std::chrono::steady_clock::now();
        try {
            Check c = spec.run(options.quick);
            r.pass = c.pass;
            r.detail = c.detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        // Budgets are part of the contract; quick runs trim corpora instead.
        if (!options.quick && spec.budget_seconds > 0 &&
            r.seconds > spec.budget_seconds) {
            r.pass = false;
            r.detail += " [budget exceeded: " + std::to_string(r.seconds) +
                        "s > " + std::to_string(spec.budget_seconds) + "s]";
        }
        if (progress)
            *progress << format_criterion_line(r) << std::endl;
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results)
{
    for (const auto& r : results)
        if (!r.pass)
            return false;
    return !results.empty();
}

std::string format_criterion_line(const CriterionResult& r)
{
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", r.seconds);
    std::ostringstream os;
    os << "criterion " << r.index << " [" << (r.pass ? "pass" : "FAIL")
       << "] " << r.name << " (" << timing << "): " << r.detail;
    return os.str();
}

} // namespace enriques
