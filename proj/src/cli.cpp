#include "enriques/cli.hpp"

#include "enriques/class_parse.hpp"
#include "enriques/errors.hpp"
#include "enriques/exceptional.hpp"
#include "enriques/fundrep.hpp"
#include "enriques/invariants.hpp"
#include "enriques/json_io.hpp"
#include "enriques/oracles.hpp"
#include "enriques/selftest.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace enriques {
namespace {

struct CliConfig {
    std::string model_name = "very_general";
    bool json_flag = false;
    bool table_flag = false;
    int threads = 1;
    bool oracle = false;
    long long length_cap = 100;
    long long k = 1;

    SurfaceModel model() const { return parse_surface_model(model_name); }
};

bool is_scalar(const json& j)
{
    return !j.is_object() && !j.is_array();
}

bool all_scalars(const json& j)
{
    for (const auto& item : j)
        if (!is_scalar(item))
            return false;
    return true;
}

std::string scalar_text(const json& j)
{
    if (j.is_string())
        return j.get<std::string>();
    return j.dump();
}

// Plain-text rendering used by --table: key/value lines with nesting by
// indentation, scalar arrays inline.
void render_text(const json& j, std::ostream& out, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& item : j.items()) {
            const json& v = item.value();
            if (is_scalar(v)) {
                out << pad << item.key() << ": " << scalar_text(v) << "\n";
            } else if (v.is_array() && all_scalars(v)) {
                out << pad << item.key() << ": " << v.dump() << "\n";
            } else {
                out << pad << item.key() << ":\n";
                render_text(v, out, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (is_scalar(v)) {
                out << pad << "- " << scalar_text(v) << "\n";
            } else {
                out << pad << "-\n";
                render_text(v, out, indent + 2);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

void emit(const json& j, const CliConfig& cfg, std::ostream& out)
{
    if (cfg.table_flag)
        render_text(j, out, 0);
    else
        out << j.dump(2) << "\n";
}

void check_positive_cone(const NumClass& h)
{
    if (self_intersection(h) <= 0)
        throw NonPositiveSquareError(
            "the class has self-intersection " +
            self_intersection(h).str() + "; a polarization needs H.H > 0");
}

std::string tuple_text(const std::array<Int, kRank>& a)
{
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < kRank; ++i) {
        if (i)
            os << ',';
        os << a[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

void run_census(const CliConfig& cfg, long long square, std::ostream& out)
{
    const Int sq(square);
    const auto rows = enumerate_components(sq);

    bool oracle_checked = false;
    if (cfg.oracle) {
        const auto engine = census_tuples(sq);
        const auto exhaustive = oracle::census_tuples_exhaustive(sq);
        if (engine != exhaustive)
            throw OracleMismatchError(
                "census disagrees with the exhaustive oracle at square " +
                sq.str() + ": " + std::to_string(engine.size()) + " vs " +
                std::to_string(exhaustive.size()) + " tuples");
        oracle_checked = true;
    }

    const Int genus = sq / 2 + 1;
    if (cfg.table_flag) {
        out << std::left << std::setw(6) << "square" << ' ' << std::setw(5)
            << "genus" << ' ' << std::setw(22) << "tuple" << ' '
            << std::setw(3) << "eps" << ' ' << "phi\n";
        for (const auto& row : rows) {
            out << std::setw(6) << square << ' ' << std::setw(5)
                << genus.str() << ' ' << std::setw(22) << tuple_text(row.a)
                << ' ' << std::setw(3) << row.epsilon << ' '
                << phi(row.representative()).str() << "\n";
        }
        out << std::right;
        return;
    }

    json components = json::array();
    for (const auto& row : rows) {
        json r = coefficients_json(row);
        r["genus"] = int_json(genus);
        r["phi"] = int_json(phi(row.representative()));
        components.push_back(std::move(r));
    }
    json j;
    j["square"] = int_json(sq);
    j["genus"] = int_json(genus);
    j["components"] = std::move(components);
    if (oracle_checked)
        j["oracle_checked"] = true;
    out << j.dump(2) << "\n";
}

int emit_error(std::ostream& err, const std::string& code,
               const std::string& message, int exit_code)
{
    json e;
    e["error"] = json{{"code", code}, {"message", message}};
    err << e.dump(2) << "\n";
    return exit_code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Exact computations in the numerical lattice of an Enriques "
                 "surface: phi, Seshadri constants, isotropic decompositions "
                 "and the degenerate-surface certificates."};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--model", cfg.model_name,
                   "surface model: very_general, general or arbitrary")
        ->envname("ENRIQUES_MODEL")
        ->default_val(cfg.model_name);
    auto* json_opt =
        app.add_flag("--json", cfg.json_flag, "JSON output (default)");
    auto* table_opt =
        app.add_flag("--table", cfg.table_flag, "plain-text output");
    json_opt->excludes(table_opt);
    table_opt->excludes(json_opt);
    app.add_option("--threads", cfg.threads,
                   "worker threads (results are identical for any value)")
        ->envname("ENRIQUES_THREADS")
        ->check(CLI::Range(1, 4096));
    app.add_flag("--oracle", cfg.oracle,
                 "cross-check against the independent brute-force oracles")
        ->envname("ENRIQUES_ORACLE");
    app.add_option("--length-cap", cfg.length_cap,
                   "largest self-intersection accepted by the exact length "
                   "recursion")
        ->envname("ENRIQUES_LENGTH_CAP")
        ->check(CLI::Range(2LL, 1000000000LL));
    app.add_option("--k", cfg.k,
                   "self-intersection of the section class on the ruled "
                   "component of the limit surface")
        ->envname("ENRIQUES_K")
        ->check(CLI::Range(0LL, 1000000LL));
    app.set_config("--config", "",
                   "configuration file, key = value lines matching the long "
                   "options")
        ->envname("ENRIQUES_CONFIG");

    const char* class_help =
        "class as 10 coordinates \"[2,1,0,0,0,0,0,0,0,0]\" or symbolically "
        "\"2*E1+E2\" (symbols E1..E7, E9, E10, E910)";

    // phi
    auto* phi_cmd = app.add_subcommand(
        "phi", "minimal pairing with an effective isotropic class");
    phi_cmd->fallthrough();
    std::string phi_class;
    phi_cmd->add_option("--class", phi_class, class_help)->required();
    phi_cmd->callback([&] {
        const NumClass h = parse_num_class(phi_class);
        check_positive_cone(h);
        const MinPairing mp = phi_with_witnesses(h);
        json j;
        j["class"] = num_class_json(h);
        j["square"] = int_json(self_intersection(h));
        j["phi"] = int_json(mp.value);
        json witnesses = json::array();
        for (const NumClass& w : mp.witnesses)
            witnesses.push_back(num_class_json(w));
        j["witnesses"] = std::move(witnesses);
        if (cfg.oracle) {
            const Int shell = oracle::shell_phi(h);
            if (shell != mp.value)
                throw OracleMismatchError("engine phi " + mp.value.str() +
                                          " vs shell oracle " + shell.str());
            j["oracle_checked"] = true;
        }
        emit(j, cfg, out);
    });

    // seshadri
    auto* ses_cmd = app.add_subcommand(
        "seshadri", "Seshadri constant at a very general point");
    ses_cmd->fallthrough();
    std::string ses_class;
    ses_cmd->add_option("--class", ses_class, class_help)->required();
    ses_cmd->callback([&] {
        const NumClass h = parse_num_class(ses_class);
        check_positive_cone(h);
        const SeshadriReport report = seshadri(h, cfg.model());
        json j = seshadri_report_json(report);
        if (cfg.oracle) {
            const Int shell = oracle::shell_phi(h);
            if (shell != report.phi_value)
                throw OracleMismatchError("engine phi " +
                                          report.phi_value.str() +
                                          " vs shell oracle " + shell.str());
            j["oracle_checked"] = true;
        }
        emit(j, cfg, out);
    });

    // length
    auto* len_cmd = app.add_subcommand(
        "length", "maximal number of effective isotropic summands");
    len_cmd->fallthrough();
    std::string len_class;
    len_cmd->add_option("--class", len_class, class_help)->required();
    len_cmd->callback([&] {
        const NumClass l = parse_num_class(len_class);
        LengthOptions opts;
        opts.cap = Int(cfg.length_cap);
        const Int value = length(l, opts);
        json j;
        j["class"] = num_class_json(l);
        j["square"] = int_json(self_intersection(l));
        j["length"] = int_json(value);
        j["greedy_lower_bound"] =
            int_json(length_greedy_lower_bound(l, opts));
        emit(j, cfg, out);
    });

    // fundrep
    auto* fund_cmd = app.add_subcommand(
        "fundrep", "fundamental coefficients and an isotropic witness "
                   "sequence");
    fund_cmd->fallthrough();
    std::string fund_class;
    int fund_torsion = 0;
    bool fund_randomized = false;
    std::uint64_t fund_seed = 0;
    fund_cmd->add_option("--class", fund_class, class_help)->required();
    fund_cmd->add_option("--torsion", fund_torsion,
                         "torsion bit of the line bundle (0 or 1)")
        ->check(CLI::Range(0, 1));
    fund_cmd->add_flag("--randomized", fund_randomized,
                       "shuffle the search order (result is order-free)");
    fund_cmd->add_option("--seed", fund_seed, "seed for --randomized");
    fund_cmd->callback([&] {
        const NumClass l = parse_num_class(fund_class);
        FundRepOptions opts;
        opts.randomized = fund_randomized;
        opts.seed = fund_seed;
        const FundRepWitness w =
            fundamental_coefficients(PicClass{l, fund_torsion}, opts);
        emit(fundrep_witness_json(w), cfg, out);
    });

    // census
    auto* census_cmd = app.add_subcommand(
        "census", "moduli components of polarizations of a given square");
    census_cmd->fallthrough();
    long long census_square = 0;
    census_cmd->add_option("--square", census_square, "self-intersection")
        ->required()
        ->check(CLI::Range(0LL, 2000LL));
    census_cmd->callback([&] { run_census(cfg, census_square, out); });

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "Seshadri-exceptional type of a class");
    classify_cmd->fallthrough();
    std::string classify_class;
    classify_cmd->add_option("--class", classify_class, class_help)
        ->required();
    classify_cmd->callback([&] {
        const NumClass c = parse_num_class(classify_class);
        const ExceptionalType type = classify_exceptional(c);
        json j;
        j["class"] = num_class_json(c);
        j["square"] = int_json(self_intersection(c));
        j["type"] = exceptional_type_json(type);
        emit(j, cfg, out);
    });

    // admissible
    auto* adm_cmd = app.add_subcommand(
        "admissible", "whether the class may carry an irreducible rational "
                      "curve (very_general model)");
    adm_cmd->fallthrough();
    std::string adm_class;
    adm_cmd->add_option("--class", adm_class, class_help)->required();
    adm_cmd->callback([&] {
        const NumClass c = parse_num_class(adm_class);
        const AdmissibleReport report =
            rational_class_admissible_report(c, cfg.model());
        json j;
        j["class"] = num_class_json(c);
        j["admissible"] = report.admissible;
        j["reason"] = report.reason;
        emit(j, cfg, out);
    });

    // isotropic-enum
    auto* iso_cmd = app.add_subcommand(
        "isotropic-enum", "complete enumeration of an isotropic slice "
                          "{ E : E.E = 0, E.H = c }");
    iso_cmd->fallthrough();
    std::string iso_class;
    long long iso_c = 0;
    bool iso_primitive = false;
    bool iso_effective = false;
    iso_cmd->add_option("--class", iso_class, class_help)->required();
    iso_cmd->add_option("--pairing,--c", iso_c, "target pairing c = E.H")
        ->required();
    iso_cmd->add_flag("--primitive", iso_primitive,
                      "keep primitive classes only");
    iso_cmd->add_flag("--effective", iso_effective,
                      "keep effective classes only");
    iso_cmd->callback([&] {
        const NumClass h = parse_num_class(iso_class);
        SliceQuery query{h, Int(iso_c), iso_primitive, iso_effective};
        const SliceResult result = isotropic_slice(query);
        json j = slice_result_json(result);
        if (cfg.oracle) {
            const auto shell = oracle::shell_slice(h, Int(iso_c),
                                                   iso_effective,
                                                   iso_primitive);
            if (shell.solutions != result.solutions)
                throw OracleMismatchError(
                    "slice enumeration disagrees with the shell oracle: " +
                    std::to_string(result.solutions.size()) + " vs " +
                    std::to_string(shell.solutions.size()) + " classes");
            j["oracle_checked"] = true;
        }
        emit(j, cfg, out);
    });

    // limit, with one sub-subcommand per pipeline
    auto* limit_cmd = app.add_subcommand(
        "limit", "numerical model of the degenerate surface R u_T P");
    limit_cmd->fallthrough();
    limit_cmd->require_subcommand(1);

    const char* r_help = "R-component class as \"c0,f\"";
    const char* p_help = "P-component class as \"d,m1,...,m9\" (coordinates "
                         "on l, e1..e9)";

    auto* lpair_cmd =
        limit_cmd->add_subcommand("pair", "intersection number on X");
    lpair_cmd->fallthrough();
    std::string lp_r1, lp_p1, lp_r2, lp_p2;
    lpair_cmd->add_option("--r1", lp_r1, r_help)->required();
    lpair_cmd->add_option("--p1", lp_p1, p_help)->required();
    lpair_cmd->add_option("--r2", lp_r2, r_help)->required();
    lpair_cmd->add_option("--p2", lp_p2, p_help)->required();
    lpair_cmd->callback([&] {
        const LimitModel model{Int(cfg.k)};
        const LimitClass a =
            model.make_limit_class(parse_r_class(lp_r1), parse_p_class(lp_p1));
        const LimitClass b =
            model.make_limit_class(parse_r_class(lp_r2), parse_p_class(lp_p2));
        json j;
        j["a"] = limit_class_json(a);
        j["b"] = limit_class_json(b);
        j["pair"] = int_json(model.pair_limit(a, b));
        emit(j, cfg, out);
    });

    auto* ltwist_cmd = limit_cmd->add_subcommand(
        "twist", "add a multiple of the gluing class xi");
    ltwist_cmd->fallthrough();
    std::string lt_r, lt_p;
    long long lt_amount = 0;
    ltwist_cmd->add_option("--r", lt_r, r_help)->required();
    ltwist_cmd->add_option("--p", lt_p, p_help)->required();
    ltwist_cmd->add_option("--amount", lt_amount, "twist multiple a")
        ->required();
    ltwist_cmd->callback([&] {
        const LimitModel model{Int(cfg.k)};
        const LimitClass l =
            model.make_limit_class(parse_r_class(lt_r), parse_p_class(lt_p));
        const LimitClass twisted = model.twist(l, Int(lt_amount));
        json j;
        j["input"] = limit_class_json(l);
        j["amount"] = int_json(Int(lt_amount));
        j["result"] = limit_class_json(twisted);
        emit(j, cfg, out);
    });

    auto* lparity_cmd = limit_cmd->add_subcommand(
        "parity", "parity obstruction against limits of irreducible "
                  "rational curves");
    lparity_cmd->fallthrough();
    std::string lpar_r, lpar_p;
    lparity_cmd->add_option("--r", lpar_r, r_help)->required();
    lparity_cmd->add_option("--p", lpar_p, p_help)->required();
    lparity_cmd->callback([&] {
        const LimitModel model{Int(cfg.k)};
        const LimitClass l =
            model.make_limit_class(parse_r_class(lpar_r),
                                   parse_p_class(lpar_p));
        json j;
        j["class"] = limit_class_json(l);
        j["parity_obstruction"] = model.parity_obstruction(l);
        emit(j, cfg, out);
    });

    auto* lobs_cmd = limit_cmd->add_subcommand(
        "obstruct", "multiplicity refutation on the limit surface");
    lobs_cmd->fallthrough();
    std::string lo_r, lo_p;
    long long lo_m = 7;
    bool lo_allow_general = false;
    lobs_cmd->add_option("--r", lo_r, r_help)->required();
    lobs_cmd->add_option("--p", lo_p, p_help)->required();
    lobs_cmd->add_option("--m", lo_m, "point multiplicity (default 7)");
    lobs_cmd->add_flag("--allow-general", lo_allow_general,
                       "run the numeric steps outside the shipped "
                       "(twist of L0, m = 7) range");
    lobs_cmd->callback([&] {
        const LimitModel model{Int(cfg.k)};
        const LimitClass l =
            model.make_limit_class(parse_r_class(lo_r), parse_p_class(lo_p));
        const ObstructionCertificate cert =
            model.multiplicity_obstruction(l, Int(lo_m), lo_allow_general);
        emit(obstruction_certificate_json(cert), cfg, out);
    });

    auto* lquot_cmd = limit_cmd->add_subcommand(
        "quotient", "invariants of Cartier classes modulo the gluing class");
    lquot_cmd->fallthrough();
    lquot_cmd->callback([&] {
        const LimitModel model{Int(cfg.k)};
        emit(quotient_invariants_json(model.quotient_invariants()), cfg, out);
    });

    // verify
    auto* verify_cmd = app.add_subcommand(
        "verify", "replay the no-gap argument: eps(H) = phi(H)");
    verify_cmd->fallthrough();
    std::string verify_class;
    verify_cmd->add_option("--class", verify_class, class_help)->required();
    verify_cmd->callback([&] {
        if (cfg.model() != SurfaceModel::very_general)
            throw UnsupportedModelError(
                "the equality eps = phi is a very_general statement; pass "
                "--model very_general");
        const NumClass h = parse_num_class(verify_class);
        check_positive_cone(h);
        emit(gap_certificate_json(verify_eps_equals_phi(h)), cfg, out);
    });

    // selftest
    auto* selftest_cmd = app.add_subcommand(
        "selftest", "run the acceptance criteria against the built-in "
                    "oracles");
    selftest_cmd->fallthrough();
    bool st_quick = false;
    bool st_full = false;
    auto* quick_opt = selftest_cmd->add_flag("--quick", st_quick,
                                             "trimmed corpora (default)");
    auto* full_opt =
        selftest_cmd->add_flag("--full", st_full, "full corpora and budgets");
    quick_opt->excludes(full_opt);
    full_opt->excludes(quick_opt);
    int selftest_exit = 0;
    selftest_cmd->callback([&] {
        AcceptanceOptions options;
        options.quick = !st_full;
        const auto results = run_acceptance_criteria(options, nullptr);
        if (cfg.json_flag) {
            json arr = json::array();
            for (const auto& r : results)
                arr.push_back(json{{"index", r.index},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
            out << arr.dump(2) << "\n";
        } else {
            for (const auto& r : results)
                out << "criterion " << r.index << " ["
                    << (r.pass ? "pass" : "FAIL") << "] " << r.name << ": "
                    << r.detail << "\n";
            out << (all_passed(results) ? "all criteria passed"
                                        : "criteria FAILED")
                << "\n";
        }
        if (!all_passed(results))
            selftest_exit = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return emit_error(err, "usage", e.what(), 2);
    } catch (const ParseClassError& e) {
        return emit_error(err, e.code(), e.what(), 2);
    } catch (const Error& e) {
        return emit_error(err, e.code(), e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error(err, "internal", e.what(), 1);
    }
    return selftest_exit;
}

} // namespace enriques
