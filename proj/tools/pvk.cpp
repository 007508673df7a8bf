// pvk: command-line front end.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include "pvk/autf.hpp"
#include "pvk/fpres.hpp"
#include "pvk/grcohom.hpp"
#include "pvk/lie.hpp"
#include "pvk/nq.hpp"
#include "pvk/parse.hpp"
#include "pvk/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace pvk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "pv3", "pv4", ..., "g3", "g3z", "q3", or a presentation file.
Presentation resolve_presentation(const std::string& arg) {
    if (arg.size() > 2 && arg.starts_with("pv") && std::isdigit(static_cast<unsigned char>(arg[2])))
        return pv_presentation(std::stoi(arg.substr(2)));
    if (arg == "g3")
        return g3_presentation();
    if (arg == "g3z")
        return g3_free_product_presentation();
    if (arg == "q3")
        return q3_family_presentation();
    return read_presentation_file(arg);
}

AlphabetPtr alphabet_from(const std::vector<std::string>& gens, const std::string& fallback_text) {
    return gens.empty() ? alphabet_of(fallback_text) : Alphabet::make(gens);
}

std::string multiline(std::string text) {
    for (char& c : text)
        if (c == ';')
            c = '\n';
    return text;
}

GenMap resolve_map(const std::string& arg, const Presentation& src, const AlphabetPtr& target) {
    if (arg == "f" || arg == "g") {
        const GeneratorChange ch = pv3_new_generators();
        const GenMap& m = arg == "f" ? ch.f : ch.g;
        if (!same_alphabet(m.source(), src.alphabet()) || !same_alphabet(m.target(), target))
            throw UsageError("built-in map '" + arg + "' does not fit these presentations");
        return GenMap(src.alphabet(), target, m.images());
    }
    std::ifstream probe(arg);
    const std::string text = probe ? read_text_file(arg) : multiline(arg);
    return parse_genmap(text, src.alphabet(), target);
}

SearchBounds parse_bounds(const std::vector<std::size_t>& lk) {
    SearchBounds b;
    if (lk.empty())
        return b;
    if (lk.size() != 2)
        throw UsageError("--search-bounds takes L,K");
    b.conjugator_length = lk[0];
    b.factors = lk[1];
    return b;
}

CompositionOrder parse_order(const std::string& s) {
    if (s == "left")
        return CompositionOrder::LeftFirst;
    if (s == "right")
        return CompositionOrder::RightFirst;
    if (s.empty())
        return pinned_composition_order();
    throw UsageError("--order must be left or right");
}

int print_checks(const std::vector<IdentityCheck>& checks) {
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.holds ? "holds  " : "FAILS  ") << c.name << ": " << c.lhs << " = " << c.rhs;
        if (!c.detail.empty())
            std::cout << "  (" << c.detail << ")";
        std::cout << '\n';
        ok = ok && c.holds;
    }
    return ok ? 0 : 1;
}

void print_pieces(const std::vector<GradedPiece>& pieces) {
    for (const auto& p : pieces) {
        std::cout << "degree " << p.degree << ": Z^" << p.rank;
        for (const auto& t : p.torsion)
            std::cout << " + Z/" << t;
        std::cout << '\n';
    }
}

void print_degrees(const std::vector<DegreeData>& data) {
    for (const auto& d : data) {
        std::cout << "degree " << d.degree << ": " << d.rank;
        for (const auto& t : d.torsion)
            std::cout << " + Z/" << t;
        std::cout << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations in finitely presented groups, free Lie rings and cohomology rings"};
    app.require_subcommand(1);
    int status = 0;

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
    std::string word_text;
    std::vector<std::string> gens;
    reduce->add_option("word", word_text, "Word")->required();
    reduce->add_option("--gens", gens, "Generator names (default: names in the word)")->delimiter(',');
    reduce->callback([&] { std::cout << parse_word(word_text, alphabet_from(gens, word_text)).to_string() << '\n'; });

    // subst
    auto* subst = app.add_subcommand("subst", "Apply a generator substitution to a word");
    std::string map_text;
    std::vector<std::string> target_gens;
    subst->add_option("word", word_text, "Word")->required();
    subst->add_option("--map", map_text, "File or 'x = w; y = v'")->required();
    subst->add_option("--gens", gens, "Source generators (default: names in the word)")->delimiter(',');
    subst->add_option("--target-gens", target_gens, "Target generators (default: names in the images)")
        ->delimiter(',');
    subst->callback([&] {
        const AlphabetPtr src = alphabet_from(gens, word_text);
        std::ifstream probe(map_text);
        const std::string mt = probe ? read_text_file(map_text) : multiline(map_text);
        std::string rhs;
        for (std::size_t i = 0; i < mt.size(); ++i) {
            const std::size_t eol = mt.find('\n', i);
            const std::string line = mt.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
            const std::size_t sep = line.find_first_of("=>");
            if (sep != std::string::npos)
                rhs += line.substr(sep + 1) + ' ';
            if (eol == std::string::npos)
                break;
            i = eol;
        }
        const AlphabetPtr tgt = target_gens.empty() ? alphabet_of(rhs) : Alphabet::make(target_gens);
        const GenMap m = parse_genmap(mt, src, tgt);
        std::cout << m.apply(parse_word(word_text, src)).to_string() << '\n';
    });

    // check-hom
    auto* hom = app.add_subcommand("check-hom", "Check that a generator map sends every relator to the identity");
    std::string src_arg, tgt_arg;
    int epsilon_rank = 0;
    bool free_target = false;
    std::string order_text;
    std::vector<std::size_t> bounds_lk;
    hom->add_option("source", src_arg, "Source presentation (file, pvN, g3, g3z, q3)")->required();
    hom->add_option("--map", map_text, "File, 'x = w; ...', or the built-in f / g");
    auto* tgt_opt = hom->add_option("--target", tgt_arg, "Target presentation");
    auto* free_opt = hom->add_flag("--free", free_target, "Evaluate in the free group on the target's generators");
    auto* eps_opt = hom->add_option("--epsilon", epsilon_rank, "Evaluate l_ij -> e_ij in Aut(F_n)");
    hom->add_option("--order", order_text, "Composition order for --epsilon (left, right)");
    hom->add_option("--search-bounds", bounds_lk, "Certificate search bounds L,K")->delimiter(',');
    eps_opt->excludes(tgt_opt);
    free_opt->needs(tgt_opt);
    hom->callback([&] {
        const Presentation src = resolve_presentation(src_arg);
        std::vector<RelatorVerdict> verdicts;
        if (epsilon_rank > 0) {
            const AutomorphismTarget t = epsilon_target(epsilon_rank, parse_order(order_text));
            GenMap m = [&] {
                if (!map_text.empty())
                    return resolve_map(map_text, src, t.alphabet);
                if (src.generator_count() != t.alphabet->size())
                    throw UsageError("source and epsilon target differ in rank; give --map");
                std::vector<Word> images;
                for (std::size_t g = 0; g < t.alphabet->size(); ++g)
                    images.push_back(Word::generator(t.alphabet, g));
                return GenMap(src.alphabet(), t.alphabet, images);
            }();
            verdicts = check_homomorphism(src, m, t);
        } else {
            if (tgt_arg.empty() || map_text.empty())
                throw UsageError("check-hom needs --target and --map (or --epsilon)");
            const Presentation tgt = resolve_presentation(tgt_arg);
            const GenMap m = resolve_map(map_text, src, tgt.alphabet());
            if (free_target)
                verdicts = check_homomorphism(src, m, FreeGroupTarget{tgt.alphabet()});
            else
                verdicts = check_homomorphism(src, m, PresentedTarget{tgt, parse_bounds(bounds_lk)});
        }
        const Presentation mat = src.materialized();
        for (const auto& v : verdicts) {
            std::cout << "r" << v.relator + 1 << "  " << to_string(v.result.verdict) << "  "
                      << mat.relators()[v.relator].to_string() << "  ->  " << v.image.to_string() << "  ("
                      << v.result.detail << ")\n";
            if (v.result.certificate)
                std::cout << "    " << to_string(*v.result.certificate) << '\n';
            if (v.result.verdict == Verdict::Refuted)
                status = 1;
            else if (v.result.verdict == Verdict::Unknown && status == 0)
                status = 1;
        }
    });

    // consequence
    auto* cons = app.add_subcommand("consequence", "Decide whether a word is a consequence of the relators");
    std::string pres_arg, cert_text;
    cons->add_option("presentation", pres_arg, "Presentation (file, pvN, g3, g3z, q3)")->required();
    cons->add_option("word", word_text, "Word")->required();
    cons->add_option("--cert", cert_text, "Certificate to verify, e.g. '[(a, r1, +1)]'");
    cons->add_option("--search-bounds", bounds_lk, "Certificate search bounds L,K")->delimiter(',');
    cons->callback([&] {
        const Presentation p = resolve_presentation(pres_arg);
        const Word w = parse_word(word_text, p.alphabet());
        std::optional<ConsequenceCertificate> cert;
        if (!cert_text.empty())
            cert = parse_certificate(cert_text, p.materialized());
        const ConsequenceResult r = is_consequence(w, p, cert, parse_bounds(bounds_lk));
        std::cout << to_string(r.verdict) << "  " << r.detail << '\n';
        if (r.certificate)
            std::cout << to_string(*r.certificate) << '\n';
        status = r.verdict == Verdict::Verified ? 0 : 1;
    });

    // syzygy
    auto* syz = app.add_subcommand("syzygy", "Check that a product of conjugated relators is the identity");
    syz->add_option("presentation", pres_arg, "Presentation (file, pvN, g3, g3z, q3)")->required();
    syz->add_option("certificate", cert_text, "'[(u, r1, +1), ...]'")->required();
    syz->callback([&] {
        const Presentation p = resolve_presentation(pres_arg).materialized();
        const ConsequenceCertificate cert = parse_certificate(cert_text, p);
        const Word w = expand_certificate(p, cert);
        std::cout << (w.is_identity() ? "identity" : "not the identity: " + w.to_string()) << '\n';
        status = w.is_identity() ? 0 : 1;
    });

    // aut
    auto* aut = app.add_subcommand("aut", "Automorphisms of free groups");
    aut->require_subcommand(1);
    int rank = 3;
    auto* compose_cmd = aut->add_subcommand("compose", "Evaluate a word in the e_ij");
    compose_cmd->add_option("word", word_text, "Word in e12, e21, ...")->required();
    compose_cmd->add_option("--rank", rank, "Free group rank")->check(CLI::Range(2, 9));
    compose_cmd->add_option("--order", order_text, "left or right");
    compose_cmd->callback([&] {
        const Word w = parse_word(word_text, epsilon_alphabet(rank));
        std::cout << evaluate_epsilon_word(w, rank, parse_order(order_text)).to_string() << '\n';
    });
    auto* inner_cmd = aut->add_subcommand("inner", "Decide whether a word in the e_ij is inner");
    inner_cmd->add_option("word", word_text, "Word in e12, e21, ...")->required();
    inner_cmd->add_option("--rank", rank, "Free group rank")->check(CLI::Range(2, 9));
    inner_cmd->add_option("--order", order_text, "left or right");
    inner_cmd->callback([&] {
        const FreeEndomorphism f =
            evaluate_epsilon_word(parse_word(word_text, epsilon_alphabet(rank)), rank, parse_order(order_text));
        std::cout << f.to_string() << '\n';
        if (auto w = find_inner_conjugator(f)) {
            std::cout << "inner, conjugation by " << w->to_string() << '\n';
        } else {
            std::cout << "not inner\n";
            status = 1;
        }
    });
    auto* mccool_cmd = aut->add_subcommand("mccool", "Check the McCool relations for n = 3");
    mccool_cmd->add_option("--order", order_text, "left or right");
    mccool_cmd->callback([&] {
        const CompositionOrder o = parse_order(order_text);
        std::cout << "order " << to_string(o) << '\n';
        status = print_checks(mccool_relations_check(3, o));
    });
    auto* hnn_cmd = aut->add_subcommand("hnn", "Check the HNN generator and conjugator identities");
    hnn_cmd->callback([&] {
        const HnnReport r = hnn_data_check();
        std::cout << "order " << to_string(r.order) << '\n';
        status = print_checks(r.checks);
        for (std::size_t i = 0; i < r.a_conjugators.size(); ++i)
            std::cout << "A conjugator " << i + 1 << ": " << r.a_conjugators[i].to_string() << '\n';
    });

    // nq
    auto* nq = app.add_subcommand("nq", "Lower central quotients via the nilpotent quotient algorithm");
    int nq_class = 3;
    std::uint64_t step_limit = NqOptions{}.step_limit;
    bool show_pcp = false;
    nq->add_option("presentation", pres_arg, "Presentation (file, pvN, g3, g3z, q3)")->required();
    nq->add_option("--class", nq_class, "Nilpotency class")->check(CLI::PositiveNumber);
    nq->add_option("--step-limit", step_limit, "Collection step limit");
    nq->add_flag("--show", show_pcp, "Print the polycyclic presentation");
    nq->add_option("--word", word_text, "Also print the normal form of this word");
    nq->callback([&] {
        const Presentation p = resolve_presentation(pres_arg);
        const NqResult r = nilpotent_quotient(p, nq_class, NqOptions{step_limit});
        for (const auto& d : r.ranks)
            std::cout << to_string(d) << '\n';
        if (show_pcp)
            std::cout << r.presentation.to_string();
        if (!word_text.empty()) {
            const Exponents e = element_in_quotient(r.presentation, parse_word(word_text, p.alphabet()));
            std::cout << "normal form " << to_string(e) << ", weight " << leading_weight(r.presentation, e) << '\n';
        }
    });

    // cohomology
    auto* coh = app.add_subcommand("cohomology", "Integral cohomology rings");
    coh->require_subcommand(1);
    std::size_t max_deg = 3;
    auto* coh_g3 = coh->add_subcommand("g3", "H^*(G_3) as a quotient of an exterior algebra");
    auto* coh_pv3 = coh->add_subcommand("pv3", "H^*(PV_3), from its relations and transported from G_3 * Z");
    for (auto* c : {coh_g3, coh_pv3})
        c->add_option("--max-degree", max_deg, "Highest degree")->check(CLI::Range(0, 10));
    coh_g3->callback([&] {
        const ExteriorQuotient r = g3_ring();
        for (const auto& rel : r.relations())
            std::cout << "relation " << r.to_string(rel, 2) << '\n';
        print_pieces(r.pieces(max_deg));
        const IntMatrix k = g3_theta_kernel();
        std::cout << "kernel of theta^* in degree 2: rank " << k.rows() << ", equal to the relation span: "
                  << (same_row_lattice(k, IntMatrix::from_rows(r.relations(), 10)) ? "yes" : "no") << '\n';
    });
    coh_pv3->callback([&] {
        const ExteriorQuotient r = pv3_ring();
        for (const auto& rel : r.relations())
            std::cout << "relation " << r.to_string(rel, 2) << '\n';
        print_pieces(r.pieces(max_deg));
        std::cout << "same span as transported relations: "
                  << (same_span(pv3_relations(), pv3_transported_relations()) ? "yes" : "no") << '\n';
        std::cout << "rank of the six l13-l31 relations: " << relation_span_rank(pv3_condition2_relations()) << '\n';
    });
    auto* coh_wedge = coh->add_subcommand("wedge", "The surface wedge model and theta^*");
    coh_wedge->callback([&] {
        const SurfaceWedgeModel m = build_wedge_model();
        const IntMatrix up = theta_upper(m);
        const auto names = torus5_names();
        for (std::size_t u = 0; u < up.rows(); ++u) {
            std::cout << names[u] << "* ->";
            for (std::size_t c = 0; c < up.cols(); ++c)
                if (up(u, c) != 0)
                    std::cout << ' ' << (up(u, c) > 0 ? "+" : "-") << m.h1_names[c];
            std::cout << '\n';
        }
        for (std::size_t u = 0; u < 5; ++u)
            for (std::size_t v = u + 1; v < 5; ++v) {
                const IntVector c = pullback_cup(m, u, v);
                std::cout << names[u] << "* " << names[v] << "* ->";
                bool any = false;
                for (std::size_t k = 0; k < c.size(); ++k)
                    if (c[k] != 0) {
                        std::cout << ' ' << (c[k] > 0 ? "+" : "-") << m.h2_names[k];
                        any = true;
                    }
                std::cout << (any ? "" : " 0") << '\n';
            }
        const DeltaCheck d = delta_matrices_check();
        std::cout << "delta matrices consistent: " << (d.ok() ? "yes" : "no") << '\n';
        status = d.ok() ? 0 : 1;
    });
    auto* coh_beer = coh->add_subcommand("beer", "Rank C(n-1,r) n!/(n-r)! of H^r(PV_n)");
    long beer_n = 3;
    std::optional<long> beer_r;
    coh_beer->add_option("n", beer_n, "n")->required()->check(CLI::PositiveNumber);
    coh_beer->add_option("r", beer_r, "r (default: all)");
    coh_beer->callback([&] {
        if (beer_r) {
            std::cout << beer_rank(beer_n, *beer_r) << '\n';
            return;
        }
        for (long r = 0; r < beer_n; ++r)
            std::cout << "H^" << r << ": " << beer_rank(beer_n, r) << '\n';
    });

    // lie
    auto* lie = app.add_subcommand("lie", "The graded Lie ring on A1, B1, A2, B2, C1, C2");
    lie->require_subcommand(1);
    auto* lie_dims = lie->add_subcommand("dims", "Ranks of the quotient of the free Lie ring");
    lie_dims->add_option("--max-degree", max_deg, "Highest degree")->check(CLI::Range(1, 5));
    lie_dims->callback([&] {
        const auto names = pv3_lie_names();
        for (const auto& r : pv3_lie_relations())
            std::cout << "relation " << r.to_string(names) << '\n';
        print_degrees(lie_quotient_dims(6, pv3_lie_relations(), max_deg));
    });
    auto* lie_env = lie->add_subcommand("env", "Ranks of the enveloping algebra");
    lie_env->add_option("--max-degree", max_deg, "Highest degree")->check(CLI::Range(0, 4));
    lie_env->callback([&] { print_degrees(enveloping_dims(6, pv3_lie_relations(), max_deg)); });
    auto* lie_pbw = lie->add_subcommand("pbw", "Compare Lie ranks and enveloping ranks through PBW");
    std::vector<std::size_t> lie_l, lie_u;
    lie_pbw->add_option("--lie", lie_l, "l_1,...,l_D (default: computed)")->delimiter(',');
    lie_pbw->add_option("--env", lie_u, "u_0,...,u_D (default: computed)")->delimiter(',');
    lie_pbw->add_option("--max-degree", max_deg, "D when computing")->check(CLI::Range(1, 4));
    lie_pbw->callback([&] {
        if (lie_l.empty())
            lie_l = ranks_of(lie_quotient_dims(6, pv3_lie_relations(), max_deg));
        if (lie_u.empty())
            lie_u = ranks_of(enveloping_dims(6, pv3_lie_relations(), lie_l.size()));
        const auto series = pbw_series(lie_l, lie_l.size());
        std::cout << "PBW series:";
        for (const auto& s : series)
            std::cout << ' ' << s;
        std::cout << "\nenveloping:";
        for (auto u : lie_u)
            std::cout << ' ' << u;
        const bool ok = pbw_consistency(lie_l, lie_u);
        std::cout << '\n' << (ok ? "consistent" : "inconsistent") << '\n';
        status = ok ? 0 : 1;
    });
    auto* lie_der = lie->add_subcommand("derivation", "Does the C1 action extend to a derivation?");
    lie_der->callback([&] {
        const DerivationReport r = derivation_check();
        const std::vector<std::string> names = {"A1", "B1", "A2", "B2"};
        std::cout << "d([A1,B1]) = " << r.d_a1b1.to_string(names) << "  in ideal: " << (r.a1b1_in_ideal ? "yes" : "no")
                  << '\n';
        std::cout << "d([A2,B2]) = " << r.d_a2b2.to_string(names) << "  in ideal: " << (r.a2b2_in_ideal ? "yes" : "no")
                  << '\n';
        std::cout << "generator images match the relations: " << (r.generator_images_match ? "yes" : "no") << '\n';
        status = r.holds() ? 0 : 1;
    });

    // paper-suite
    auto* suite = app.add_subcommand("paper-suite", "Run every verification check");
    SuiteOptions opts;
    std::string json_path;
    bool no_timing = false, verbose = false;
    suite->add_option("--json", json_path, "Write the JSON report here");
    suite->add_option("--class", opts.nq_class, "Nilpotency class for the Lie comparison")
        ->check(CLI::Range(0, 4));
    suite->add_option("--max-degree", opts.max_degree, "Lie ring degree")->check(CLI::Range(1, 5));
    suite->add_option("--search-bounds", bounds_lk, "Certificate search bounds L,K")->delimiter(',');
    suite->add_flag("--no-timing", no_timing, "Omit wall times (byte-identical reports)");
    suite->add_flag("-v,--verbose", verbose, "Print details for passing checks too");
    suite->callback([&] {
        opts.bounds = parse_bounds(bounds_lk);
        opts.timing = !no_timing;
        const Report r = run_paper_suite(opts);
        std::cout << r.to_text(verbose);
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write " + json_path);
            out << r.to_json();
        }
        status = r.passed() ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
