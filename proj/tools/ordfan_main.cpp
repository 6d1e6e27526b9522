// Command-line surface over the core library. Exit codes: 0 on success, 1
// when a mathematical check reports a failure, 2 on input errors.
#include <CLI11.hpp>
#include <ordfan/ordfan.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ordfan;

Signature ring_from_flag(const std::string& ring) {
    std::vector<std::string> names;
    std::string cur;
    for (char ch : ring + ",") {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) names.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return make_signature(std::move(names));
}

OrderingSpec session_ordering(const Session& s, const std::string& name) {
    auto it = s.orderings.find(name);
    if (it != s.orderings.end()) return it->second;
    // fall back to parsing the argument as an ordering literal
    return parse_ordering(name, s.sig);
}

IdealSpec session_ideal(const Session& s) {
    if (s.generators.empty())
        throw std::invalid_argument("session declares no generators");
    return IdealSpec(s.algebra, s.generators);
}

std::string hp_pretty(const std::vector<Rational>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = coeffs.size(); k-- > 0;) {
        const Rational& c = coeffs[k];
        if (c.is_zero() && !(coeffs.size() == 1 && k == 0)) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.str();
        } else {
            if (mag != Rational(1)) os << mag.str() << "*";
            os << "s";
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<Polynomial> load_basis_file(const std::string& path, const Signature& sig) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open basis file: " + path);
    std::vector<Polynomial> out;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
        if (blank) continue;
        out.push_back(parse_polynomial(line, sig, false, ln));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total orderings of monomials: classification, metric, bases, fans"};
    app.require_subcommand(1);
    int exit_code = 0;

    // classify
    std::string cls_ring, cls_ord;
    int cls_window = 4;
    auto* classify_cmd = app.add_subcommand("classify", "classify an ordering");
    classify_cmd->add_option("--ring", cls_ring, "comma separated variable names")->required();
    classify_cmd->add_option("ordering", cls_ord, "ordering literal")->required();
    classify_cmd->add_option("--window", cls_window, "degree window for table checks");
    classify_cmd->callback([&] {
        Signature sig = ring_from_flag(cls_ring);
        auto cls = classify(parse_ordering(cls_ord, sig), cls_window);
        std::cout << to_string(cls, *sig) << "\n";
    });

    // dist
    std::string dist_ring, dist_a, dist_b;
    int dist_cap = 8;
    auto* dist_cmd = app.add_subcommand("dist", "metric distance between two orderings");
    dist_cmd->add_option("--ring", dist_ring, "comma separated variable names")->required();
    dist_cmd->add_option("first", dist_a)->required();
    dist_cmd->add_option("second", dist_b)->required();
    dist_cmd->add_option("--cap", dist_cap, "deepest slice to compare");
    dist_cmd->callback([&] {
        Signature sig = ring_from_flag(dist_ring);
        auto d = metric_distance(parse_ordering(dist_a, sig), parse_ordering(dist_b, sig),
                                 dist_cap);
        std::cout << d.str() << "\n";
    });

    // gb / reduced-gb
    std::string gb_session, gb_ord = "grlex";
    auto add_gb = [&](const char* name, const char* help, bool reduce) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("session", gb_session, "session file")->required();
        cmd->add_option("--ordering", gb_ord, "named or literal ordering");
        cmd->callback([&, reduce] {
            Session s = parse_session_file(gb_session);
            OrderingSpec ord = session_ordering(s, gb_ord);
            GroebnerBasis g = buchberger(session_ideal(s), ord);
            if (reduce) g = reduce_gb(g);
            for (const auto& e : g.elements) std::cout << to_string(e) << "\n";
        });
    };
    add_gb("gb", "basis for one ordering", false);
    add_gb("reduced-gb", "reduced basis for one ordering", true);

    // fan
    std::string fan_session;
    int fan_w = 4, fan_rounds = 0;
    std::uint64_t fan_seed = kDefaultSeed;
    auto* fan_cmd = app.add_subcommand("fan", "leading ideals over admissible orderings");
    fan_cmd->add_option("session", fan_session)->required();
    fan_cmd->add_option("--weight-bound", fan_w, "largest weight entry swept");
    fan_cmd->add_option("--rounds", fan_rounds, "extra random orderings");
    fan_cmd->add_option("--seed", fan_seed, "seed for the extra rounds");
    fan_cmd->callback([&] {
        Session s = parse_session_file(fan_session);
        auto fan = enumerate_leading_ideals_admissible(session_ideal(s), fan_w, fan_rounds,
                                                       fan_seed);
        std::cout << to_report(fan);
    });

    // degree-fan
    std::string dfan_session;
    int dfan_depth = 3;
    auto* dfan_cmd = app.add_subcommand("degree-fan",
                                        "leading ideals over graded tables of a fixed depth");
    dfan_cmd->add_option("session", dfan_session)->required();
    dfan_cmd->add_option("--depth", dfan_depth, "table depth");
    dfan_cmd->callback([&] {
        Session s = parse_session_file(dfan_session);
        std::cout << to_report(enumerate_leading_ideals_degree(session_ideal(s), dfan_depth));
    });

    // universal-gb
    std::string ugb_session;
    int ugb_w = 4, ugb_rounds = 0;
    std::uint64_t ugb_seed = kDefaultSeed;
    auto* ugb_cmd = app.add_subcommand("universal-gb",
                                       "union of reduced bases across the admissible sweep");
    ugb_cmd->add_option("session", ugb_session)->required();
    ugb_cmd->add_option("--weight-bound", ugb_w);
    ugb_cmd->add_option("--rounds", ugb_rounds);
    ugb_cmd->add_option("--seed", ugb_seed);
    ugb_cmd->callback([&] {
        Session s = parse_session_file(ugb_session);
        IdealSpec L = session_ideal(s);
        auto fan = enumerate_leading_ideals_admissible(L, ugb_w, ugb_rounds, ugb_seed);
        for (const auto& u : universal_gb(L, fan)) std::cout << to_string(u) << "\n";
    });

    // verify-universal
    std::string vu_session, vu_basis;
    int vu_samples = 100, vu_w = 4;
    long vu_entry = 16;
    std::uint64_t vu_seed = kDefaultSeed;
    auto* vu_cmd = app.add_subcommand(
        "verify-universal", "check a universal basis against sampled admissible orderings");
    vu_cmd->add_option("session", vu_session)->required();
    vu_cmd->add_option("--samples", vu_samples, "number of random orderings");
    vu_cmd->add_option("--seed", vu_seed, "sampling seed");
    vu_cmd->add_option("--weight-bound", vu_w, "sweep bound when computing the basis");
    vu_cmd->add_option("--max-entry", vu_entry, "largest random weight entry");
    vu_cmd->add_option("--basis", vu_basis, "verify this basis file instead of computing one");
    vu_cmd->callback([&] {
        Session s = parse_session_file(vu_session);
        IdealSpec L = session_ideal(s);
        std::vector<Polynomial> U;
        if (vu_basis.empty()) {
            U = universal_gb(L, enumerate_leading_ideals_admissible(L, vu_w));
        } else {
            U = load_basis_file(vu_basis, s.sig);
        }
        std::vector<OrderingSpec> probes;
        for (const auto& m : random_matrix_orderings(s.sig->t, vu_entry, vu_samples, vu_seed))
            probes.emplace_back(m);
        auto rep = verify_universal(U, L, probes);
        std::cout << "checked=" << rep.checked << " failures=" << rep.failures.size()
                  << (rep.pass ? " pass" : " FAIL") << "\n";
        for (const auto& f : rep.failures) {
            std::cout << "failure: " << f.reason << " under "
                      << to_string(f.ordering, *s.sig) << "\n";
        }
        if (!rep.pass) exit_code = 1;
    });

    // hilbert
    std::string hi_ring, hi_ideal;
    auto* hi_cmd = app.add_subcommand("hilbert",
                                      "hilbert data of a monomial ideal given by generators");
    hi_cmd->add_option("--ring", hi_ring)->required();
    hi_cmd->add_option("--ideal", hi_ideal, "comma separated monomial generators")->required();
    hi_cmd->callback([&] {
        Signature sig = ring_from_flag(hi_ring);
        std::vector<Monomial> gens;
        std::string cur;
        for (char ch : hi_ideal + ",") {
            if (ch == ',') {
                bool blank = cur.find_first_not_of(" \t") == std::string::npos;
                if (!blank) gens.push_back(parse_monomial(cur, sig));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        auto I = MonomialIdeal::from_generators(sig, gens);
        auto data = hilbert_polynomial_and_index(I);
        std::cout << "ideal=" << to_string(I) << "\n";
        std::cout << "hf:";
        for (const auto& v : data.hf_values) std::cout << " " << v;
        std::cout << "\nhp: " << hp_pretty(data.hp_coeffs) << "\n";
        std::cout << "ind: " << data.regularity_index << "\n";
    });

    // macaulay
    std::string mac_session, mac_ord = "grlex";
    int mac_cap = 4;
    auto* mac_cmd = app.add_subcommand("macaulay",
                                       "standard-monomial basis check for the quotient");
    mac_cmd->add_option("session", mac_session)->required();
    mac_cmd->add_option("--ordering", mac_ord);
    mac_cmd->add_option("--cap", mac_cap, "largest degree exercised");
    mac_cmd->callback([&] {
        Session s = parse_session_file(mac_session);
        auto rep = macaulay_check(session_ideal(s), session_ordering(s, mac_ord), mac_cap);
        std::cout << (rep.pass ? "pass" : "FAIL") << " basis-size=" << rep.basis.size()
                  << "\n";
        for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
        if (!rep.pass) exit_code = 1;
    });

    // slice-lm
    std::string sl_session, sl_ord = "grlex";
    int sl_degree = 3;
    auto* sl_cmd = app.add_subcommand("slice-lm",
                                      "heads of the ideal's bounded-degree part");
    sl_cmd->add_option("session", sl_session)->required();
    sl_cmd->add_option("--ordering", sl_ord);
    sl_cmd->add_option("--degree", sl_degree)->required();
    sl_cmd->callback([&] {
        Session s = parse_session_file(sl_session);
        auto heads =
            slice_leading_monomials(session_ideal(s), session_ordering(s, sl_ord), sl_degree);
        for (size_t i = 0; i < heads.size(); ++i) {
            if (i) std::cout << " ";
            std::cout << to_string(heads[i], *s.sig);
        }
        std::cout << "\n";
    });

    // perturb
    std::string pe_ring, pe_ord;
    int pe_r = 1;
    auto* pe_cmd = app.add_subcommand(
        "perturb", "nearby degree ordering that is certainly not compatible");
    pe_cmd->add_option("--ring", pe_ring)->required();
    pe_cmd->add_option("ordering", pe_ord)->required();
    pe_cmd->add_option("--r", pe_r, "agreement radius")->required();
    pe_cmd->callback([&] {
        Signature sig = ring_from_flag(pe_ring);
        OrderingSpec base = parse_ordering(pe_ord, sig);
        GradedTableOrdering table = perturb_to_incompatible(base, pe_r);
        OrderingSpec out{table};
        std::cout << to_string(out, *sig) << "\n";
        std::cout << "distance: " << metric_distance(base, out, pe_r + 4).str() << "\n";
        std::cout << to_string(classify(out, pe_r + 2), *sig) << "\n";
    });

    // bound
    int bd_d = 1, bd_t = 1;
    auto* bd_cmd = app.add_subcommand("bound",
                                      "head degree bound for quadric solvable presentations");
    bd_cmd->add_option("--d", bd_d, "generator degree bound")->required();
    bd_cmd->add_option("--t", bd_t, "number of variables")->required();
    bd_cmd->callback([&] { std::cout << degree_bound_quadric(bd_d, bd_t) << "\n"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ordfan::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
