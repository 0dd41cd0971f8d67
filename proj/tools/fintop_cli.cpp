// Command-line front end: inspect finite posets, compute their region
// spaces, decide the fixed point property, and run the bundled
// reproduction checks. Exit codes: 0 success (or verdict "has"), 1 negative
// verdict / failed checks, 2 usage or input errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fintop/catalog.hpp"
#include "fintop/cspace.hpp"
#include "fintop/fpp.hpp"
#include "fintop/grothendieck.hpp"
#include "fintop/homotopy.hpp"
#include "fintop/io.hpp"
#include "fintop/verify.hpp"

namespace {

using namespace fintop;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PosetError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

PosetDocument load_document(const std::string& path) {
    std::string text = read_file(path);
    return has_suffix(path, ".json") ? parse_poset_json(text) : parse_poset(text);
}

void write_document(const PosetDocument& doc, const std::string& path) {
    std::string text = has_suffix(path, ".json") ? serialize_poset_json(doc) : serialize_poset(doc);
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PosetError("cannot write file: " + path);
    out << text;
}

std::string join_labels(const FinitePoset& p, const Bitset& b) {
    std::string s;
    for (int e = b.first(); e >= 0; e = b.next(e)) {
        if (!s.empty()) s += ' ';
        s += p.label(e);
    }
    return s;
}

int cmd_info(const std::string& file) {
    PosetDocument doc = load_document(file);
    FinitePoset x = doc.to_poset();
    if (!doc.name.empty()) std::cout << "name: " << doc.name << "\n";
    std::cout << "elements (" << x.size() << "):";
    for (const auto& l : x.labels()) std::cout << " " << l;
    std::cout << "\ncovers (" << x.covers().size() << "):";
    for (auto [lo, hi] : x.covers()) std::cout << " " << x.label(lo) << "<" << x.label(hi);
    std::cout << "\nmaximal: " << join_labels(x, x.maximal());
    std::cout << "\nminimal: " << join_labels(x, x.minimal());
    std::cout << "\nconnected: " << (x.is_connected() ? "yes" : "no") << "\n";
    auto bps = find_beat_points(x);
    std::cout << "beat points (" << bps.size() << "):";
    for (const auto& b : bps)
        std::cout << " " << x.label(b.element) << (b.kind == BeatKind::down ? "(down," : "(up,")
                  << x.label(b.witness) << ")";
    std::cout << "\ncore size: " << core(x).size();
    std::cout << "\ncontractible: " << (is_contractible(x) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_cconstr(const std::string& file, const std::string& part_name, bool dot) {
    FinitePoset x = load_document(file).to_poset();
    CSpace cs;
    if (part_name == "u")
        cs = u_family(x);
    else if (part_name == "f")
        cs = f_family(x);
    else
        cs = c_space(x);
    if (dot) {
        std::cout << emit_dot(cs);
        return 0;
    }
    std::cout << "regions (" << cs.size() << "):\n";
    for (int i = 0; i < cs.size(); ++i) std::cout << "  " << cs.order.label(i) << "\n";
    std::cout << "covers (" << cs.order.covers().size() << "):\n";
    for (auto [lo, hi] : cs.order.covers())
        std::cout << "  " << cs.order.label(lo) << " < " << cs.order.label(hi) << "\n";
    if (cs.part == Part::C)
        std::cout << "families overlap as sets: " << (cs.families_overlap ? "yes" : "no") << "\n";
    return 0;
}

void print_certificate(const FinitePoset& x, const FppCertificate& c, int indent = 0) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    std::cout << pad << "verdict: "
              << (c.has_fpp ? "has fixed point property" : "lacks fixed point property") << "\n";
    std::cout << pad << "evidence: " << to_string(c.evidence) << "\n";
    if (c.evidence == FppEvidence::brute_force_exhausted)
        std::cout << pad << "search: " << c.stats.nodes << " nodes, " << c.stats.maps
                  << " fixed-point-free maps\n";
    if (c.witness) {
        std::cout << pad << "witness:";
        for (int e = 0; e < x.size(); ++e)
            std::cout << " " << x.label(e) << "->" << x.label((*c.witness)(e));
        std::cout << "\n";
    }
    if (c.evidence == FppEvidence::c_criterion) {
        std::cout << pad << "side: "
                  << (c.criterion_part == Part::U ? "U" : c.criterion_part == Part::F ? "F" : "C")
                  << "\n";
        for (std::size_t i = 0; i < c.sub_certificates.size(); ++i)
            std::cout << pad << "  " << c.sub_names[i] << ": "
                      << to_string(c.sub_certificates[i].evidence) << "\n";
    }
}

int cmd_fpp(const std::string& file, const std::string& method) {
    FinitePoset x = load_document(file).to_poset();
    FppMethod m = FppMethod::automatic;
    if (method == "brute") m = FppMethod::brute;
    if (method == "criterion") m = FppMethod::criterion;
    auto cert = decide_fpp(x, m);
    if (!cert) {
        std::cout << "inconclusive: the region-space criterion does not decide this space\n";
        return 2;
    }
    print_certificate(x, *cert);
    return cert->has_fpp ? 0 : 1;
}

int cmd_core(const std::string& file) {
    PosetDocument doc = load_document(file);
    FinitePoset c = core(doc.to_poset());
    std::string name = doc.name.empty() ? std::string{} : doc.name + "-core";
    std::cout << serialize_poset(PosetDocument::from_poset(c, name));
    return 0;
}

int cmd_gen(const std::string& name, const std::vector<int>& params, const std::string& out,
            bool list) {
    if (list) {
        for (const auto& e : catalog())
            std::cout << e.id << (e.params.empty() ? "" : " " + e.params) << "  -- " << e.summary
                      << "\n";
        return 0;
    }
    FinitePoset x = generate(name, params);
    std::string doc_name = name;
    for (int p : params) doc_name += "-" + std::to_string(p);
    write_document(PosetDocument::from_poset(x, doc_name), out);
    return 0;
}

int cmd_grothendieck(const std::string& file) {
    FinitePoset x = load_document(file).to_poset();
    IntegralPoset g = build_integral(x);
    std::cout << "base U(X): " << g.base.size() << " regions\n";
    std::cout << "integral: " << g.poset.size() << " points\n";
    std::cout << "points:";
    for (int i = 0; i < g.poset.size(); ++i) std::cout << " " << g.poset.label(i);
    std::cout << "\n";
    IntegralReport rep = verify_integral_identities(x);
    auto line = [](const char* what, bool ok) {
        std::cout << "  " << (ok ? "ok  " : "FAIL") << " " << what << "\n";
    };
    line("iota(X) is a dbp-retract; rho.iota = id; iota.rho <= id", rep.retract_ok);
    line("U(iota) is an isomorphism with inverse U(rho)", rep.u_iso_ok);
    line("U(iota)(C) is the cylinder over C", rep.tilde_ok);
    line("max-region collapse closes the triangle with U(q)", rep.triangle_ok);
    line("X is homotopy equivalent to the integral", rep.homotopy_ok);
    line("q is a quotient map (finite characterization)", rep.quotient_ok);
    return rep.all() && rep.quotient_ok ? 0 : 1;
}

int cmd_verify_paper(std::uint64_t seed, int trials) {
    auto results = verify::run_paper_checks(seed, trials);
    bool all = true;
    for (const auto& r : results) {
        std::cout << verify::format_result_line(r) << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite T0-spaces: region spaces, cores and the fixed point property"};
    app.require_subcommand(1);

    std::string file, part = "c", method = "auto", gen_name, gen_out;
    std::vector<int> gen_params;
    bool dot = false, gen_list = false;
    std::uint64_t seed = fintop::verify::kDefaultSeed;
    int trials = fintop::verify::kDefaultTrials;

    auto* info = app.add_subcommand("info", "elements, covers, extremes, beat points");
    info->add_option("file", file)->required();

    auto* cconstr = app.add_subcommand("cconstr", "region space of a poset");
    cconstr->add_option("file", file)->required();
    cconstr->add_option("--part", part, "u, f or c")->check(CLI::IsMember({"u", "f", "c"}));
    cconstr->add_flag("--dot", dot, "emit DOT instead of a listing");

    auto* fpp = app.add_subcommand("fpp", "decide the fixed point property");
    fpp->add_option("file", file)->required();
    fpp->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "criterion"}));

    auto* core_cmd = app.add_subcommand("core", "iterated beat-point removal");
    core_cmd->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generate a catalog space");
    gen->add_option("name", gen_name);
    gen->add_option("params", gen_params, "integer parameters, when the space takes any");
    gen->add_option("-o,--output", gen_out, "output file (.json for the JSON mirror)");
    gen->add_flag("--list", gen_list, "list catalog ids");

    auto* groth = app.add_subcommand("grothendieck", "integral poset and its identities");
    groth->add_option("file", file)->required();

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full reproduction suite");
    verify_cmd->add_option("--seed", seed, "seed for the randomized law suite");
    verify_cmd->add_option("--trials", trials, "number of random posets in the law suite");

    try {
        app.parse(argc, argv);
        if (info->parsed()) return cmd_info(file);
        if (cconstr->parsed()) return cmd_cconstr(file, part, dot);
        if (fpp->parsed()) return cmd_fpp(file, method);
        if (core_cmd->parsed()) return cmd_core(file);
        if (gen->parsed()) {
            if (!gen_list && gen_name.empty())
                throw fintop::PosetError("gen: name required (or use --list)");
            return cmd_gen(gen_name, gen_params, gen_out, gen_list);
        }
        if (groth->parsed()) return cmd_grothendieck(file);
        if (verify_cmd->parsed()) return cmd_verify_paper(seed, trials);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
