// command line front end: extremes, lex ends, closed families, multiplicity
// bounds, the brute-force oracle, a DOT poset export, and a self check
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plethysm/extrema.hpp"
#include "plethysm/family.hpp"
#include "plethysm/multiplicity.hpp"
#include "plethysm/oracle.hpp"

using namespace plethysm;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string int_str(const Int& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

ordered_json partition_list(const std::vector<Partition>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : v) arr.push_back(p.str());
    return arr;
}

ordered_json family_json(const TableauFamily& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& t : f) arr.push_back(t.str());
    return arr;
}

void emit(const ordered_json& doc, bool json, const std::string& plain) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << plain;
}

ordered_json result_doc(const std::string& command, ordered_json inputs, ordered_json outputs) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["outputs"] = std::move(outputs);
    return doc;
}

std::string trace_plain(const SegmentTrace& tr) {
    std::ostringstream out;
    out << "k =";
    for (unsigned k : tr.k) out << ' ' << k;
    out << "\n";
    for (size_t j = 0; j < tr.tiers.size(); ++j) {
        out << "tier " << j + 1 << ":";
        for (const auto& t : tr.tiers[j]) out << ' ' << t.str();
        out << "\n";
    }
    out << "pool:";
    for (const auto& t : tr.final_pool) out << ' ' << t.str();
    out << "\n";
    for (size_t i = 0; i < tr.segments.size(); ++i) {
        out << "family " << i + 1 << ":";
        for (const auto& t : tr.segments[i]) out << ' ' << t.str();
        out << "\n";
    }
    return out.str();
}

ordered_json trace_json(const SegmentTrace& tr) {
    ordered_json j;
    j["k"] = tr.k;
    j["tiers"] = ordered_json::array();
    for (const auto& tier : tr.tiers) j["tiers"].push_back(family_json(tier));
    j["final_pool"] = family_json(tr.final_pool);
    j["segments"] = ordered_json::array();
    for (const auto& fam : tr.segments) j["segments"].push_back(family_json(fam));
    return j;
}

// covering pairs of the majorization order on conjugate-semistandard
// mu-tableaux with entries bounded by max_entry
std::vector<std::pair<size_t, size_t>> covering_pairs(const std::vector<Tableau>& nodes) {
    size_t n = nodes.size();
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) below[i][j] = majorizes(nodes[i], nodes[j]) && !majorizes(nodes[j], nodes[i]);
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool covered = true;
            for (size_t w = 0; w < n && covered; ++w)
                if (below[i][w] && below[w][j]) covered = false;
            if (covered) edges.emplace_back(i, j);
        }
    return edges;
}

struct selfcheck_table {
    bool ok = true;
    std::ostringstream lines;

    void expect(const std::string& name, const std::string& got, const std::string& want) {
        if (got == want) {
            lines << "ok " << name << "\n";
        } else {
            lines << "mismatch " << name << ": expected " << want << " got " << got << "\n";
            ok = false;
        }
    }
    void expect(const std::string& name, const Int& got, const Int& want) {
        expect(name, int_str(got), int_str(want));
    }
    void expect(const std::string& name, const Partition& got, const Partition& want) {
        expect(name, got.str(), want.str());
    }
    void expect(const std::string& name, const std::vector<Partition>& got,
                const std::vector<Partition>& want) {
        auto render = [](const std::vector<Partition>& v) {
            std::string s = "{";
            for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
            return s + "}";
        };
        expect(name, render(got), render(want));
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact extremes and multiplicities of plethysm constituents"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 0;
    app.add_option("--threads", threads, "oracle worker count, 0 means all cores")
        ->capture_default_str();

    std::string mu_s, nu_s, lambda_s, out_path, mode_s;
    unsigned depth = 0, max_entry = 0;
    bool json = false, want_max = false, want_min = false, want_both = false;
    bool greatest = false, least = false, trace = false, with_oracle = false;
    bool fast = false, full = false;

    auto* extrema = app.add_subcommand("extrema", "dominance-minimal and maximal constituents");
    extrema->add_option("mu", mu_s, "inner partition")->required();
    extrema->add_option("nu", nu_s, "outer partition")->required();
    extrema->add_flag("--max", want_max, "maximal set only");
    extrema->add_flag("--min", want_min, "minimal set only");
    extrema->add_flag("--both", want_both, "both sets (default)");
    extrema->add_flag("--json", json, "machine readable output");

    auto* lex = app.add_subcommand("lex", "lexicographic extreme constituents");
    lex->add_option("mu", mu_s, "inner partition")->required();
    lex->add_option("nu", nu_s, "outer partition")->required();
    lex->add_flag("--greatest", greatest, "lex-greatest constituent and its multiplicity");
    lex->add_flag("--least", least, "lex-least constituent");
    lex->add_flag("--trace", trace, "print the initial-segment ledger per kappa part");
    lex->add_flag("--json", json, "machine readable output");

    auto* closed = app.add_subcommand("closed", "closed families of a given size");
    closed->add_option("mu", mu_s, "tableau shape")->required();
    closed->add_option("d", depth, "family size")->required();
    closed->add_flag("--json", json, "machine readable output");

    auto* mult = app.add_subcommand("multiplicity", "lower and upper constituent bounds");
    mult->add_option("mu", mu_s, "inner partition")->required();
    mult->add_option("nu", nu_s, "outer partition")->required();
    mult->add_option("lambda", lambda_s, "constituent")->required();
    mult->add_flag("--oracle", with_oracle, "also compute the exact coefficient");
    mult->add_flag("--json", json, "machine readable output");

    auto* oracle = app.add_subcommand("oracle", "brute-force symmetric function engine");
    oracle->add_option("mode", mode_s, "decompose or coeff")
        ->required()
        ->check(CLI::IsMember({"decompose", "coeff"}));
    oracle->add_option("nu", nu_s, "outer partition")->required();
    oracle->add_option("mu", mu_s, "inner partition")->required();
    oracle->add_option("lambda", lambda_s, "constituent (coeff mode)");
    oracle->add_flag("--json", json, "machine readable output");

    auto* poset = app.add_subcommand("poset", "DOT export of the majorization order");
    poset->add_option("mu", mu_s, "tableau shape")->required();
    poset->add_option("max_entry", max_entry, "entry bound")->required();
    poset->add_option("--out", out_path, "write DOT here instead of stdout");
    poset->add_flag("--json", json, "emit nodes and edges as JSON instead of DOT");

    auto* selfcheck = app.add_subcommand("selfcheck", "verify the built-in worked examples");
    selfcheck->add_flag("--fast", fast, "small cases only (default)");
    selfcheck->add_flag("--full", full, "include the mn = 48 coefficient");
    selfcheck->add_flag("--json", json, "machine readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        set_oracle_threads(threads);

        if (extrema->parsed()) {
            Partition mu = Partition::parse(mu_s), nu = Partition::parse(nu_s);
            if (!want_max && !want_min) want_both = true;
            ordered_json outputs;
            std::ostringstream plain;
            if (want_min || want_both) {
                auto mins = minimal_constituents(mu, nu);
                outputs["minimal"] = partition_list(mins);
                plain << "minimal:";
                for (const auto& p : mins) plain << ' ' << p.str();
                plain << "\n";
            }
            if (want_max || want_both) {
                auto maxs = maximal_constituents(mu, nu);
                outputs["maximal"] = partition_list(maxs);
                plain << "maximal:";
                for (const auto& p : maxs) plain << ' ' << p.str();
                plain << "\n";
            }
            emit(result_doc("extrema", {{"mu", mu.str()}, {"nu", nu.str()}}, outputs), json,
                 plain.str());
        } else if (lex->parsed()) {
            Partition mu = Partition::parse(mu_s), nu = Partition::parse(nu_s);
            if (greatest == least)
                throw std::invalid_argument("pass exactly one of --greatest/--least");
            ordered_json outputs;
            std::ostringstream plain;
            if (greatest) {
                auto [top, m] = lex_greatest(mu, nu);
                outputs["partition"] = top.str();
                outputs["multiplicity"] = int_str(m);
                plain << top.str() << " multiplicity " << m << "\n";
            } else {
                outputs["partition"] = lex_least(mu, nu).str();
                plain << lex_least(mu, nu).str() << "\n";
                if (trace) {
                    outputs["traces"] = ordered_json::array();
                    Partition kap = kappa_of(mu, nu);
                    for (unsigned part : kap.parts()) {
                        auto tr = lexmin_segments(mu, part);
                        ordered_json tj = trace_json(tr);
                        tj["kappa_part"] = part;
                        outputs["traces"].push_back(std::move(tj));
                        plain << "kappa part " << part << "\n" << trace_plain(tr);
                    }
                }
            }
            emit(result_doc("lex", {{"mu", mu.str()}, {"nu", nu.str()}}, outputs), json,
                 plain.str());
        } else if (closed->parsed()) {
            Partition mu = Partition::parse(mu_s);
            auto fams = enumerate_closed_families(mu, depth);
            ordered_json outputs;
            outputs["count"] = fams.size();
            outputs["families"] = ordered_json::array();
            std::ostringstream plain;
            for (const auto& fam : fams) {
                ordered_json fj;
                fj["tableaux"] = family_json(fam);
                fj["type"] = family_type(fam).str();
                outputs["families"].push_back(std::move(fj));
                plain << "{";
                for (size_t i = 0; i < fam.size(); ++i) plain << (i ? ", " : "") << fam[i].str();
                plain << "} type " << family_type(fam).str() << "\n";
            }
            emit(result_doc("closed", {{"mu", mu.str()}, {"d", depth}}, outputs), json,
                 plain.str());
        } else if (mult->parsed()) {
            Partition mu = Partition::parse(mu_s), nu = Partition::parse(nu_s);
            Partition lambda = Partition::parse(lambda_s);
            auto r = bounds(mu, nu, lambda, with_oracle);
            ordered_json outputs;
            outputs["lower"] = int_str(r.lower);
            outputs["upper_ordered"] = int_str(r.upper_ordered);
            outputs["upper_symmetrized"] = int_str(r.upper_symmetrized);
            outputs["exact"] = r.exact ? ordered_json(int_str(*r.exact)) : ordered_json(nullptr);
            std::ostringstream plain;
            plain << "lower " << r.lower << "\nupper ordered " << r.upper_ordered
                  << "\nupper symmetrized " << r.upper_symmetrized << "\n";
            if (r.exact) plain << "exact " << *r.exact << "\n";
            emit(result_doc("multiplicity",
                            {{"mu", mu.str()}, {"nu", nu.str()}, {"lambda", lambda.str()}},
                            outputs),
                 json, plain.str());
        } else if (oracle->parsed()) {
            Partition mu = Partition::parse(mu_s), nu = Partition::parse(nu_s);
            ordered_json inputs{{"mode", mode_s}, {"nu", nu.str()}, {"mu", mu.str()}};
            ordered_json outputs;
            std::ostringstream plain;
            if (mode_s == "decompose") {
                auto dec = full_decomposition(nu, mu);
                outputs["constituents"] = ordered_json::array();
                for (const auto& [lam, c] : dec.multiplicities) {
                    outputs["constituents"].push_back(
                        ordered_json{{"partition", lam.str()}, {"multiplicity", int_str(c)}});
                    plain << lam.str() << " : " << c << "\n";
                }
            } else {
                if (lambda_s.empty())
                    throw std::invalid_argument("coeff mode needs a lambda argument");
                Partition lambda = Partition::parse(lambda_s);
                inputs["lambda"] = lambda.str();
                Int c = plethysm_coefficient(nu, mu, lambda);
                outputs["coefficient"] = int_str(c);
                plain << c << "\n";
            }
            emit(result_doc("oracle", inputs, outputs), json, plain.str());
        } else if (poset->parsed()) {
            Partition mu = Partition::parse(mu_s);
            auto nodes = enumerate_cs(mu, max_entry);
            auto edges = covering_pairs(nodes);
            std::ostringstream dot;
            dot << "digraph majorization {\n";
            for (const auto& t : nodes) dot << "  \"" << t.str() << "\";\n";
            for (auto [i, j] : edges)
                dot << "  \"" << nodes[i].str() << "\" -> \"" << nodes[j].str() << "\";\n";
            dot << "}\n";
            if (json) {
                ordered_json outputs;
                outputs["nodes"] = family_json(nodes);
                outputs["edges"] = ordered_json::array();
                for (auto [i, j] : edges)
                    outputs["edges"].push_back(
                        ordered_json::array({nodes[i].str(), nodes[j].str()}));
                emit(result_doc("poset", {{"mu", mu.str()}, {"max_entry", max_entry}}, outputs),
                     true, "");
            } else if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw std::invalid_argument("cannot open '" + out_path + "'");
                f << dot.str();
            } else {
                std::cout << dot.str();
            }
        } else if (selfcheck->parsed()) {
            (void)fast; // fast is the default; --full adds the big coefficient
            selfcheck_table tab;
            auto p = [](const char* s) { return Partition::parse(s); };
            tab.expect("closed family count (2,1) d=4",
                       Int(enumerate_closed_families(p("2,1"), 4).size()), Int(5));
            tab.expect("minimal H_(2,1)^(4)", minimal_constituents(p("2,1"), p("4")),
                       {p("5,1^7"), p("4,2,2,1^4"), p("3,3,2,2,1,1")});
            tab.expect("maximal H_(2,1)^(4)", maximal_constituents(p("2,1"), p("4")), {p("8,4")});
            tab.expect("minimal H_(2,1)^(3,1)", minimal_constituents(p("2,1"), p("3,1")),
                       {p("4,2,1^6"), p("3,2^3,1^3")});
            tab.expect("maximal H_(2,1)^(3,1)", maximal_constituents(p("2,1"), p("3,1")),
                       {p("8,3,1"), p("7,5")});
            tab.expect("lex greatest (2,1),(4)", lex_greatest(p("2,1"), p("4")).first, p("8,4"));
            tab.expect("lex least (2,1),(4,1)", lex_least(p("2,1"), p("4,1")), p("3^2,2^3,1^3"));
            tab.expect("segment count (3,1)^7", Int(lexmin_segments(p("3,1"), 7).segments.size()),
                       Int(3));
            tab.expect("hook multiplicity (4,7)", lexmin_multiplicity_hook(4, 7), Int(3));
            tab.expect("square decomposition", full_decomposition(p("2"), p("2")).multiplicities ==
                                                       std::map<Partition, Int>{{p("4"), 1},
                                                                                {p("2,2"), 1}}
                                                   ? "ok"
                                                   : "bad",
                       "ok");
            auto a = bounds(p("2,1"), p("4"), p("3,3,2,2,1,1"), true);
            tab.expect("sandwich lower (2,1),(4)", a.lower, Int(2));
            tab.expect("sandwich exact (2,1),(4)", a.exact.value_or(-1), Int(2));
            auto b = bounds(p("2,1"), p("4,1"), p("3,3,2,2,2,1,1,1"), true);
            tab.expect("sandwich lower (2,1),(4,1)", b.lower, Int(2));
            tab.expect("sandwich exact (2,1),(4,1)", b.exact.value_or(-1), Int(2));
            if (full) {
                Partition lam = p("4^4,3^5,2^5,1^7");
                tab.expect("mn=48 symmetrized tuples",
                           count_tuples_of_type(p("2,1"), p("8,8"), lam).symmetrized, Int(5));
                tab.expect("mn=48 coefficient", plethysm_coefficient(p("8,8"), p("2,1"), lam),
                           Int(4));
            }
            ordered_json outputs;
            outputs["ok"] = tab.ok;
            outputs["report"] = tab.lines.str();
            emit(result_doc("selfcheck", {{"full", full}}, outputs), json,
                 tab.lines.str() + (tab.ok ? "all checks passed\n" : "checks FAILED\n"));
            if (!tab.ok) rc = 1;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0);
    std::cerr << "timing: " << static_cast<long>(ms.count()) << " ms\n";
    return rc;
}
