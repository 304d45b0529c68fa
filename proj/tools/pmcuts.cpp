// Command-line drivers: per-graph analysis, conjecture-verification
// campaigns over graph files, orientation searches with certificate
// emission, gadget construction pipelines, and parallel batch runs.
//
// Exit codes: 0 campaign complete with no counterexample; 1 counterexample
// found (certificate written); 2 incomplete (resource bounds hit); 3 usage
// or parse errors.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmcuts/canonical.hpp"
#include "pmcuts/connectivity.hpp"
#include "pmcuts/embedding.hpp"
#include "pmcuts/formats.hpp"
#include "pmcuts/gadgets.hpp"
#include "pmcuts/generate.hpp"
#include "pmcuts/graph.hpp"
#include "pmcuts/hamilton.hpp"
#include "pmcuts/matchings.hpp"
#include "pmcuts/orientation.hpp"
#include "pmcuts/planar_dual.hpp"
#include "pmcuts/search.hpp"

using json = nlohmann::json;
using namespace pmcuts;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 3;

struct InputItem {
    MultiGraph g;
    PartialOrientation o;
    bool oriented = false;
    std::optional<PlaneEmbedding> emb;
    std::string label;
};

std::string orientation_string(const MultiGraph& g, const PartialOrientation& o) {
    std::string s = write_sidecar(g, o);
    return s.substr(s.find('\n') + 1);
}

// Reads a whole input file; parse failures are reported per record and the
// rest of the file is still processed.
std::vector<InputItem> load_inputs(const std::string& path, const std::string& format,
                                   std::ostream& err, int& parse_errors) {
    std::vector<InputItem> items;
    std::string fmt = format;
    if (fmt == "auto") {
        if (path.size() > 4 && path.substr(path.size() - 4) == ".plc") fmt = "planar_code";
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << path << ": cannot open\n";
        ++parse_errors;
        return items;
    }
    if (fmt == "auto") {
        std::string first, second;
        std::getline(in, first);
        std::getline(in, second);
        in.clear();
        in.seekg(0);
        if (first.rfind(">>planar_code<<", 0) == 0 || (!first.empty() && first[0] < 32))
            fmt = "planar_code";
        else if (!first.empty() && first[0] == '&')
            fmt = "digraph6";
        else if (second.rfind("O:", 0) == 0)
            fmt = "sidecar";
        else
            fmt = "graph6";
    }

    auto label = [&](size_t idx) { return path + "#" + std::to_string(idx); };
    try {
        if (fmt == "planar_code") {
            for (auto& emb : parse_planar_code(in)) {
                InputItem it;
                it.g = emb.graph;
                it.o = PartialOrientation(it.g.m());
                it.emb = std::move(emb);
                it.label = label(items.size());
                items.push_back(std::move(it));
            }
            return items;
        }
    } catch (const std::exception& e) {
        err << path << ": " << e.what() << "\n";
        ++parse_errors;
        return items;
    }

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        try {
            InputItem it;
            if (fmt == "sidecar") {
                std::string oline;
                if (!std::getline(in, oline))
                    throw FormatError("sidecar stream ended before orientation line", 0);
                ++lineno;
                while (!oline.empty() && oline.back() == '\r') oline.pop_back();
                std::tie(it.g, it.o) = parse_sidecar(line, oline);
                it.oriented = true;
            } else if (fmt == "digraph6" || line[0] == '&') {
                std::tie(it.g, it.o) = parse_digraph6(line);
                it.oriented = true;
            } else {
                if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
                if (line.rfind(">>sparse6<<", 0) == 0) line = line.substr(11);
                if (line.empty()) continue;
                it.g = line[0] == ':' ? parse_sparse6(line) : parse_graph6(line);
                it.o = PartialOrientation(it.g.m());
            }
            it.label = label(items.size());
            items.push_back(std::move(it));
        } catch (const std::exception& e) {
            err << path << ":" << lineno << ": " << e.what() << "\n";
            ++parse_errors;
        }
    }
    return items;
}

std::vector<InputItem> load_all(const std::vector<std::string>& paths, const std::string& format,
                                std::ostream& err, int& parse_errors) {
    std::vector<InputItem> all;
    for (const auto& p : paths)
        for (auto& it : load_inputs(p, format, err, parse_errors)) all.push_back(std::move(it));
    return all;
}

json certificate_json(const std::string& kind, const MultiGraph& g, const PartialOrientation& o,
                      const std::vector<std::pair<PerfectMatching, Bond>>& witnesses,
                      json stats) {
    json wit = json::array();
    for (const auto& [m, b] : witnesses)
        wit.push_back({{"matching", m}, {"bond", {{"side", b.side}, {"edges", b.cut_edges}}}});
    return json{{"schema_version", 1},
                {"kind", kind},
                {"graph", write_graph6(g)},
                {"orientation", orientation_string(g, o)},
                {"witnesses", std::move(wit)},
                {"stats", std::move(stats)}};
}

struct CertificateSink {
    std::ofstream file;
    std::ostream* out = nullptr;
    void open(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            out = &fallback;
        } else {
            file.open(path);
            out = &file;
        }
    }
    void emit(const json& j) { *out << j.dump() << "\n"; }
};

// ---------------------------------------------------------------------------
// analyze

int run_analyze(const std::vector<std::string>& files, const std::string& format, int heavy_max_n,
                std::ostream& out, std::ostream& err) {
    int parse_errors = 0;
    auto items = load_all(files, format, err, parse_errors);
    for (const auto& it : items) {
        out << it.label << ": n=" << it.g.n << " m=" << it.g.m();
        bool cubic = is_cubic(it.g);
        bool connected = is_connected(it.g);
        bool heavy = it.g.n <= heavy_max_n;
        out << " cubic=" << (cubic ? "yes" : "no")
            << " bipartite=" << (is_bipartite(it.g) ? "yes" : "no");
        if (it.g.m() > 0 && connected) out << " girth=" << girth(it.g);
        if (connected)
            out << " vertex_connectivity=" << vertex_connectivity(it.g)
                << " edge_connectivity=" << edge_connectivity(it.g);
        else
            out << " connected=no";
        if (cubic && connected && it.g.is_simple() && heavy) {
            try {
                int cc = cyclic_connectivity(it.g);
                out << " cyclic_connectivity="
                    << (cc == kInfinity ? std::string("inf") : std::to_string(cc));
            } catch (const std::exception&) {
                out << " cyclic_connectivity=?";
            }
        }
        if (cubic && connected && heavy) {
            out << " perfect_matchings=" << count_perfect_matchings(it.g);
            auto mc = min_cut_in_perfect_matching(it.g);
            out << " min_cut_in_perfect_matching="
                << (mc.value == kInfinity ? std::string("inf") : std::to_string(mc.value));
        }
        if (heavy) out << " hamiltonian=" << (is_hamiltonian(it.g) ? "yes" : "no");
        if (!heavy)
            out << " (matching/cycle invariants skipped: n above --heavy-max-n " << heavy_max_n
                << ")";
        if (it.oriented) {
            int dg = digirth(it.g, it.o);
            out << " digirth=" << (dg == kInfinity ? std::string("inf") : std::to_string(dg))
                << " strongly_connected="
                << (it.o.is_full() && is_strongly_connected(it.g, it.o) ? "yes" : "no");
        }
        out << "\n";
    }
    return parse_errors ? kExitUsage : kExitClean;
}

// ---------------------------------------------------------------------------
// verify

struct ConjectureClass {
    bool bipartite = false;
    bool planar = false;    // taken on trust unless an embedding came along
    bool directed = false;  // direct checker on supplied orientations
    bool edge_connect_only = false;  // 3-edge-connected instead of 3-connected
};

std::optional<ConjectureClass> conjecture_class(const std::string& name) {
    if (name == "tait") return ConjectureClass{false, true, false, false};
    if (name == "barnette") return ConjectureClass{true, true, false, false};
    if (name == "tutte") return ConjectureClass{true, false, false, false};
    if (name == "nl-prime") return ConjectureClass{false, true, false, false};
    if (name == "hochstaettler-prime") return ConjectureClass{false, false, false, true};
    if (name == "nl") return ConjectureClass{false, true, true, false};
    if (name == "kv") return ConjectureClass{true, false, true, false};
    if (name == "hochstaettler") return ConjectureClass{false, false, true, true};
    return std::nullopt;
}

bool is_hamiltonicity_mode(const std::string& name) {
    return name == "tait" || name == "barnette" || name == "tutte";
}

// Repeated triangle contraction preserves Hamiltonicity of cubic hosts;
// stops when no triangle is left or the graph gets too small to shrink.
MultiGraph contract_all_triangles(MultiGraph g) {
    while (g.n > 4) {
        auto tris = find_triangles(g);
        if (tris.empty()) break;
        g = contract_triangle(g, PartialOrientation(g.m()), tris.front()).graph;
    }
    return g;
}

int run_verify(const std::string& mode, const std::vector<std::string>& files,
               const std::string& format, int max_n, bool no_reduction,
               const std::string& cert_path, std::ostream& out, std::ostream& err) {
    auto cls = conjecture_class(mode);
    if (!cls) {
        err << "unknown conjecture: " << mode << "\n";
        return kExitUsage;
    }
    int parse_errors = 0;
    auto items = load_all(files, format, err, parse_errors);
    CertificateSink certs;
    certs.open(cert_path, out);

    bool counterexample = false, incomplete = false;
    long long verified = 0, skipped = 0, filtered = 0;
    for (const auto& it : items) {
        const MultiGraph& g = it.g;
        // class checks (planarity is only checkable when an embedding was
        // supplied; otherwise the input census is trusted)
        std::string why;
        if (!is_cubic(g)) why = "not cubic";
        else if (cls->bipartite && !is_bipartite(g)) why = "not bipartite";
        else if (cls->edge_connect_only ? !is_k_edge_connected(g, 3) : !is_three_connected(g))
            why = cls->edge_connect_only ? "not 3-edge-connected" : "not 3-connected";
        else if (cls->planar && it.emb && faces(*it.emb).empty()) why = "embedding invalid";
        else if (cls->directed && !it.oriented) why = "no orientation supplied";
        if (!why.empty()) {
            out << it.label << ": skipped (" << why << ")\n";
            ++skipped;
            continue;
        }
        if (max_n > 0 && g.n > max_n) {
            out << it.label << ": skipped (above --max-n " << max_n << ")\n";
            incomplete = true;
            ++skipped;
            continue;
        }

        if (is_hamiltonicity_mode(mode)) {
            if (mode == "tutte" && !no_reduction && girth(g) < 6) {
                // a smallest counterexample would have girth at least 6
                out << it.label << ": pass (girth filter)\n";
                ++filtered;
                ++verified;
                continue;
            }
            MultiGraph h = g;
            if (mode == "tait" && !no_reduction) h = contract_all_triangles(g);
            if (is_hamiltonian(h)) {
                out << it.label << ": pass (hamiltonian"
                    << (h.n != g.n ? ", after triangle contraction" : "") << ")\n";
                ++verified;
            } else {
                // independent re-check before claiming a counterexample
                if (hamiltonian_cycle_backtracking(g)) {
                    err << it.label << ": internal disagreement between solvers\n";
                    return kExitUsage;
                }
                out << it.label << ": COUNTEREXAMPLE (non-hamiltonian)\n";
                certs.emit(certificate_json("non_hamiltonian", g, PartialOrientation(g.m()), {},
                                            {{"n", g.n}, {"m", g.m()}}));
                counterexample = true;
            }
            continue;
        }

        if (!cls->directed) {
            // primed mode: no orientation of g may force a directed cut into
            // every perfect matching
            SearchProblem p(g);
            auto cert = exists_orientation_all_pm_cut(p);
            if (cert.kind == Certificate::Kind::OrientationFound) {
                auto chk = verify_certificate(cert, p);
                if (!chk.ok) {
                    err << it.label << ": certificate failed re-verification: " << chk.reason
                        << "\n";
                    return kExitUsage;
                }
                out << it.label << ": COUNTEREXAMPLE (orientation forces directed cuts)\n";
                certs.emit(certificate_json(
                    "orientation_found", g, cert.orientation, cert.witnesses,
                    {{"nodes_explored", cert.stats.nodes_explored},
                     {"matchings_considered", cert.stats.matchings_considered}}));
                counterexample = true;
            } else {
                out << it.label << ": pass (no orientation forces directed cuts)\n";
                ++verified;
            }
            continue;
        }

        // direct mode on a supplied orientation: some perfect matching must
        // avoid every directed cut
        std::optional<PerfectMatching> good;
        bool any_matching = false;
        enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
            any_matching = true;
            if (!directed_cut_in_matching(g, it.o, m)) {
                good = m;
                return false;
            }
            return true;
        });
        if (good) {
            out << it.label << ": pass (matching without directed cut)\n";
            ++verified;
        } else {
            Certificate cert;
            cert.kind = Certificate::Kind::OrientationFound;
            cert.orientation = it.o;
            cert.vacuous = !any_matching;
            enumerate_perfect_matchings(g, [&](const PerfectMatching& m) {
                cert.witnesses.push_back({m, *directed_cut_in_matching(g, it.o, m)});
                return true;
            });
            SearchProblem p(g, it.o);
            auto chk = verify_certificate(cert, p);
            if (!chk.ok) {
                err << it.label << ": certificate failed re-verification: " << chk.reason << "\n";
                return kExitUsage;
            }
            out << it.label << ": COUNTEREXAMPLE (every matching has a directed cut)\n";
            certs.emit(certificate_json("orientation_found", g, it.o, cert.witnesses,
                                        {{"vacuous", cert.vacuous}}));
            counterexample = true;
        }
    }
    out << "verify " << mode << ": " << verified << " passed, " << skipped << " skipped, "
        << filtered << " by reduction filter, "
        << (counterexample ? "counterexamples found" : "no counterexample") << "\n";
    if (parse_errors) return kExitUsage;
    if (counterexample) return kExitCounterexample;
    if (incomplete) return kExitIncomplete;
    return kExitClean;
}

// ---------------------------------------------------------------------------
// search

int run_search(const std::string& mode, const std::vector<std::string>& files,
               const std::string& format, const std::string& fix_path, int edge,
               const std::string& cert_path, std::ostream& out, std::ostream& err) {
    int parse_errors = 0;
    auto items = load_all(files, format, err, parse_errors);
    std::vector<PartialOrientation> fixes;
    if (!fix_path.empty()) {
        auto fitems = load_all({fix_path}, "sidecar", err, parse_errors);
        for (auto& f : fitems) fixes.push_back(f.o);
    }
    CertificateSink certs;
    certs.open(cert_path, out);

    bool found_orientation = false;
    for (size_t i = 0; i < items.size(); ++i) {
        const auto& it = items[i];
        PartialOrientation fixed = it.oriented ? it.o : PartialOrientation(it.g.m());
        if (i < fixes.size()) fixed = fixes[i];

        Certificate cert;
        json extra;
        if (mode == "a-arc") {
            int hit = -1;
            for (int e = 0; e < it.g.m(); ++e) {
                if (edge >= 0 && e != edge) continue;
                auto c = can_edge_be_a_arc(it.g, e, fixed);
                if (c.kind == Certificate::Kind::OrientationFound) {
                    cert = std::move(c);
                    hit = e;
                    break;
                }
                cert = std::move(c);
            }
            extra["a_arc_edge"] = hit;
            if (hit >= 0) {
                SearchProblem p(it.g, fixed);
                p.restrict_to_edge = hit;
                if (p.fixed.dir[hit] == EdgeDir::Undirected) p.fixed.dir[hit] = EdgeDir::Forward;
                auto chk = verify_certificate(cert, p);
                if (!chk.ok) {
                    err << it.label << ": certificate failed re-verification: " << chk.reason
                        << "\n";
                    return kExitUsage;
                }
            }
            out << it.label << ": " << (hit >= 0 ? "a-arc found (edge " + std::to_string(hit) + ")"
                                                 : "refuted (no edge can be an a-arc)")
                << "\n";
        } else {  // all-pm-cut
            SearchProblem p(it.g, fixed);
            cert = exists_orientation_all_pm_cut(p);
            if (cert.kind == Certificate::Kind::OrientationFound) {
                auto chk = verify_certificate(cert, p);
                if (!chk.ok) {
                    err << it.label << ": certificate failed re-verification: " << chk.reason
                        << "\n";
                    return kExitUsage;
                }
                found_orientation = true;
            }
            out << it.label << ": "
                << (cert.kind == Certificate::Kind::OrientationFound
                        ? "orientation found (every matching has a directed cut)"
                        : "refuted (some matching always avoids directed cuts)")
                << "\n";
        }
        extra["nodes_explored"] = cert.stats.nodes_explored;
        extra["matchings_considered"] = cert.stats.matchings_considered;
        certs.emit(certificate_json(
            cert.kind == Certificate::Kind::OrientationFound ? "orientation_found" : "refuted",
            it.g, cert.orientation.dir.empty() ? PartialOrientation(it.g.m()) : cert.orientation,
            cert.witnesses, std::move(extra)));
    }
    if (parse_errors) return kExitUsage;
    return found_orientation ? kExitCounterexample : kExitClean;
}

// ---------------------------------------------------------------------------
// construct

int run_construct(const std::vector<std::string>& ops, const std::string& input,
                  const std::string& format, const std::string& split_edge,
                  const std::string& wiring_spec, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    int parse_errors = 0;
    auto items = load_all({input}, format, err, parse_errors);
    if (parse_errors || items.size() != 1) {
        err << "construct: need exactly one parseable input graph\n";
        return kExitUsage;
    }
    MultiGraph g = items[0].g;
    PartialOrientation o = items[0].o;
    std::optional<PlaneEmbedding> emb = items[0].emb;
    std::optional<SplitGadget> gadget;

    for (const auto& op : ops) {
        try {
            if (op == "split") {
                int u, v;
                char comma;
                std::istringstream spec(split_edge);
                if (!(spec >> u >> comma >> v)) {
                    err << "construct split: --split-edge u,v required\n";
                    return kExitUsage;
                }
                gadget = split_vertex(g, o, u, v);
                g = gadget->graph;
                o = gadget->orientation;
            } else if (op == "tilde") {
                if (!gadget) {
                    err << "construct tilde: run split first\n";
                    return kExitUsage;
                }
                auto t = tilde_construction(*gadget);
                g = t.graph;
                o = t.orientation;
            } else if (op == "hat") {
                if (!gadget) {
                    err << "construct hat: run split first\n";
                    return kExitUsage;
                }
                HatWiring w;
                if (wiring_spec.empty()) {
                    auto found = reconstruct_hat_wiring(*gadget);
                    if (!found) {
                        err << "construct hat: no valid wiring exists for this gadget\n";
                        return kExitIncomplete;
                    }
                    w = *found;
                } else {
                    std::istringstream spec(wiring_spec);
                    std::string tok;
                    while (std::getline(spec, tok, ',')) {
                        auto dash = tok.find('-');
                        w.edges.push_back(
                            {std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
                    }
                    w.dir.assign(w.edges.size(), EdgeDir::Undirected);
                }
                auto h = hat_construction(*gadget, w);
                g = h.graph;
                o = h.orientation;
            } else if (op == "orient") {
                auto ext = orient_extremal_sinks_sources(g, o);
                o = ext.orientation;
                out << "# orient: " << ext.internal_count << " internal vertices\n";
            } else if (op == "dplus") {
                auto d = dplus(g, o);
                g = d.graph;
                o = d.orientation;
            } else if (op == "expand") {
                auto d = cubic_expansion(g, o);
                g = d.graph;
                o = d.orientation;
            } else if (op == "contract-triangle") {
                auto tris = find_triangles(g);
                if (tris.empty()) {
                    err << "construct contract-triangle: no triangle in host\n";
                    return kExitUsage;
                }
                auto d = contract_triangle(g, o, tris.front());
                g = d.graph;
                o = d.orientation;
            } else if (op == "c4-reduce") {
                auto cs = reducible_c4s(g);
                if (cs.empty()) {
                    err << "construct c4-reduce: no reducible 4-cycle\n";
                    return kExitUsage;
                }
                auto r = c4_reduction(g, cs.front());
                out << "# c4-reduce second output: " << write_graph6(r.g_vw.graph) << "\n";
                g = r.g_uv.graph;
                o = PartialOrientation(g.m());
            } else if (op == "dual") {
                if (!emb) {
                    err << "construct dual: input must be planar_code\n";
                    return kExitUsage;
                }
                auto dp = directed_dual(*emb, o.dir.size() == size_t(emb->graph.m())
                                                  ? o
                                                  : PartialOrientation(emb->graph.m()));
                out << "# dual: " << dp.dual.graph.n << " faces became vertices\n";
                g = dp.dual.graph;
                o = dp.dual_orientation;
                emb = dp.dual;
            } else {
                err << "construct: unknown op " << op << "\n";
                return kExitUsage;
            }
            if (op != "dual") emb.reset();  // embeddings do not survive rebuilds
        } catch (const std::exception& e) {
            err << "construct " << op << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }

    std::string result = write_sidecar(g, o);
    if (out_path.empty()) {
        out << result << "\n";
    } else {
        std::ofstream f(out_path);
        f << result << "\n";
        out << "# wrote " << out_path << " (n=" << g.n << " m=" << g.m() << ")\n";
    }
    return kExitClean;
}

// ---------------------------------------------------------------------------
// batch

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_batch(const std::string& manifest, int jobs, std::ostream& out, std::ostream& err) {
    std::ifstream in(manifest);
    if (!in) {
        err << manifest << ": cannot open\n";
        return kExitUsage;
    }
    std::vector<std::vector<std::string>> tasks;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> args;
        std::string tok;
        while (ls >> tok) args.push_back(tok);
        if (!args.empty()) tasks.push_back(std::move(args));
    }

    std::vector<std::string> outputs(tasks.size());
    std::vector<std::string> errors(tasks.size());
    std::vector<int> codes(tasks.size(), 0);
    std::mutex next_mutex;
    size_t next = 0;
    auto worker = [&]() {
        while (true) {
            size_t i;
            {
                std::lock_guard<std::mutex> lk(next_mutex);
                if (next >= tasks.size()) return;
                i = next++;
            }
            std::ostringstream o, e;
            try {
                codes[i] = run_cli(tasks[i], o, e);
            } catch (const std::exception& ex) {
                e << ex.what() << "\n";
                codes[i] = kExitUsage;
            }
            outputs[i] = o.str();
            errors[i] = e.str();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int overall = kExitClean;
    for (size_t i = 0; i < tasks.size(); ++i) {
        out << outputs[i];
        err << errors[i];
        overall = std::max(overall, codes[i]);
    }
    return overall;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cubic partially directed graph toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "auto";
    std::string cert_path, conjecture, mode, fix_path, input, split_edge, wiring, out_path,
        manifest;
    int max_n = 0, edge = -1;
    bool no_reduction = false;
    int jobs = 1;
    if (const char* env = std::getenv("PMCUTS_JOBS")) jobs = std::max(1, std::atoi(env));

    int heavy_max_n = 50;
    auto* analyze = app.add_subcommand("analyze", "per-graph structural report");
    analyze->add_option("files", files, "input files (graph6/sparse6/digraph6/planar_code/sidecar)")
        ->required();
    analyze->add_option("--format", format,
                        "force input format: graph6|sparse6|digraph6|planar_code|sidecar");
    analyze->add_option("--heavy-max-n", heavy_max_n,
                        "skip expensive invariants above this vertex count (default 50)");

    auto* verify = app.add_subcommand("verify", "conjecture verification campaign");
    verify
        ->add_option("conjecture", conjecture,
                     "tait|barnette|tutte|nl|nl-prime|kv|hochstaettler|hochstaettler-prime")
        ->required();
    verify->add_option("files", files, "input census files")->required();
    verify->add_option("--format", format, "force input format");
    verify->add_option("--max-n", max_n, "skip graphs larger than this (0 = no bound)");
    verify->add_flag("--no-reduction", no_reduction,
                     "disable Hamiltonicity-preserving pre-reductions");
    verify->add_option("--certificates", cert_path, "write counterexample certificates (JSON)");

    auto* search = app.add_subcommand("search", "orientation searches with certificates");
    search->add_option("mode", mode, "a-arc: per-edge forcing search; all-pm-cut: whole host")
        ->check(CLI::IsMember({"a-arc", "all-pm-cut"}))
        ->required();
    search->add_option("files", files, "input files")->required();
    search->add_option("--format", format, "force input format");
    search->add_option("--fix-orientation", fix_path, "sidecar file of pre-directed edges");
    search->add_option("--edge", edge, "restrict the a-arc search to one edge id");
    search->add_option("--certificates", cert_path, "write certificates (JSON)");

    std::vector<std::string> ops;
    auto* construct = app.add_subcommand("construct", "gadget construction pipelines");
    construct
        ->add_option("ops", ops,
                     "pipeline steps: split tilde hat orient dplus expand contract-triangle "
                     "c4-reduce dual")
        ->required();
    construct->add_option("--input,-i", input, "input file")->required();
    construct->add_option("--format", format, "force input format");
    construct->add_option("--split-edge", split_edge, "arc u,v for the split step");
    construct->add_option("--wiring", wiring, "pendant wiring for the hat step, e.g. 0-3,0-4,...");
    construct->add_option("--output,-o", out_path, "output file (default stdout)");

    auto* batch = app.add_subcommand("batch", "run a manifest of commands in parallel");
    batch->add_option("manifest", manifest, "file with one toolkit command line per row")
        ->required();
    batch->add_option("--jobs,-j", jobs, "worker count (default from PMCUTS_JOBS, else 1)");

    std::string cmdline;
    for (const auto& a : args) {
        cmdline += a;
        cmdline += ' ';
    }
    try {
        app.parse(cmdline, false);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitClean;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    if (*analyze) return run_analyze(files, format, heavy_max_n, out, err);
    if (*verify)
        return run_verify(conjecture, files, format, max_n, no_reduction, cert_path, out, err);
    if (*search) return run_search(mode, files, format, fix_path, edge, cert_path, out, err);
    if (*construct)
        return run_construct(ops, input, format, split_edge, wiring, out_path, out, err);
    if (*batch) return run_batch(manifest, jobs, out, err);
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, std::cout, std::cerr);
}
