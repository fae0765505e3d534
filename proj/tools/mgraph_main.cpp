#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mgraph/bounds.hpp"
#include "mgraph/catalog.hpp"
#include "mgraph/drawing.hpp"
#include "mgraph/embedder.hpp"
#include "mgraph/io.hpp"
#include "mgraph/morphisms.hpp"
#include "mgraph/rotation.hpp"

namespace {

using namespace mgraph;

struct Options {
    std::int64_t budget = 10'000'000;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::string out;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << text;
    } else {
        std::ofstream out(opt.out);
        if (!out) throw error("cannot write " + opt.out);
        out << text;
    }
}

GraphFile load_graph(const std::string& path) {
    std::istringstream in(slurp(path));
    return read_graph_file(in);
}

nlohmann::ordered_json bounds_json(const BoundsReport& b) {
    nlohmann::ordered_json j;
    j["treewidth"] = {{"lower", b.treewidth.lower},
                      {"upper", b.treewidth.upper},
                      {"exact", b.treewidth.exact}};
    if (b.best_witness) {
        j["gonality_upper"] = b.best_witness->degree;
        j["witness"] = b.best_witness->description;
    }
    j["gonality_lower"] = b.gonality_lower;
    j["lower_source"] = b.lower_source;
    j["lambda1"] = b.spectrum.size() > 1 ? b.spectrum[1] : 0.0;
    j["spectral_bound"] = b.spectral_bound;
    return j;
}

int run_analyze(const Options& opt, const std::string& path) {
    GraphFile gf = load_graph(path);
    const MultiGraph& g = gf.graph;
    GenusReport gr = betti_genus(g);
    auto bridges = find_bridges(g);
    DetectionResult hy, bi;
    std::string note;
    if (gr.component_count == 1) {
        MultiGraph core = delete_loops(g);
        ContractionResult cb = contract_bridges(core);
        hy = detect_hyperelliptic(cb.graph, opt.budget);
        bi = detect_bielliptic(cb.graph, opt.budget);
        if (cb.graph.vertex_count() != g.vertex_count()) note = "detection ran on the bridge-contracted core";
    }
    BoundsReport bounds = bounds_report(g, {}, opt.budget);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["betti"] = gr.betti;
        j["is_tree"] = gr.is_tree;
        j["components"] = gr.component_count;
        j["bridges"] = std::vector<int>(bridges.begin(), bridges.end());
        j["hyperelliptic"] = hy.verdict;
        j["bielliptic"] = bi.verdict;
        j["search_truncated"] = hy.truncated || bi.truncated;
        j["planar"] = is_planar(g);
        j["bounds"] = bounds_json(bounds);
        if (!note.empty()) j["note"] = note;
        emit(opt, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", betti "
           << gr.betti << (gr.is_tree ? " (tree)" : "") << "\n";
        os << "bridges:";
        for (int b : bridges) os << " " << b;
        os << "\nhyperelliptic: " << (hy.verdict ? "yes" : "no")
           << ", bielliptic: " << (bi.verdict ? "yes" : "no")
           << ", planar: " << (is_planar(g) ? "yes" : "no") << "\n";
        os << "treewidth: [" << bounds.treewidth.lower << ", " << bounds.treewidth.upper << "]"
           << (bounds.treewidth.exact ? " exact" : " budget-limited") << "\n";
        if (bounds.best_witness)
            os << "gonality upper: " << bounds.best_witness->degree << " ("
               << bounds.best_witness->description << ")\n";
        os << "gonality lower: " << bounds.gonality_lower << " (" << bounds.lower_source << ")\n";
        os << "lambda1: " << (bounds.spectrum.size() > 1 ? bounds.spectrum[1] : 0.0)
           << ", spectral bound: " << bounds.spectral_bound << "\n";
        if (!note.empty()) os << "note: " << note << "\n";
        emit(opt, os.str());
    }
    return 0;
}

int run_embed(const Options& opt, const std::string& path, const std::string& svg_path) {
    GraphFile gf = load_graph(path);
    MultiGraph g = delete_loops(gf.graph);
    if (!is_connected(g)) throw error("embed requires a connected graph");
    ContractionResult cb = contract_bridges(g);
    g = cb.graph;

    Drawing d;
    if (gf.involution && cb.graph.vertex_count() == gf.graph.vertex_count() &&
        gf.graph.edge_count() == g.edge_count()) {
        const Involution& inv = *gf.involution;
        QuotientResult q = quotient(inv);
        int qb = betti_genus(q.quotient).betti;
        if (qb == 0)
            d = embed_hyperelliptic(g, inv);
        else if (qb == 1)
            d = embed_bielliptic(g, inv);
        else
            throw error("supplied involution has quotient betti " + std::to_string(qb));
    } else {
        DetectionResult hy = detect_hyperelliptic(g, opt.budget);
        if (hy.verdict) {
            d = embed_hyperelliptic(g, *hy.witness);
        } else {
            DetectionResult bi = detect_bielliptic(g, opt.budget);
            if (!bi.verdict) {
                if (hy.truncated || bi.truncated) throw budget_exceeded("witness search truncated");
                throw error("graph is neither hyperelliptic nor bielliptic");
            }
            d = embed_bielliptic(g, *bi.witness);
        }
    }
    VerifyReport rep = verify_drawing(d);
    emit(opt, drawing_to_json(d));
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        svg << drawing_to_svg(d);
    }
    std::cerr << "verified: surface="
              << (d.surface == Surface::Plane ? "plane" : "torus-square")
              << " genus=" << rep.embedding.orientable_genus
              << " faces=" << rep.embedding.face_count
              << " certificates=" << d.certificates.size() << "\n";
    return 0;
}

int run_quotient(const Options& opt, const std::string& path) {
    GraphFile gf = load_graph(path);
    if (!gf.involution) throw error("quotient requires an involution in the graph file");
    QuotientResult q = quotient(*gf.involution);
    std::ostringstream os;
    write_graph(os, q.quotient);
    os << morphism_to_json(q.projection) << "\n";
    emit(opt, os.str());
    return 0;
}

int run_genus(const Options& opt, const std::string& path) {
    GraphFile gf = load_graph(path);
    int genus = minimum_genus(gf.graph, opt.budget);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["genus"] = genus;
        j["rotation_systems"] = rotation_system_count(gf.graph);
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, "genus " + std::to_string(genus) + "\n");
    }
    return 0;
}

int run_gen(const Options& opt, const std::string& family, const std::vector<int>& params) {
    CatalogEntry entry = catalog(family, params);
    std::ostringstream os;
    write_graph(os, entry.graph);
    emit(opt, os.str());
    return 0;
}

int run_dualgraph(const Options& opt, const std::string& path) {
    std::istringstream in(slurp(path));
    HeckePattern h = read_hecke(in);
    MultiGraph g = reduced_dual_graph(h);
    std::ostringstream os;
    write_graph(os, g);
    emit(opt, os.str());
    std::cerr << "planar: " << (is_planar(g) ? "yes" : "no") << "\n";
    return 0;
}

int run_verify(const Options& opt, const std::string& path) {
    Drawing d = drawing_from_json(slurp(path));
    VerifyReport rep = verify_drawing(d);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["ok"] = true;
        j["genus"] = rep.embedding.orientable_genus;
        j["faces"] = rep.embedding.face_count;
        j["outer_face"] = rep.outer_face;
        emit(opt, j.dump(2) + "\n");
    } else {
        emit(opt, "ok: genus " + std::to_string(rep.embedding.orientable_genus) + ", " +
                      std::to_string(rep.embedding.face_count) + " faces\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multigraph involutions, embeddings, and gonality bounds"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--budget", opt.budget, "search budget for exhaustive passes");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out, "output path (default stdout)");

    std::string path = "-", svg_path, family;
    std::vector<int> params;

    auto* analyze = app.add_subcommand("analyze", "betti, bridges, verdicts, bounds table");
    analyze->add_option("graph", path, "graph file or - for stdin");
    auto* embed = app.add_subcommand("embed", "constructive embedding to drawing JSON");
    embed->add_option("graph", path, "graph file or - for stdin");
    embed->add_option("--svg", svg_path, "also write an SVG rendering");
    auto* quot = app.add_subcommand("quotient", "quotient by the involution in the file");
    quot->add_option("graph", path, "graph+involution file");
    auto* genus = app.add_subcommand("genus", "exact minimum genus by rotation-system search");
    genus->add_option("graph", path, "graph file or - for stdin");
    auto* gen = app.add_subcommand("gen", "emit a catalog graph");
    gen->add_option("family", family, "family name")->required();
    gen->add_option("params", params, "integer parameters");
    auto* dual = app.add_subcommand("dualgraph", "reduced dual graph of a hecke fixture");
    dual->add_option("matrix", path, "matrix fixture file");
    auto* verify = app.add_subcommand("verify", "validate a drawing JSON file");
    verify->add_option("drawing", path, "drawing JSON file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(opt, path);
        if (embed->parsed()) return run_embed(opt, path, svg_path);
        if (quot->parsed()) return run_quotient(opt, path);
        if (genus->parsed()) return run_genus(opt, path);
        if (gen->parsed()) return run_gen(opt, family, params);
        if (dual->parsed()) return run_dualgraph(opt, path);
        if (verify->parsed()) return run_verify(opt, path);
    } catch (const mgraph::budget_exceeded& e) {
        if (opt.format == "json")
            std::cout << nlohmann::json{{"error", e.what()}, {"budget_exceeded", true}}.dump()
                      << "\n";
        else
            std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const mgraph::error& e) {
        if (opt.format == "json")
            std::cout << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
