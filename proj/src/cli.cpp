#include "crossforge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "crossforge/certify.hpp"
#include "crossforge/cr.hpp"
#include "crossforge/drawing.hpp"
#include "crossforge/embedding.hpp"
#include "crossforge/onep.hpp"
#include "crossforge/sat.hpp"
#include "crossforge/solvers.hpp"
#include "crossforge/transforms.hpp"

namespace crossforge {

namespace {

// Input problems the user can fix: exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out) throw UsageError("write failed: " + path);
}

// Blue/red split by endpoint kinds, for colouring; -1 where it is unclear.
std::vector<int> colors_from_kinds(const Graph& g) {
    std::vector<int> c(g.num_edges(), -1);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto a = g.vertex(g.edge(e).u).kind, b = g.vertex(g.edge(e).v).kind;
        bool red = a == VertexKind::Red || b == VertexKind::Red;
        bool blue = a == VertexKind::Blue || b == VertexKind::Blue;
        if (red != blue) c[e] = red ? 1 : 0;
    }
    return c;
}

std::string edge_name(const Graph& g, int e) {
    return g.vertex(g.edge(e).u).name + "-" + g.vertex(g.edge(e).v).name;
}

Assignment assignment_or_solve(const CnfInstance& cnf, const std::string& text, bool* found) {
    *found = true;
    if (!text.empty()) return parse_assignment(cnf.n, text);
    auto a = solve_brute_force(cnf);
    if (!a) {
        *found = false;
        return {};
    }
    return *a;
}

struct Options {
    std::string cnf, out, graph, drawing, assignment;
    bool unweighted = false, near_planar = false, three_connected = false;
    bool one_planar = false, anchored = false;
    std::string max = "20";
};

int reduce_cr(const Options& o, std::ostream& out) {
    auto cnf = parse_dimacs(read_file(o.cnf));
    auto inst = build_cr_instance(cnf);
    Graph g;
    std::string meta;
    if (o.three_connected) {
        auto tc = three_connected_instance(inst);
        g = tc.tilde;
        meta = three_connected_meta(tc);
    } else if (o.near_planar) {
        auto np = near_planar_cr_instance(inst);
        g = np.with_extra;
        meta = near_planar_meta(np);
    } else {
        g = inst.G;
        meta = cr_meta(inst);
    }
    if (o.unweighted) {
        try {
            g = expand_unweighted(g);
        } catch (const GraphError& e) {
            throw UsageError(std::string("--unweighted: ") + e.what());
        }
    }
    write_file(o.out, serialize_agr(g));
    write_file(o.out + ".meta", meta);
    out << "vertices " << g.num_vertices() << " edges " << g.num_edges() << " anchors " << g.anchors().size()
        << "\n";
    return kExitOk;
}

int reduce_onep(const Options& o, std::ostream& out) {
    auto cnf = parse_dimacs(read_file(o.cnf));
    Graph g;
    std::string meta;
    if (o.near_planar) {
        auto np = near_planar_1p_instance(cnf);
        g = np.G;
        meta = near_planar_1p_meta(np);
    } else {
        auto inst = build_1p_instance(cnf);
        g = inst.G;
        meta = onep_meta(inst);
    }
    write_file(o.out, serialize_agr(g));
    write_file(o.out + ".meta", meta);
    out << "vertices " << g.num_vertices() << " edges " << g.num_edges() << " anchors " << g.anchors().size()
        << " max_degree " << g.max_degree() << "\n";
    return kExitOk;
}

int certify_cr(const Options& o, std::ostream& out) {
    auto cnf = parse_dimacs(read_file(o.cnf));
    bool found;
    auto a = assignment_or_solve(cnf, o.assignment, &found);
    if (!found) {
        out << "UNSAT\n";
        return kExitFalse;
    }
    if (!evaluate(cnf, a)) {
        out << "assignment does not satisfy the formula\n";
        return kExitFalse;
    }
    auto inst = build_cr_instance(cnf);
    Drawing d = generate_cr_certificate(inst, a);
    auto rep = check_budgets(d, inst);
    write_file(o.out, serialize_adr(d, inst.G));
    out << "assignment " << a.to_string() << "\n" << rep.text();
    return rep.weighted_total == rep.expected_k ? kExitOk : kExitFalse;
}

int certify_onep(const Options& o, std::ostream& out) {
    auto cnf = parse_dimacs(read_file(o.cnf));
    bool found;
    auto a = assignment_or_solve(cnf, o.assignment, &found);
    if (!found) {
        out << "UNSAT\n";
        return kExitFalse;
    }
    if (!evaluate(cnf, a)) {
        out << "assignment does not satisfy the formula\n";
        return kExitFalse;
    }
    auto inst = build_1p_instance(cnf);
    Drawing d = generate_1p_certificate(inst, a);
    auto rep = find_crossings(d, inst.G, &inst.edge_color);
    std::string offender;
    bool one = verify_one_planar(rep, &offender);
    auto an = verify_anchored(d, inst.G);
    write_file(o.out, serialize_adr(d, inst.G));
    out << "assignment " << a.to_string() << "\n";
    out << "crossings " << rep.unweighted_total << "\n";
    out << "one_planar " << (one ? "yes" : "no (edge " + edge_name(inst.G, std::stoi(offender)) + ")") << "\n";
    out << "anchored " << (an.ok ? "yes" : "no (" + an.reason + ")") << "\n";
    return one && an.ok ? kExitOk : kExitFalse;
}

int verify(const Options& o, std::ostream& out) {
    Graph g = parse_agr(read_file(o.graph));
    std::string text = read_file(o.drawing);
    Drawing d;
    CrossingReport rep;
    try {
        d = parse_adr(text, g);
        rep = find_crossings(d, g);
    } catch (const DrawingError& e) {
        out << "INVALID " << e.what() << "\n";
        return kExitFalse;
    }
    out << "crossings " << rep.unweighted_total << "\n";
    out << "weighted " << rep.weighted_total.get_str() << "\n";
    bool ok = true;
    if (o.one_planar) {
        std::string offender;
        if (verify_one_planar(rep, &offender)) {
            out << "one_planar yes\n";
        } else {
            out << "one_planar no: edge " << edge_name(g, std::stoi(offender)) << " is crossed "
                << rep.participation[std::stoi(offender)] << " times\n";
            ok = false;
        }
    }
    if (o.anchored) {
        auto an = verify_anchored(d, g);
        out << "anchored " << (an.ok ? "yes" : "no: " + an.reason) << "\n";
        ok = ok && an.ok;
    }
    return ok ? kExitOk : kExitFalse;
}

void write_witness(const Options& o, const Planarization& p, std::ostream& out) {
    out << format_crossing_specs(p);
    if (!o.out.empty()) {
        write_file(o.out, serialize_agr(p.derived));
        write_file(o.out + ".crossings", format_crossing_specs(p));
    }
}

int solve_cra(const Options& o, std::ostream& out) {
    Graph g = parse_agr(read_file(o.graph));
    Int bound;
    if (bound.set_str(o.max, 10) != 0 || bound < 0) throw UsageError("--max must be a non-negative integer");
    auto r = solve_anchored_crossing_number(g, bound);
    if (!r.within_bound) {
        out << "EXCEEDS " << bound.get_str() << "\n";
        return kExitFalse;
    }
    out << "CRA " << r.value.get_str() << "\n";
    write_witness(o, *r.witness, out);
    return kExitOk;
}

int solve_onep(const Options& o, std::ostream& out) {
    Graph g = parse_agr(read_file(o.graph));
    auto r = solve_one_planarity(g, true);
    if (!r.one_planar) {
        out << "NOT 1-PLANAR\n";
        return kExitFalse;
    }
    out << "1-PLANAR\n";
    write_witness(o, *r.witness, out);
    return kExitOk;
}

int solve_sat(const Options& o, std::ostream& out) {
    auto cnf = parse_dimacs(read_file(o.cnf));
    auto a = solve_brute_force(cnf);
    if (!a) {
        out << "UNSAT\n";
        return kExitFalse;
    }
    out << "SAT\n" << a->to_string() << "\n";
    return kExitOk;
}

int emit_svg_cmd(const Options& o, std::ostream& out) {
    Graph g = parse_agr(read_file(o.graph));
    Drawing d;
    CrossingReport rep;
    try {
        d = parse_adr(read_file(o.drawing), g);
        rep = find_crossings(d, g);
    } catch (const DrawingError& e) {
        out << "INVALID " << e.what() << "\n";
        return kExitFalse;
    }
    SvgStyle style;
    style.edge_color = colors_from_kinds(g);
    write_file(o.out, emit_svg(d, g, style, &rep));
    out << "crossings " << rep.unweighted_total << "\n";
    return kExitOk;
}

int stats(const Options& o, std::ostream& out) {
    Graph g = parse_agr(read_file(o.graph));
    Int wmax = 0;
    for (const auto& e : g.edges())
        if (e.w > wmax) wmax = e.w;
    bool planar = is_planar(g);
    out << "vertices " << g.num_vertices() << "\n";
    out << "edges " << g.num_edges() << "\n";
    out << "anchors " << g.anchors().size() << "\n";
    out << "total_weight " << g.total_weight().get_str() << "\n";
    out << "max_weight " << wmax.get_str() << "\n";
    out << "unweighted " << (g.unweighted() ? "yes" : "no") << "\n";
    out << "max_degree " << g.max_degree() << "\n";
    out << "connected " << (is_connected(g) ? "yes" : "no") << "\n";
    out << "planar " << (planar ? "yes" : "no") << "\n";
    out << "anchored_planar " << (planar && is_anchored_planar(g) ? "yes" : "no") << "\n";
    out << "three_connected " << (is_three_connected(g) ? "yes" : "no") << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reductions, certificates and exact checks for anchored crossing problems", "crossforge"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, std::ostream&)> action;
    auto bind = [&](CLI::App* sub, std::function<int(const Options&, std::ostream&)> f) {
        sub->callback([&action, f] { action = f; });
    };

    auto* reduce = app.add_subcommand("reduce", "build a reduction instance")->require_subcommand(1);
    auto* rcr = reduce->add_subcommand("cr", "anchored crossing number reduction");
    rcr->add_option("--cnf", o.cnf, "DIMACS formula")->required()->check(CLI::ExistingFile);
    rcr->add_option("--out", o.out, "output .agr")->required();
    rcr->add_flag("--unweighted", o.unweighted, "replace weights by parallel 2-paths");
    rcr->add_flag("--near-planar", o.near_planar, "emit G' + rb");
    rcr->add_flag("--three-connected", o.three_connected, "emit the 3-connected variant");
    bind(rcr, reduce_cr);
    auto* ronep = reduce->add_subcommand("onep", "anchored 1-planarity reduction");
    ronep->add_option("--cnf", o.cnf, "DIMACS formula")->required()->check(CLI::ExistingFile);
    ronep->add_option("--out", o.out, "output .agr")->required();
    ronep->add_flag("--near-planar", o.near_planar, "emit the near-planar wrapper");
    bind(ronep, reduce_onep);

    auto* certify = app.add_subcommand("certify", "draw a satisfiable instance")->require_subcommand(1);
    for (auto [name, fn] : {std::pair{"cr", &certify_cr}, std::pair{"onep", &certify_onep}}) {
        auto* s = certify->add_subcommand(name, std::string(name) == "cr" ? "crossing budget certificate"
                                                                         : "anchored 1-drawing certificate");
        s->add_option("--cnf", o.cnf, "DIMACS formula")->required()->check(CLI::ExistingFile);
        s->add_option("--assignment", o.assignment, "literals, e.g. \"1 -2 3\"");
        s->add_option("--out", o.out, "output .adr")->required();
        bind(s, fn);
    }

    auto* ver = app.add_subcommand("verify", "count crossings of a drawing");
    ver->add_option("--graph", o.graph, ".agr graph")->required()->check(CLI::ExistingFile);
    ver->add_option("--drawing", o.drawing, ".adr drawing")->required()->check(CLI::ExistingFile);
    ver->add_flag("--one-planar", o.one_planar, "require every edge crossed at most once");
    ver->add_flag("--anchored", o.anchored, "require a valid anchored drawing");
    bind(ver, verify);

    auto* solve = app.add_subcommand("solve", "exact oracles at toy scale")->require_subcommand(1);
    auto* scra = solve->add_subcommand("cra", "anchored crossing number");
    scra->add_option("--graph", o.graph, ".agr graph")->required()->check(CLI::ExistingFile);
    scra->add_option("--max", o.max, "weighted bound (default 20)");
    scra->add_option("--out", o.out, "write the planarization as .agr");
    bind(scra, solve_cra);
    auto* sonep = solve->add_subcommand("onep", "anchored 1-planarity");
    sonep->add_option("--graph", o.graph, ".agr graph")->required()->check(CLI::ExistingFile);
    sonep->add_option("--out", o.out, "write the planarization as .agr");
    bind(sonep, solve_onep);
    auto* ssat = solve->add_subcommand("sat", "brute-force SAT");
    ssat->add_option("--cnf", o.cnf, "DIMACS formula")->required()->check(CLI::ExistingFile);
    bind(ssat, solve_sat);

    auto* emit = app.add_subcommand("emit", "render output")->require_subcommand(1);
    auto* svg = emit->add_subcommand("svg", "SVG of a drawing");
    svg->add_option("--graph", o.graph, ".agr graph")->required()->check(CLI::ExistingFile);
    svg->add_option("--drawing", o.drawing, ".adr drawing")->required()->check(CLI::ExistingFile);
    svg->add_option("--out", o.out, "output .svg")->required();
    bind(svg, emit_svg_cmd);

    auto* st = app.add_subcommand("stats", "graph summary");
    st->add_option("--graph", o.graph, ".agr graph")->required()->check(CLI::ExistingFile);
    bind(st, stats);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action) {
        err << "error: no command\n";
        return kExitUsage;
    }
    try {
        return action(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DrawingError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace crossforge
