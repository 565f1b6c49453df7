#include <gtest/gtest.h>

#include <map>
#include <random>

#include "crossforge/certify.hpp"

using namespace crossforge;

namespace {

const char* kFigureFormula = "p cnf 4 4\n-1 -3 4 0\n-2 -4 0\n2 -3 0\n1 2 0\n";

CnfInstance random_cnf(std::mt19937& rng, int n, int m) {
    std::vector<std::vector<int>> cl;
    for (int j = 0; j < m; ++j) {
        std::vector<int> c;
        for (int i = 1; i <= n; ++i)
            if (rng() % 2) c.push_back(rng() % 2 ? i : -i);
        if (c.empty()) c.push_back(rng() % 2 ? 1 + static_cast<int>(rng() % n) : -1 - static_cast<int>(rng() % n));
        cl.push_back(c);
    }
    return make_cnf(n, cl);
}

std::vector<Assignment> all_assignments(int n) {
    std::vector<Assignment> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        Assignment a;
        a.value.assign(n + 1, false);
        for (int i = 1; i <= n; ++i) a.value[i] = (mask >> (i - 1)) & 1;
        out.push_back(a);
    }
    return out;
}

}  // namespace

TEST(CrCertificate, UnitClause) {
    auto inst = build_cr_instance(parse_dimacs("p cnf 1 1\n1 0\n"));
    auto d = generate_cr_certificate(inst, Assignment::from_literals(1, {1}));
    auto chk = verify_anchored(d, inst.G);
    EXPECT_TRUE(chk.ok) << chk.reason;
    auto rep = find_crossings(d, inst.G, &inst.edge_color);
    EXPECT_EQ(rep.weighted_total, 404071);
    EXPECT_EQ(rep.unweighted_by_class[ColorClass::BlueBlue], 0);
    EXPECT_EQ(rep.unweighted_by_class[ColorClass::RedRed], 0);
    auto br = check_budgets(d, inst);
    EXPECT_TRUE(br.ok()) << br.failure();
    ASSERT_EQ(br.paths.size(), 3u);
    EXPECT_EQ(br.paths[0].name, "V_1");
    EXPECT_EQ(br.paths[0].weighted, 216000);
    EXPECT_EQ(br.paths[0].unweighted, 8);
    EXPECT_EQ(br.paths[1].name, "H_1");
    EXPECT_EQ(br.paths[1].weighted, 107071);
    EXPECT_EQ(br.paths[1].unweighted, 4);
    EXPECT_EQ(br.paths[2].name, "H_enf");
    EXPECT_EQ(br.paths[2].weighted, 81000);
    EXPECT_EQ(br.paths[2].unweighted, 3);
    EXPECT_EQ(br.unweighted_total, 15);
}

TEST(CrCertificate, FigureFormula) {
    auto inst = build_cr_instance(parse_dimacs(kFigureFormula));
    auto d = generate_cr_certificate(inst, Assignment::from_literals(4, {1, 2, -3, -4}));
    EXPECT_TRUE(verify_anchored(d, inst.G).ok);
    auto br = check_budgets(d, inst);
    EXPECT_TRUE(br.ok()) << br.failure();
    EXPECT_EQ(br.unweighted_total, 6 * 16 + 6 * 4 + 2 * 4 + 1);
    EXPECT_EQ(br.weighted_total, inst.params.k);
}

TEST(CrCertificate, RejectsUnsatisfyingAssignment) {
    auto inst = build_cr_instance(parse_dimacs("p cnf 1 1\n1 0\n"));
    EXPECT_THROW(generate_cr_certificate(inst, Assignment::from_literals(1, {-1})), std::invalid_argument);
}

TEST(CrCertificate, EverySatisfyingAssignmentMeetsBudgets) {
    std::mt19937 rng(23);
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        auto cnf = random_cnf(rng, 1 + it % 3, 1 + (it / 3) % 3);
        auto inst = build_cr_instance(cnf);
        for (const auto& a : all_assignments(cnf.n)) {
            if (!evaluate(cnf, a)) continue;
            auto d = generate_cr_certificate(inst, a);
            auto chk = verify_anchored(d, inst.G);
            ASSERT_TRUE(chk.ok) << chk.reason;
            auto br = check_budgets(d, inst);
            ASSERT_TRUE(br.ok()) << to_dimacs(cnf) << a.to_string() << '\n' << br.text();
            ++checked;
        }
    }
    EXPECT_GT(checked, 40);
}

TEST(CrCertificate, AnyTrueLiteralCanCarryTheRowChange) {
    auto cnf = parse_dimacs("p cnf 3 2\n1 2 -3 0\n-1 2 0\n");
    auto inst = build_cr_instance(cnf);
    auto a = Assignment::from_literals(3, {1, 2, -3});
    for (int t1 : {1, 2, 3}) {
        CrLayout l{a.value, {0, t1, 2}};
        auto br = check_budgets(layout_cr_drawing(inst, l), inst);
        EXPECT_TRUE(br.ok()) << t1 << ' ' << br.failure();
    }
}

TEST(CrCertificate, MirrorKeepsEveryCount) {
    auto inst = build_cr_instance(parse_dimacs(kFigureFormula));
    auto d = generate_cr_certificate(inst, Assignment::from_literals(4, {1, 2, -3, -4}));
    auto md = mirror_drawing(d, Rat(2 * inst.params.n + 2));
    auto chk = verify_anchored(md, inst.G);
    EXPECT_TRUE(chk.ok) << chk.reason;
    auto b1 = check_budgets(d, inst), b2 = check_budgets(md, inst);
    EXPECT_EQ(b1.text(), b2.text());
}

TEST(CrCertificate, RowChangeOnPlainEdgeCostsWMinusOne) {
    auto inst = build_cr_instance(parse_dimacs("p cnf 1 1\n1 0\n"));
    CrLayout l{{false, false}, {0, 1}};
    auto br = check_budgets(layout_cr_drawing(inst, l), inst);
    EXPECT_FALSE(br.ok());
    EXPECT_TRUE(br.paths[0].ok());
    EXPECT_EQ(br.paths[1].delta(), inst.params.w - 1);
    EXPECT_EQ(br.failure().rfind("H_1", 0), 0u) << br.failure();
}

TEST(CrCertificate, RedEdgesCrossBlueEdgesAtMostOnce) {
    auto inst = build_cr_instance(parse_dimacs(kFigureFormula));
    auto d = generate_cr_certificate(inst, Assignment::from_literals(4, {1, 2, -3, -4}));
    auto rep = find_crossings(d, inst.G, &inst.edge_color);
    std::map<std::pair<int, int>, int> seen;
    for (const auto& c : rep.crossings) EXPECT_EQ(++seen[std::make_pair(c.e1, c.e2)], 1);
}

TEST(CrCertificate, SvgMarksEveryCrossing) {
    auto inst = build_cr_instance(parse_dimacs("p cnf 1 1\n1 0\n"));
    auto d = generate_cr_certificate(inst, Assignment::from_literals(1, {1}));
    auto rep = find_crossings(d, inst.G, &inst.edge_color);
    SvgStyle st;
    st.edge_color = inst.edge_color;
    auto svg = emit_svg(d, inst.G, st, &rep);
    size_t count = 0;
    for (size_t p = svg.find("class=\"crossing\""); p != std::string::npos; p = svg.find("class=\"crossing\"", p + 1))
        ++count;
    EXPECT_EQ(count, 15u);
}

TEST(NearPlanarExtension, FloorRecoversK) {
    std::mt19937 rng(29);
    std::vector<CnfInstance> cnfs{parse_dimacs("p cnf 1 1\n1 0\n")};
    for (int it = 0; it < 8; ++it) cnfs.push_back(random_cnf(rng, 1 + it % 2, 1 + (it / 2) % 2));
    for (const auto& cnf : cnfs) {
        auto a = solve_brute_force(cnf);
        if (!a) continue;
        auto inst = build_cr_instance(cnf);
        auto np = near_planar_cr_instance(inst);
        auto d = extend_to_near_planar(generate_cr_certificate(inst, *a), np);
        auto rep = find_crossings(d, np.with_extra);
        const Int lam2 = np.params.lambda * np.params.lambda;
        Int q = rep.weighted_total / lam2;
        EXPECT_EQ(q, inst.params.k);
        EXPECT_LE(rep.weighted_total, lam2 * inst.params.k + np.params.lambda * np.params.W);
        for (int e : np.cycle_edges) EXPECT_EQ(rep.participation[e], 0);
        Int rb = 0;
        for (const auto& c : rep.crossings)
            if (c.e1 == np.extra_edge || c.e2 == np.extra_edge)
                rb += np.with_extra.edge(c.e1).w * np.with_extra.edge(c.e2).w;
        EXPECT_LE(rb, np.params.lambda * np.params.W);
    }
}
