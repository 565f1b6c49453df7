#include <gtest/gtest.h>

#include <random>

#include "crossforge/sat.hpp"

using namespace crossforge;

namespace {

const char* kFigureFormula =
    "c four variables, four clauses\n"
    "p cnf 4 4\n"
    "-1 -3 4 0\n"
    "-2 -4 0\n"
    "2 -3 0\n"
    "1 2 0\n";

// Independent enumeration: x_n varies slowest, collects every model.
std::vector<std::vector<bool>> all_models(const CnfInstance& cnf) {
    std::vector<std::vector<bool>> out;
    for (unsigned x = 0; x < (1u << cnf.n); ++x) {
        std::vector<bool> v(cnf.n + 1);
        for (int i = 1; i <= cnf.n; ++i) v[i] = (x >> (i - 1)) & 1;
        bool all = true;
        for (const auto& c : cnf.clauses) {
            bool any = false;
            for (int lit : c) any = any || (v[std::abs(lit)] == (lit > 0));
            all = all && any;
        }
        if (all) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST(Dimacs, ParsesUnitClause) {
    auto cnf = parse_dimacs("p cnf 1 1\n1 0\n");
    EXPECT_EQ(cnf.n, 1);
    ASSERT_EQ(cnf.m(), 1);
    EXPECT_EQ(cnf.clauses[0], std::vector<int>{1});
}

TEST(Dimacs, FigureFormula) {
    auto cnf = parse_dimacs(kFigureFormula);
    EXPECT_EQ(cnf.n, 4);
    EXPECT_EQ(cnf.m(), 4);
    EXPECT_EQ(cnf.polarity(1, 1), -1);
    EXPECT_EQ(cnf.polarity(4, 1), 1);
    EXPECT_EQ(cnf.polarity(2, 1), 0);
}

TEST(Dimacs, Errors) {
    EXPECT_THROW(parse_dimacs("p cnf 4 1\n5 0\n"), SatError);
    EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), SatError);
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), SatError);
    EXPECT_THROW(parse_dimacs("1 0\n"), SatError);
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -1 0\n"), SatError);
}

TEST(Dimacs, DuplicateLiteralsAreMerged) {
    auto cnf = parse_dimacs("p cnf 2 1\n2 1 2 0\n");
    EXPECT_EQ(cnf.clauses[0], (std::vector<int>{1, 2}));
    EXPECT_EQ(parse_dimacs(to_dimacs(cnf)).clauses, cnf.clauses);
}

TEST(Evaluate, Examples) {
    auto unit = parse_dimacs("p cnf 1 1\n1 0\n");
    EXPECT_TRUE(evaluate(unit, parse_assignment(1, "1")));
    auto fig = parse_dimacs(kFigureFormula);
    EXPECT_TRUE(evaluate(fig, parse_assignment(4, "1 2 -3 -4")));
    auto contra = parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    EXPECT_FALSE(evaluate(contra, parse_assignment(1, "1")));
    EXPECT_FALSE(evaluate(contra, parse_assignment(1, "-1")));
}

TEST(BruteForce, Examples) {
    EXPECT_FALSE(solve_brute_force(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")).has_value());
    auto a = solve_brute_force(parse_dimacs("p cnf 2 1\n1 2 0\n"));
    ASSERT_TRUE(a.has_value());
    EXPECT_FALSE((*a)[1]);
    EXPECT_TRUE((*a)[2]);
    auto fig = parse_dimacs(kFigureFormula);
    auto b = solve_brute_force(fig);
    ASSERT_TRUE(b.has_value());
    EXPECT_TRUE(evaluate(fig, *b));
}

TEST(BruteForce, Guard) {
    std::vector<std::vector<int>> cl{{25}};
    auto big = make_cnf(25, cl);
    EXPECT_THROW(solve_brute_force(big), SatError);
}

TEST(BruteForce, AgreesWithIndependentEnumeration) {
    std::mt19937 rng(21);
    int unsat = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 10, m = 1 + trial % 13;
        std::vector<std::vector<int>> cl;
        for (int j = 0; j < m; ++j) {
            std::vector<int> c;
            int len = 1 + rng() % 3;
            for (int k = 0; k < len; ++k) {
                int v = 1 + rng() % n;
                bool clash = false;
                for (int lit : c) clash = clash || lit == -v || lit == v;
                if (!clash) c.push_back(rng() % 2 ? v : -v);
            }
            cl.push_back(c);
        }
        auto cnf = make_cnf(n, cl);
        auto models = all_models(cnf);
        auto got = solve_brute_force(cnf);
        ASSERT_EQ(got.has_value(), !models.empty());
        if (!got) {
            ++unsat;
            continue;
        }
        EXPECT_TRUE(evaluate(cnf, *got));
        // lexicographic minimum with x_1 most significant and F < T
        auto best = *std::min_element(models.begin(), models.end());
        EXPECT_EQ(got->value, best);
    }
    EXPECT_GT(unsat, 5);
}

TEST(SatisfyingVariable, Examples) {
    auto c1 = parse_dimacs("p cnf 2 1\n1 2 0\n");
    EXPECT_EQ(satisfying_variable(c1, parse_assignment(2, "1 2"), 1), 1);
    auto fig = parse_dimacs(kFigureFormula);
    EXPECT_EQ(satisfying_variable(fig, parse_assignment(4, "1 2 -3 -4"), 2), 4);
    EXPECT_EQ(satisfying_variable(fig, parse_assignment(4, "1 2 -3 -4"), 3), 2);
    EXPECT_THROW(satisfying_variable(fig, parse_assignment(4, "1 -2 3 -4"), 3), SatError);
}

TEST(Assignment, ParseErrors) {
    EXPECT_THROW(parse_assignment(2, "1"), SatError);
    EXPECT_THROW(parse_assignment(2, "1 2 3"), SatError);
    EXPECT_THROW(parse_assignment(2, "1 -1 2"), SatError);
    EXPECT_EQ(parse_assignment(3, "-1 2 -3 0").to_string(), "-1 2 -3");
}
