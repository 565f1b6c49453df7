#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossforge {

class SatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Literal +i is x_i, -i is the negation; variables are 1-based.
struct CnfInstance {
    int n = 0;
    std::vector<std::vector<int>> clauses;

    int m() const { return static_cast<int>(clauses.size()); }
    // polarity of x_i in clause j (1-based j): +1, -1, or 0 if absent
    int polarity(int i, int j) const;
};

// value[i] for i in 1..n; value[0] unused
struct Assignment {
    std::vector<bool> value;

    bool operator[](int i) const { return value.at(i); }
    static Assignment from_literals(int n, const std::vector<int>& lits);
    std::string to_string() const;  // "1 -2 3"
};

// Checks the instance invariants, dedups literals, rejects tautologies.
CnfInstance make_cnf(int n, std::vector<std::vector<int>> clauses);
CnfInstance parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfInstance& cnf);

bool evaluate(const CnfInstance& cnf, const Assignment& a);

constexpr int kBruteForceMaxVars = 24;
// Lexicographically smallest satisfying assignment (x_1 most significant, F < T).
std::optional<Assignment> solve_brute_force(const CnfInstance& cnf);

// Smallest variable whose literal in clause j (1-based) is true under a.
int satisfying_variable(const CnfInstance& cnf, const Assignment& a, int j);

// Parses "1 -2 3" (optionally 0-terminated) into a total assignment.
Assignment parse_assignment(int n, const std::string& text);

}  // namespace crossforge
