#include "crossforge/sat.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace crossforge {

int CnfInstance::polarity(int i, int j) const {
    for (int lit : clauses.at(j - 1)) {
        if (lit == i) return 1;
        if (lit == -i) return -1;
    }
    return 0;
}

Assignment Assignment::from_literals(int n, const std::vector<int>& lits) {
    Assignment a;
    a.value.assign(n + 1, false);
    std::vector<char> seen(n + 1, 0);
    for (int lit : lits) {
        int v = std::abs(lit);
        if (v == 0 || v > n) throw SatError("assignment literal " + std::to_string(lit) + " out of range");
        if (seen[v]) throw SatError("variable " + std::to_string(v) + " assigned twice");
        seen[v] = 1;
        a.value[v] = lit > 0;
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw SatError("variable " + std::to_string(v) + " unassigned");
    return a;
}

std::string Assignment::to_string() const {
    std::string out;
    for (size_t i = 1; i < value.size(); ++i) {
        if (!out.empty()) out += ' ';
        out += (value[i] ? "" : "-") + std::to_string(i);
    }
    return out;
}

CnfInstance make_cnf(int n, std::vector<std::vector<int>> clauses) {
    if (n < 1) throw SatError("need at least one variable");
    if (clauses.empty()) throw SatError("need at least one clause");
    CnfInstance cnf;
    cnf.n = n;
    for (size_t j = 0; j < clauses.size(); ++j) {
        auto c = clauses[j];
        if (c.empty()) throw SatError("clause " + std::to_string(j + 1) + " is empty");
        for (int lit : c)
            if (lit == 0 || std::abs(lit) > n)
                throw SatError("clause " + std::to_string(j + 1) + ": literal " + std::to_string(lit) +
                               " out of range");
        std::sort(c.begin(), c.end(), [](int a, int b) {
            return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
        });
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (size_t k = 1; k < c.size(); ++k)
            if (c[k] == -c[k - 1])
                throw SatError("clause " + std::to_string(j + 1) + " is tautological in x" +
                               std::to_string(std::abs(c[k])));
        cnf.clauses.push_back(std::move(c));
    }
    return cnf;
}

CnfInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1, lineno = 0;
    std::vector<std::vector<int>> clauses;
    std::vector<int> cur;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c' || tok[0] == '%') continue;
        if (tok == "p") {
            std::string fmt;
            if (n >= 0) throw SatError("dimacs line " + std::to_string(lineno) + ": second header");
            if (!(ls >> fmt >> n >> m) || fmt != "cnf" || n < 1 || m < 1)
                throw SatError("dimacs line " + std::to_string(lineno) + ": bad header");
            continue;
        }
        if (n < 0) throw SatError("dimacs line " + std::to_string(lineno) + ": clause before header");
        std::istringstream body(line);
        long lit;
        std::string t;
        while (body >> t) {
            try {
                size_t used = 0;
                lit = std::stol(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
            } catch (...) {
                throw SatError("dimacs line " + std::to_string(lineno) + ": bad literal '" + t + "'");
            }
            if (lit == 0) {
                clauses.push_back(cur);
                cur.clear();
            } else {
                if (std::labs(lit) > n)
                    throw SatError("dimacs line " + std::to_string(lineno) + ": variable " +
                                   std::to_string(std::labs(lit)) + " out of range");
                cur.push_back(static_cast<int>(lit));
            }
        }
    }
    if (n < 0) throw SatError("dimacs: missing header");
    if (!cur.empty()) throw SatError("dimacs: last clause is not terminated by 0");
    if (static_cast<int>(clauses.size()) != m)
        throw SatError("dimacs: header declares " + std::to_string(m) + " clauses, found " +
                       std::to_string(clauses.size()));
    return make_cnf(n, std::move(clauses));
}

std::string to_dimacs(const CnfInstance& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.n << ' ' << cnf.m() << '\n';
    for (const auto& c : cnf.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const CnfInstance& cnf, const Assignment& a) {
    if (static_cast<int>(a.value.size()) != cnf.n + 1) throw SatError("assignment size mismatch");
    for (const auto& c : cnf.clauses) {
        bool sat = false;
        for (int lit : c)
            if (a[std::abs(lit)] == (lit > 0)) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> solve_brute_force(const CnfInstance& cnf) {
    if (cnf.n > kBruteForceMaxVars)
        throw SatError("brute force limited to " + std::to_string(kBruteForceMaxVars) +
                       " variables; supply an assignment");
    int n = cnf.n;
    // clause masks: bit (n - i) holds x_i so that counting up is lexicographic
    std::vector<std::pair<uint32_t, uint32_t>> masks;
    for (const auto& c : cnf.clauses) {
        uint32_t pos = 0, neg = 0;
        for (int lit : c) {
            uint32_t bit = 1u << (n - std::abs(lit));
            (lit > 0 ? pos : neg) |= bit;
        }
        masks.push_back({pos, neg});
    }
    uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
    for (uint64_t x = 0; x <= full; ++x) {
        uint32_t bits = static_cast<uint32_t>(x);
        bool ok = true;
        for (auto [pos, neg] : masks)
            if (!(bits & pos) && !(~bits & neg & full)) {
                ok = false;
                break;
            }
        if (ok) {
            Assignment a;
            a.value.assign(n + 1, false);
            for (int i = 1; i <= n; ++i) a.value[i] = (bits >> (n - i)) & 1u;
            return a;
        }
    }
    return std::nullopt;
}

int satisfying_variable(const CnfInstance& cnf, const Assignment& a, int j) {
    if (j < 1 || j > cnf.m()) throw SatError("clause index " + std::to_string(j) + " out of range");
    int best = 0;
    for (int lit : cnf.clauses[j - 1]) {
        int v = std::abs(lit);
        if (a[v] == (lit > 0) && (best == 0 || v < best)) best = v;
    }
    if (best == 0) throw SatError("clause " + std::to_string(j) + " is not satisfied");
    return best;
}

Assignment parse_assignment(int n, const std::string& text) {
    std::istringstream in(text);
    std::vector<int> lits;
    std::string t;
    while (in >> t) {
        int lit;
        try {
            size_t used = 0;
            lit = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (...) {
            throw SatError("bad assignment token '" + t + "'");
        }
        if (lit == 0) break;
        lits.push_back(lit);
    }
    return Assignment::from_literals(n, lits);
}

}  // namespace crossforge
