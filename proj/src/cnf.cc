#include "qsat/cnf.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qsat {

void CnfFormula::add_clause(std::span<const Literal> clause) {
    if (clause.empty()) {
        throw std::invalid_argument("empty clause");
    }
    for (Literal lit : clause) {
        if (lit == 0) {
            throw std::invalid_argument("literal 0 is not a variable");
        }
        num_vars_ = std::max(num_vars_, static_cast<uint32_t>(std::abs(lit)));
        lits_.push_back(lit);
    }
    starts_.push_back(lits_.size());
}

bool CnfFormula::satisfied_by(const std::vector<bool> &assignment) const {
    for (size_t i = 0; i < num_clauses(); i++) {
        bool sat = false;
        for (Literal lit : clause(i)) {
            size_t v = static_cast<size_t>(std::abs(lit));
            if (v < assignment.size() && assignment[v] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            return false;
        }
    }
    return true;
}

void CnfFormula::validate() const {
    std::vector<Literal> sorted;
    for (size_t i = 0; i < num_clauses(); i++) {
        auto c = clause(i);
        sorted.assign(c.begin(), c.end());
        std::sort(sorted.begin(), sorted.end(), [](Literal a, Literal b) {
            return std::abs(a) < std::abs(b);
        });
        for (size_t k = 0; k < sorted.size(); k++) {
            if (static_cast<uint32_t>(std::abs(sorted[k])) > num_vars_) {
                throw std::logic_error("clause " + std::to_string(i) + " exceeds num_vars");
            }
            if (k > 0 && sorted[k] == -sorted[k - 1]) {
                throw std::logic_error("clause " + std::to_string(i) + " is tautological");
            }
        }
    }
}

std::string emit_dimacs(const CnfFormula &f, std::span<const std::string> comments) {
    std::string out;
    out.reserve(f.num_literals() * 7 + f.num_clauses() * 2 + 64);
    for (const std::string &line : comments) {
        out += "c ";
        out += line;
        out += '\n';
    }
    out += "p cnf " + std::to_string(f.num_vars()) + " " + std::to_string(f.num_clauses()) + "\n";
    char buf[16];
    for (size_t i = 0; i < f.num_clauses(); i++) {
        for (Literal lit : f.clause(i)) {
            int len = std::snprintf(buf, sizeof(buf), "%d ", lit);
            out.append(buf, static_cast<size_t>(len));
        }
        out += "0\n";
    }
    return out;
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long declared_vars = -1;
    long declared_clauses = -1;
    CnfFormula f;
    std::vector<Literal> pending;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == 'c') {
            continue;
        }
        if (line[first] == '%') {
            break;
        }
        std::istringstream ls(line.substr(first));
        if (line[first] == 'p') {
            std::string p, fmt;
            ls >> p >> fmt >> declared_vars >> declared_clauses;
            if (!ls || fmt != "cnf" || declared_vars < 0 || declared_clauses < 0) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": bad DIMACS header");
            }
            continue;
        }
        if (declared_vars < 0) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": clause before 'p cnf' header");
        }
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.empty()) {
                    throw std::invalid_argument("line " + std::to_string(line_no) + ": empty clause");
                }
                f.add_clause(pending);
                pending.clear();
            } else {
                if (std::labs(lit) > declared_vars) {
                    throw std::invalid_argument("line " + std::to_string(line_no) + ": literal exceeds header");
                }
                pending.push_back(static_cast<Literal>(lit));
            }
        }
        if (!ls.eof()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": not a literal");
        }
    }
    if (declared_vars < 0) {
        throw std::invalid_argument("missing 'p cnf' header");
    }
    if (!pending.empty()) {
        f.add_clause(pending);
    }
    if (static_cast<long>(f.num_clauses()) != declared_clauses) {
        throw std::invalid_argument(
            "header declares " + std::to_string(declared_clauses) + " clauses, found " +
            std::to_string(f.num_clauses()));
    }
    f.reserve_vars(static_cast<uint32_t>(declared_vars));
    return f;
}

}  // namespace qsat
