#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsat/solver.h"

namespace qsat {

SolverOutput parse_solver_output(std::string_view text, uint32_t num_vars) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<SolveResult> status;
    SolverOutput out{SolveResult::unsat, std::vector<bool>(num_vars + size_t{1}, false)};
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) == 0) {
            std::string word = line.substr(2);
            while (!word.empty() && (word.back() == '\r' || word.back() == ' ')) {
                word.pop_back();
            }
            if (word == "SATISFIABLE") {
                status = SolveResult::sat;
            } else if (word == "UNSATISFIABLE") {
                status = SolveResult::unsat;
            } else {
                throw std::runtime_error("solver reported '" + word + "'");
            }
        } else if (line.rfind("v ", 0) == 0 || line == "v") {
            std::istringstream ls(line.substr(1));
            long lit;
            while (ls >> lit) {
                if (lit == 0) {
                    continue;
                }
                size_t v = static_cast<size_t>(std::labs(lit));
                if (v > num_vars) {
                    throw std::runtime_error("solver model mentions variable " + std::to_string(v) + " beyond " +
                                             std::to_string(num_vars));
                }
                out.model[v] = lit > 0;
            }
        }
    }
    if (!status.has_value()) {
        throw std::runtime_error("solver output has no 's' status line");
    }
    out.result = *status;
    return out;
}

std::string format_solver_output(SolveResult result, const SolverInterface &solver) {
    if (result == SolveResult::unsat) {
        return "s UNSATISFIABLE\n";
    }
    std::string out = "s SATISFIABLE\n";
    std::string line = "v";
    for (uint32_t v = 1; v <= solver.num_vars(); v++) {
        std::string lit = " " + std::string(solver.model_value(static_cast<Literal>(v)) ? "" : "-") + std::to_string(v);
        if (line.size() + lit.size() > 78) {
            out += line + "\n";
            line = "v";
        }
        line += lit;
    }
    out += line + " 0\n";
    return out;
}

ExternalSolver::ExternalSolver(std::string command) : command_(std::move(command)) {
    if (command_.empty()) {
        throw std::invalid_argument("external solver command is empty");
    }
}

void ExternalSolver::add_clause(std::span<const Literal> clause) {
    formula_.add_clause(clause);
    have_model_ = false;
}

SolveResult ExternalSolver::solve() {
    have_model_ = false;
    std::string path = (std::filesystem::temp_directory_path() / "qsat-XXXXXX.cnf").string();
    int fd = mkstemps(path.data(), 4);
    if (fd < 0) {
        throw std::runtime_error("cannot create temporary DIMACS file");
    }
    close(fd);
    struct Cleanup {
        std::string path;
        ~Cleanup() {
            std::error_code ec;
            std::filesystem::remove(path, ec);
        }
    } cleanup{path};
    {
        std::ofstream f(path);
        f << emit_dimacs(formula_);
        if (!f) {
            throw std::runtime_error("cannot write " + path);
        }
    }
    std::string cmd = command_ + " '" + path + "'";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        throw std::runtime_error("cannot run external solver: " + command_);
    }
    std::string output;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        output.append(buf, n);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0 && code != 10 && code != 20) {
        throw std::runtime_error("external solver exited with status " + std::to_string(code));
    }
    SolverOutput parsed = parse_solver_output(output, formula_.num_vars());
    if ((code == 10 && parsed.result != SolveResult::sat) || (code == 20 && parsed.result != SolveResult::unsat)) {
        throw std::runtime_error("external solver exit status disagrees with its 's' line");
    }
    if (parsed.result == SolveResult::sat) {
        if (!formula_.satisfied_by(parsed.model)) {
            throw std::runtime_error("external solver returned a model that violates the formula");
        }
        model_ = std::move(parsed.model);
        have_model_ = true;
    }
    return parsed.result;
}

bool ExternalSolver::model_value(Literal var) const {
    if (!have_model_) {
        throw std::logic_error("model_value: no model available");
    }
    size_t v = static_cast<size_t>(std::abs(var));
    return v < model_.size() && model_[v];
}

std::unique_ptr<SolverInterface> make_solver(std::string_view spec) {
    if (spec.empty() || spec == "internal" || spec == "cdcl") {
        return std::make_unique<CdclSolver>();
    }
    constexpr std::string_view prefix = "external:";
    if (spec.substr(0, prefix.size()) == prefix) {
        return std::make_unique<ExternalSolver>(std::string(spec.substr(prefix.size())));
    }
    throw std::invalid_argument("unknown solver '" + std::string(spec) + "' (expected internal or external:<command>)");
}

}  // namespace qsat
