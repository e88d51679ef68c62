#include "cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "qsat/analysis.h"
#include "qsat/bench.h"
#include "qsat/circuit.h"
#include "qsat/encoder.h"
#include "qsat/equivalence.h"
#include "qsat/solver.h"
#include "qsat/tableau.h"

namespace qsat {

namespace {

std::string read_file(const std::string &path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot read " + path);
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Circuit load_circuit(const std::string &path) {
    try {
        return parse_circuit(read_file(path));
    } catch (const ParseError &e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
}

void print_generators(std::ostream &out, const Tableau &t) {
    for (size_t r = 0; r < t.num_qubits(); r++) {
        out << "  " << t.row_label(r).str() << "\n";
    }
}

/// all-zero, all-basis, or comma-separated bit strings.
std::vector<Tableau> parse_inputs(const std::string &spec, uint32_t n) {
    if (spec == "all-zero") {
        return all_zero_input(n);
    }
    if (spec == "all-basis") {
        if (n > 16) {
            throw std::invalid_argument("all-basis inputs are limited to 16 qubits");
        }
        return all_basis_inputs(n);
    }
    std::vector<Tableau> inputs;
    std::stringstream ss(spec);
    std::string bits;
    while (std::getline(ss, bits, ',')) {
        if (bits.size() != n) {
            throw std::invalid_argument(
                "input '" + bits + "' has " + std::to_string(bits.size()) + " bits, circuit has " + std::to_string(n) +
                " qubits");
        }
        inputs.push_back(Tableau::from_basis_state(bits));
    }
    if (inputs.empty()) {
        throw std::invalid_argument("no inputs given");
    }
    return inputs;
}

template <class T>
std::vector<T> parse_list(const std::string &text, const char *what) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<T>(v));
        } catch (const std::logic_error &) {
            throw std::invalid_argument(std::string("bad ") + what + " value '" + item + "'");
        }
    }
    return out;
}

struct Options {
    std::string file;
    std::string file_b;
    std::string input_bits;
    std::string inputs = "all-zero";
    std::string mode = "canonical";
    bool json = false;
    std::string format = "dimacs";
    std::string out_path;
    size_t num_inputs = 16;
    std::string input_kind = "random-basis";
    uint64_t seed = 0;
    std::string solver = "internal";
    std::string series = "scaling";
    std::string qubits = "8";
    std::string gates = "1000";
    unsigned reps = 10;
    unsigned workers = 1;
    uint32_t gen_qubits = 2;
    size_t gen_gates = 10;
    std::string alphabet = "full";
    bool remove_gate = false;
};

int cmd_simulate(const Options &o, std::ostream &out) {
    Circuit c = load_circuit(o.file);
    if (o.input_bits.size() != c.num_qubits) {
        throw std::invalid_argument(
            "input has " + std::to_string(o.input_bits.size()) + " bits, circuit has " + std::to_string(c.num_qubits) +
            " qubits");
    }
    Tableau t = Tableau::from_basis_state(o.input_bits);
    out << "s0:\n";
    print_generators(out, t);
    for (size_t i = 0; i < c.gates.size(); i++) {
        t.apply(c.gates[i]);
        out << "s" << i + 1 << " after " << c.gates[i].str() << ":\n";
        print_generators(out, t);
    }
    return kExitOk;
}

int cmd_analyze(const Options &o, std::ostream &out) {
    Circuit c = load_circuit(o.file);
    auto inputs = parse_inputs(o.inputs, c.num_qubits);
    AnalysisResult a = structural_analysis(c, inputs, parse_key_mode(o.mode));
    std::vector<size_t> sizes;
    for (const auto &d : a.domains) {
        sizes.push_back(d.size());
    }
    if (o.json) {
        nlohmann::json summary = {
            {"num_states", a.num_states()},
            {"bits_per_signal", a.bits_per_signal},
            {"mode", key_mode_name(a.registry->mode())},
            {"num_inputs", a.num_inputs},
            {"domain_sizes", sizes},
        };
        out << summary.dump() << "\n";
        for (size_t g = 0; g < a.transitions.size(); g++) {
            for (const auto &tr : a.transitions[g]) {
                out << nlohmann::json{{"gate", g}, {"from", tr.from}, {"to", tr.to}}.dump() << "\n";
            }
        }
        return kExitOk;
    }
    out << "mode: " << key_mode_name(a.registry->mode()) << "\n";
    out << "states: " << a.num_states() << "\n";
    out << "bits per signal: " << a.bits_per_signal << "\n";
    out << "domain sizes:";
    for (size_t s : sizes) {
        out << " " << s;
    }
    out << "\ntransitions (gate from to):\n";
    for (size_t g = 0; g < a.transitions.size(); g++) {
        for (const auto &tr : a.transitions[g]) {
            out << "  " << g << " " << tr.from << " " << tr.to << "\n";
        }
    }
    return kExitOk;
}

int cmd_encode(const Options &o, std::ostream &out, std::ostream &err) {
    Circuit c = load_circuit(o.file);
    auto inputs = parse_inputs(o.inputs, c.num_qubits);
    Encoding e = encode_circuit(structural_analysis(c, inputs, parse_key_mode(o.mode)));
    std::string text;
    if (o.format == "dimacs") {
        text = emit_dimacs(e);
    } else if (o.format == "smt2") {
        text = emit_smt2(e);
    } else {
        throw std::invalid_argument("unknown format '" + o.format + "' (expected dimacs or smt2)");
    }
    write_output(o.out_path, text, out);
    err << "vars: " << e.formula.num_vars() << " clauses: " << e.formula.num_clauses() << "\n";
    return kExitOk;
}

int cmd_check(const Options &o, std::ostream &out) {
    Circuit a = load_circuit(o.file);
    Circuit b = load_circuit(o.file_b);
    CheckOptions opts;
    opts.num_inputs = o.num_inputs;
    opts.input_kind = parse_input_kind(o.input_kind);
    opts.seed = o.seed;
    opts.solver = o.solver;
    EquivalenceResult r = check_equivalence(a, b, opts);
    out << verdict_name(r.verdict) << "\n";
    out << "inputs: " << o.num_inputs << " (" << input_kind_name(opts.input_kind) << ", seed " << o.seed << ")\n";
    out << "states: " << r.stats.num_states << " vars: " << r.stats.num_vars << " clauses: " << r.stats.num_clauses
        << "\n";
    out << "t_prep_ms: " << r.stats.t_prep_ms << " t_solve_ms: " << r.stats.t_solve_ms;
    if (r.stats.conflicts.has_value()) {
        out << " conflicts: " << *r.stats.conflicts;
    }
    out << "\n";
    if (!r.counterexample.has_value()) {
        return kExitOk;
    }
    const Counterexample &cx = *r.counterexample;
    out << "counterexample input (state " << cx.input_id << "):\n";
    print_generators(out, cx.input_tableau);
    Tableau oa = cx.input_tableau;
    oa.apply(a);
    Tableau ob = cx.input_tableau;
    ob.apply(b);
    out << "output of " << o.file << " (state " << cx.output_id_a << "):\n";
    print_generators(out, canonicalize(oa));
    out << "output of " << o.file_b << " (state " << cx.output_id_b << "):\n";
    print_generators(out, canonicalize(ob));
    return kExitNotEquivalent;
}

int cmd_bench(const Options &o, std::ostream &out, std::ostream &err) {
    BenchConfig cfg;
    cfg.series = parse_bench_series(o.series);
    cfg.qubits = parse_list<uint32_t>(o.qubits, "qubit");
    cfg.gates = parse_list<size_t>(o.gates, "gate");
    cfg.seed = o.seed;
    cfg.reps = o.reps;
    cfg.mode = parse_key_mode(o.mode);
    cfg.num_inputs = o.num_inputs;
    cfg.solver = o.solver;
    cfg.workers = o.workers;
    auto records = run_bench(cfg);
    std::ostringstream csv;
    write_csv(csv, records);
    write_output(o.out_path, csv.str(), out);
    if (!o.out_path.empty() && o.out_path != "-") {
        err << records.size() << " rows written to " << o.out_path << "\n";
    }
    return kExitOk;
}

int cmd_solve(const Options &o, std::ostream &out) {
    CnfFormula f = parse_dimacs(read_file(o.file));
    CdclSolver solver;
    solver.add_formula(f);
    SolveResult r = solver.solve();
    out << "c conflicts " << solver.conflicts().value_or(0) << "\n";
    out << format_solver_output(r, solver);
    return r == SolveResult::sat ? 10 : 20;
}

int cmd_generate(const Options &o, std::ostream &out) {
    GateAlphabet alphabet;
    if (o.alphabet == "full") {
        alphabet = GateAlphabet::full;
    } else if (o.alphabet == "generators") {
        alphabet = GateAlphabet::generators;
    } else {
        throw std::invalid_argument("unknown alphabet '" + o.alphabet + "' (expected full or generators)");
    }
    Circuit c = random_clifford_circuit(o.gen_qubits, o.gen_gates, o.seed, alphabet);
    if (o.remove_gate) {
        c = remove_random_gate(c, derive_seed(o.seed, 1));
    }
    write_output(o.out_path, emit_circuit(c), out);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Clifford circuits to SAT: simulation, structural analysis, encoding and equivalence checking"};
    app.name("qsat");
    app.require_subcommand(1);
    Options o;

    auto *simulate = app.add_subcommand("simulate", "Print the stabilizer generators at every signal");
    simulate->add_option("circuit", o.file, "OpenQASM 2 circuit file ('-' for stdin)")->required();
    simulate->add_option("--input", o.input_bits, "Basis input, one character per qubit, qubit 0 first")->required();

    auto add_input_flags = [&](CLI::App *cmd) {
        cmd->add_option("--inputs", o.inputs, "all-zero, all-basis, or comma-separated bit strings")
            ->capture_default_str();
        cmd->add_option("--mode", o.mode, "State keys: canonical or raw")->capture_default_str();
    };

    auto *analyze = app.add_subcommand("analyze", "Structural analysis: unique states and transitions");
    analyze->add_option("circuit", o.file, "OpenQASM 2 circuit file")->required();
    add_input_flags(analyze);
    analyze->add_flag("--json", o.json, "Emit JSON lines: a summary object, then one object per transition");

    auto *encode = app.add_subcommand("encode", "Write the SAT encoding of a circuit");
    encode->add_option("circuit", o.file, "OpenQASM 2 circuit file")->required();
    add_input_flags(encode);
    encode->add_option("--format", o.format, "dimacs or smt2")->capture_default_str();
    encode->add_option("--out", o.out_path, "Output path (default stdout)");

    auto *check = app.add_subcommand("check", "Check two circuits for equivalence on sampled inputs");
    check->add_option("circuit_a", o.file, "First circuit")->required();
    check->add_option("circuit_b", o.file_b, "Second circuit")->required();
    check->add_option("--inputs", o.num_inputs, "Number of input states")->capture_default_str();
    check->add_option("--input-kind", o.input_kind, "all-zero, random-basis or random-stabilizer")
        ->capture_default_str();
    check->add_option("--seed", o.seed, "Seed for input sampling")->capture_default_str();
    check->add_option("--solver", o.solver, "internal or external:<command>")->capture_default_str();

    auto *bench = app.add_subcommand("bench", "Run an evaluation series and write CSV");
    bench->add_option("--series", o.series, "scaling, generators or equivalence")->capture_default_str();
    bench->add_option("--qubits", o.qubits, "Comma-separated qubit counts")->capture_default_str();
    bench->add_option("--gates", o.gates, "Comma-separated gate counts")->capture_default_str();
    bench->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    bench->add_option("--reps", o.reps, "Random circuits per parameter point")->capture_default_str();
    bench->add_option("--mode", o.mode, "Key mode for the generators series")->capture_default_str();
    bench->add_option("--inputs", o.num_inputs, "Random basis inputs per equivalence check")->capture_default_str();
    bench->add_option("--solver", o.solver, "internal or external:<command>")->capture_default_str();
    bench->add_option("--workers", o.workers, "Parameter points run in parallel")->capture_default_str();
    bench->add_option("--csv", o.out_path, "Output path (default stdout)");

    auto *solve = app.add_subcommand("solve", "Solve a DIMACS file; exit 10 if satisfiable, 20 if not");
    solve->add_option("cnf", o.file, "DIMACS CNF file")->required();

    auto *generate = app.add_subcommand("generate", "Write a random Clifford circuit");
    generate->add_option("--qubits", o.gen_qubits, "Number of qubits")->capture_default_str();
    generate->add_option("--gates", o.gen_gates, "Number of gates")->capture_default_str();
    generate->add_option("--seed", o.seed, "Seed")->capture_default_str();
    generate->add_option("--alphabet", o.alphabet, "full (H,S,X,Y,Z,CX) or generators (H,S,CX)")
        ->capture_default_str();
    generate->add_flag("--remove-gate", o.remove_gate, "Delete one random gate afterwards");
    generate->add_option("--out", o.out_path, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*simulate) {
            return cmd_simulate(o, out);
        }
        if (*analyze) {
            return cmd_analyze(o, out);
        }
        if (*encode) {
            return cmd_encode(o, out, err);
        }
        if (*check) {
            return cmd_check(o, out);
        }
        if (*bench) {
            return cmd_bench(o, out, err);
        }
        if (*solve) {
            return cmd_solve(o, out);
        }
        if (*generate) {
            return cmd_generate(o, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace qsat
