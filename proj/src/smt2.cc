#include <string>

#include "qsat/encoder.h"

namespace qsat {

namespace {

std::string bv_literal(StateId id, unsigned bits) {
    std::string out = "#b";
    for (int b = static_cast<int>(bits) - 1; b >= 0; b--) {
        out.push_back(((id >> b) & 1) ? '1' : '0');
    }
    return out;
}

std::string signal_name(const SignalGroup &g, size_t s) {
    return g.name + std::to_string(s);
}

}  // namespace

std::string emit_smt2(const Encoding &e) {
    std::string out;
    out += "; state-id encoding, " + std::to_string(e.symbols.size()) + " circuit(s)\n";
    out += "(set-logic QF_BV)\n";
    for (const SignalGroup &g : e.symbols) {
        for (size_t s = 0; s < g.num_signals; s++) {
            out += "(declare-const " + signal_name(g, s) + " (_ BitVec " + std::to_string(g.bits) + "))\n";
        }
    }
    for (size_t c = 0; c < e.symbols.size(); c++) {
        const SignalGroup &g = e.symbols[c];
        const AnalysisResult &a = e.analyses[c];
        for (size_t s = 0; s < g.num_signals; s++) {
            const auto &domain = a.domains[s];
            if (domain.size() == (size_t{1} << g.bits)) {
                continue;
            }
            std::string name = signal_name(g, s);
            if (domain.size() == 1) {
                out += "(assert (= " + name + " " + bv_literal(domain[0], g.bits) + "))\n";
                continue;
            }
            out += "(assert (or";
            for (StateId id : domain) {
                out += " (= " + name + " " + bv_literal(id, g.bits) + ")";
            }
            out += "))\n";
        }
        for (size_t i = 0; i < a.transitions.size(); i++) {
            std::string from = signal_name(g, i), to = signal_name(g, i + 1);
            for (const Transition &t : a.transitions[i]) {
                out += "(assert (= (= " + from + " " + bv_literal(t.from, g.bits) + ") (= " + to + " " +
                       bv_literal(t.to, g.bits) + ")))\n";
            }
        }
    }
    if (e.is_miter()) {
        const SignalGroup &ga = e.symbols[0];
        const SignalGroup &gb = e.symbols[1];
        out += "(assert (= " + signal_name(ga, 0) + " " + signal_name(gb, 0) + "))\n";
        out += "(assert (distinct " + signal_name(ga, ga.num_signals - 1) + " " +
               signal_name(gb, gb.num_signals - 1) + "))\n";
    }
    out += "(check-sat)\n";
    return out;
}

}  // namespace qsat
