#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "qsat/solver.h"

namespace qsat {

void SolverInterface::add_formula(const CnfFormula &f) {
    for (size_t i = 0; i < f.num_clauses(); i++) {
        add_clause(f.clause(i));
    }
}

namespace {

// Internal literal: 2 * var + negated, var 0-based.
using Lit = uint32_t;
using CRef = uint32_t;
constexpr Lit kUndefLit = std::numeric_limits<Lit>::max();
constexpr CRef kNoReason = std::numeric_limits<CRef>::max();

inline Lit to_lit(Literal l) {
    return 2 * (static_cast<uint32_t>(std::abs(l)) - 1) + (l < 0 ? 1 : 0);
}
inline Lit negate(Lit p) {
    return p ^ 1;
}
inline uint32_t var_of(Lit p) {
    return p >> 1;
}

double luby(double base, uint32_t x) {
    uint32_t size = 1;
    int seq = 0;
    while (size < x + 1) {
        seq++;
        size = 2 * size + 1;
    }
    while (size - 1 != x) {
        size = (size - 1) >> 1;
        seq--;
        x = x % size;
    }
    return std::pow(base, seq);
}

class VarOrder {
   public:
    explicit VarOrder(const std::vector<double> &activity) : act_(activity) {
    }

    void grow(uint32_t num_vars) {
        pos_.resize(num_vars, -1);
    }
    bool contains(uint32_t v) const {
        return pos_[v] >= 0;
    }
    bool empty() const {
        return heap_.empty();
    }

    void insert(uint32_t v) {
        if (contains(v)) {
            return;
        }
        pos_[v] = static_cast<int>(heap_.size());
        heap_.push_back(v);
        up(heap_.size() - 1);
    }

    void bumped(uint32_t v) {
        if (contains(v)) {
            up(static_cast<size_t>(pos_[v]));
        }
    }

    uint32_t pop() {
        uint32_t top = heap_.front();
        heap_.front() = heap_.back();
        pos_[heap_.front()] = 0;
        heap_.pop_back();
        pos_[top] = -1;
        if (!heap_.empty()) {
            down(0);
        }
        return top;
    }

   private:
    bool before(uint32_t a, uint32_t b) const {
        return act_[a] > act_[b] || (act_[a] == act_[b] && a < b);
    }

    void up(size_t i) {
        uint32_t v = heap_[i];
        while (i > 0) {
            size_t parent = (i - 1) / 2;
            if (!before(v, heap_[parent])) {
                break;
            }
            heap_[i] = heap_[parent];
            pos_[heap_[i]] = static_cast<int>(i);
            i = parent;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int>(i);
    }

    void down(size_t i) {
        uint32_t v = heap_[i];
        while (true) {
            size_t child = 2 * i + 1;
            if (child >= heap_.size()) {
                break;
            }
            if (child + 1 < heap_.size() && before(heap_[child + 1], heap_[child])) {
                child++;
            }
            if (!before(heap_[child], v)) {
                break;
            }
            heap_[i] = heap_[child];
            pos_[heap_[i]] = static_cast<int>(i);
            i = child;
        }
        heap_[i] = v;
        pos_[v] = static_cast<int>(i);
    }

    const std::vector<double> &act_;
    std::vector<uint32_t> heap_;
    std::vector<int> pos_;
};

}  // namespace

struct CdclSolver::Impl {
    struct Watcher {
        CRef cref;
        Lit blocker;
    };

    // Clause at cref: arena[cref] = size, arena[cref + 1 ..] = literals.
    std::vector<uint32_t> arena;
    std::vector<std::vector<Watcher>> watches;  // watches[l]: clauses watching l

    std::vector<int8_t> assigns;  // +1 true, -1 false, 0 unassigned
    std::vector<uint32_t> level;
    std::vector<CRef> reason;
    std::vector<char> saved_phase;  // 1 = last assigned false
    std::vector<char> seen;
    std::vector<double> activity;
    double var_inc = 1.0;
    VarOrder order{activity};

    std::vector<Lit> trail;
    std::vector<size_t> trail_lim;
    size_t qhead = 0;

    bool ok = true;
    std::vector<bool> model;
    uint64_t last_conflicts = 0;
    uint64_t total_decisions = 0;
    uint64_t total_propagations = 0;

    std::vector<Lit> scratch;

    uint32_t num_vars() const {
        return static_cast<uint32_t>(assigns.size());
    }

    void ensure_var(uint32_t v) {
        if (v < num_vars()) {
            return;
        }
        uint32_t n = v + 1;
        uint32_t old = num_vars();
        watches.resize(2 * size_t{n});
        assigns.resize(n, 0);
        level.resize(n, 0);
        reason.resize(n, kNoReason);
        saved_phase.resize(n, 1);
        seen.resize(n, 0);
        activity.resize(n, 0.0);
        order.grow(n);
        for (uint32_t k = old; k < n; k++) {
            order.insert(k);
        }
    }

    int8_t value(Lit p) const {
        int8_t a = assigns[var_of(p)];
        return (p & 1) ? static_cast<int8_t>(-a) : a;
    }

    uint32_t decision_level() const {
        return static_cast<uint32_t>(trail_lim.size());
    }

    uint32_t *lits(CRef c) {
        return &arena[c + 1];
    }
    uint32_t size(CRef c) const {
        return arena[c];
    }

    void enqueue(Lit p, CRef from) {
        uint32_t v = var_of(p);
        assigns[v] = (p & 1) ? -1 : 1;
        level[v] = decision_level();
        reason[v] = from;
        trail.push_back(p);
    }

    CRef alloc(const std::vector<Lit> &c) {
        CRef cref = static_cast<CRef>(arena.size());
        arena.push_back(static_cast<uint32_t>(c.size()));
        arena.insert(arena.end(), c.begin(), c.end());
        return cref;
    }

    void attach(CRef c) {
        uint32_t *l = lits(c);
        watches[l[0]].push_back({c, l[1]});
        watches[l[1]].push_back({c, l[0]});
    }

    CRef propagate() {
        CRef conflict = kNoReason;
        while (qhead < trail.size()) {
            Lit p = trail[qhead++];
            Lit false_lit = negate(p);
            std::vector<Watcher> &ws = watches[false_lit];
            total_propagations++;
            size_t i = 0, j = 0;
            while (i < ws.size()) {
                Watcher w = ws[i];
                if (value(w.blocker) == 1) {
                    ws[j++] = ws[i++];
                    continue;
                }
                uint32_t *c = lits(w.cref);
                uint32_t sz = size(w.cref);
                if (c[0] == false_lit) {
                    std::swap(c[0], c[1]);
                }
                i++;
                Lit first = c[0];
                if (first != w.blocker && value(first) == 1) {
                    ws[j++] = {w.cref, first};
                    continue;
                }
                bool moved = false;
                for (uint32_t k = 2; k < sz; k++) {
                    if (value(c[k]) != -1) {
                        std::swap(c[1], c[k]);
                        watches[c[1]].push_back({w.cref, first});
                        moved = true;
                        break;
                    }
                }
                if (moved) {
                    continue;
                }
                ws[j++] = {w.cref, first};
                if (value(first) == -1) {
                    conflict = w.cref;
                    qhead = trail.size();
                    while (i < ws.size()) {
                        ws[j++] = ws[i++];
                    }
                } else {
                    enqueue(first, w.cref);
                }
            }
            ws.resize(j);
            if (conflict != kNoReason) {
                break;
            }
        }
        return conflict;
    }

    void bump(uint32_t v) {
        activity[v] += var_inc;
        if (activity[v] > 1e100) {
            for (double &a : activity) {
                a *= 1e-100;
            }
            var_inc *= 1e-100;
        }
        order.bumped(v);
    }

    bool redundant(Lit p) {
        CRef r = reason[var_of(p)];
        if (r == kNoReason) {
            return false;
        }
        uint32_t *c = lits(r);
        for (uint32_t k = 1; k < size(r); k++) {
            uint32_t v = var_of(c[k]);
            if (!seen[v] && level[v] > 0) {
                return false;
            }
        }
        return true;
    }

    // First-UIP learning. learnt[0] is the asserting literal and learnt[1] has
    // the highest level among the rest.
    uint32_t analyze(CRef conflict, std::vector<Lit> &learnt) {
        learnt.clear();
        learnt.push_back(kUndefLit);
        int path = 0;
        Lit p = kUndefLit;
        size_t index = trail.size();
        do {
            uint32_t *c = lits(conflict);
            for (uint32_t k = (p == kUndefLit ? 0 : 1); k < size(conflict); k++) {
                Lit q = c[k];
                uint32_t v = var_of(q);
                if (!seen[v] && level[v] > 0) {
                    seen[v] = 1;
                    bump(v);
                    if (level[v] >= decision_level()) {
                        path++;
                    } else {
                        learnt.push_back(q);
                    }
                }
            }
            while (!seen[var_of(trail[--index])]) {
            }
            p = trail[index];
            conflict = reason[var_of(p)];
            seen[var_of(p)] = 0;
            path--;
        } while (path > 0);
        learnt[0] = negate(p);

        scratch.assign(learnt.begin(), learnt.end());
        size_t keep = 1;
        for (size_t k = 1; k < learnt.size(); k++) {
            if (!redundant(learnt[k])) {
                learnt[keep++] = learnt[k];
            }
        }
        learnt.resize(keep);
        for (Lit q : scratch) {
            seen[var_of(q)] = 0;
        }

        uint32_t bt = 0;
        if (learnt.size() > 1) {
            size_t best = 1;
            for (size_t k = 2; k < learnt.size(); k++) {
                if (level[var_of(learnt[k])] > level[var_of(learnt[best])]) {
                    best = k;
                }
            }
            std::swap(learnt[1], learnt[best]);
            bt = level[var_of(learnt[1])];
        }
        return bt;
    }

    void backtrack(uint32_t target) {
        if (decision_level() <= target) {
            return;
        }
        for (size_t k = trail.size(); k > trail_lim[target]; k--) {
            uint32_t v = var_of(trail[k - 1]);
            saved_phase[v] = static_cast<char>(trail[k - 1] & 1);
            assigns[v] = 0;
            reason[v] = kNoReason;
            order.insert(v);
        }
        trail.resize(trail_lim[target]);
        qhead = trail.size();
        trail_lim.resize(target);
    }

    Lit pick_branch() {
        while (!order.empty()) {
            uint32_t v = order.pop();
            if (assigns[v] == 0) {
                return 2 * v + static_cast<Lit>(saved_phase[v]);
            }
        }
        return kUndefLit;
    }

    void add_clause(std::span<const Literal> clause) {
        if (!ok) {
            return;
        }
        backtrack(0);
        model.clear();
        std::vector<Lit> c;
        c.reserve(clause.size());
        for (Literal l : clause) {
            if (l == 0) {
                throw std::invalid_argument("literal 0 is not a variable");
            }
            ensure_var(static_cast<uint32_t>(std::abs(l)) - 1);
            c.push_back(to_lit(l));
        }
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        size_t keep = 0;
        for (size_t k = 0; k < c.size(); k++) {
            if (k + 1 < c.size() && c[k + 1] == negate(c[k])) {
                return;  // tautology
            }
            int8_t v = value(c[k]);
            if (v == 1) {
                return;
            }
            if (v == 0) {
                c[keep++] = c[k];
            }
        }
        c.resize(keep);
        if (c.empty()) {
            ok = false;
            return;
        }
        if (c.size() == 1) {
            enqueue(c[0], kNoReason);
            if (propagate() != kNoReason) {
                ok = false;
            }
            return;
        }
        attach(alloc(c));
    }

    SolveResult solve() {
        model.clear();
        last_conflicts = 0;
        if (!ok) {
            return SolveResult::unsat;
        }
        backtrack(0);
        std::vector<Lit> learnt;
        uint32_t restart = 0;
        double budget = luby(2.0, restart) * 100;
        while (true) {
            CRef conflict = propagate();
            if (conflict != kNoReason) {
                last_conflicts++;
                budget -= 1;
                if (decision_level() == 0) {
                    ok = false;
                    return SolveResult::unsat;
                }
                uint32_t bt = analyze(conflict, learnt);
                backtrack(bt);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], kNoReason);
                } else {
                    CRef cref = alloc(learnt);
                    attach(cref);
                    enqueue(learnt[0], cref);
                }
                var_inc /= 0.95;
                continue;
            }
            if (budget <= 0) {
                backtrack(0);
                restart++;
                budget = luby(2.0, restart) * 100;
                continue;
            }
            Lit next = pick_branch();
            if (next == kUndefLit) {
                model.assign(num_vars() + size_t{1}, false);
                for (uint32_t v = 0; v < num_vars(); v++) {
                    model[v + 1] = assigns[v] == 1;
                }
                backtrack(0);
                return SolveResult::sat;
            }
            total_decisions++;
            trail_lim.push_back(trail.size());
            enqueue(next, kNoReason);
        }
    }
};

CdclSolver::CdclSolver() : impl_(std::make_unique<Impl>()) {
}
CdclSolver::~CdclSolver() = default;
CdclSolver::CdclSolver(CdclSolver &&) noexcept = default;
CdclSolver &CdclSolver::operator=(CdclSolver &&) noexcept = default;

void CdclSolver::add_clause(std::span<const Literal> clause) {
    impl_->add_clause(clause);
}

SolveResult CdclSolver::solve() {
    return impl_->solve();
}

bool CdclSolver::model_value(Literal var) const {
    if (impl_->model.empty()) {
        throw std::logic_error("model_value: no model (solve() did not return sat since the last change)");
    }
    size_t v = static_cast<size_t>(std::abs(var));
    return v < impl_->model.size() && impl_->model[v];
}

uint32_t CdclSolver::num_vars() const {
    return impl_->num_vars();
}

std::optional<uint64_t> CdclSolver::conflicts() const {
    return impl_->last_conflicts;
}

uint64_t CdclSolver::decisions() const {
    return impl_->total_decisions;
}

uint64_t CdclSolver::propagations() const {
    return impl_->total_propagations;
}

}  // namespace qsat
