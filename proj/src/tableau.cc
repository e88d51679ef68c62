#include "qsat/tableau.h"

#include <cstring>
#include <stdexcept>

namespace qsat {

namespace {

inline void put_bit(std::vector<uint64_t> &words, size_t index, bool v) {
    uint64_t mask = uint64_t{1} << (index % 64);
    if (v) {
        words[index / 64] |= mask;
    } else {
        words[index / 64] &= ~mask;
    }
}

}  // namespace

PauliLabel PauliLabel::parse(std::string_view text) {
    PauliLabel out;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        out.negative = text[0] == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli label");
    }
    for (char c : text) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
        }
        out.letters.push_back(c == '_' ? 'I' : c);
    }
    return out;
}

std::string PauliLabel::str() const {
    return (negative ? "-" : "+") + letters;
}

Tableau::Tableau(size_t num_qubits)
    : n_(num_qubits),
      words_((num_qubits + 63) / 64),
      xs_(num_qubits * words_, 0),
      zs_(num_qubits * words_, 0),
      signs_(words_, 0) {
}

Tableau Tableau::from_basis_state(std::string_view bits) {
    std::vector<char> values;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis state must be a string of 0/1, got '" + std::string(bits) + "'");
        }
        values.push_back(c == '1');
    }
    if (values.empty()) {
        throw std::invalid_argument("basis state must have at least one qubit");
    }
    Tableau t(values.size());
    for (size_t q = 0; q < values.size(); q++) {
        t.set_z(q, q, true);
        t.set_sign(q, values[q] != 0);
    }
    return t;
}

Tableau Tableau::from_basis_state(std::span<const bool> bits) {
    std::string text;
    for (bool b : bits) {
        text.push_back(b ? '1' : '0');
    }
    return from_basis_state(text);
}

Tableau Tableau::from_labels(std::span<const std::string> labels) {
    if (labels.empty()) {
        throw std::invalid_argument("tableau needs at least one generator");
    }
    size_t n = labels.size();
    Tableau t(n);
    for (size_t row = 0; row < n; row++) {
        PauliLabel p = PauliLabel::parse(labels[row]);
        if (p.letters.size() != n) {
            throw std::invalid_argument("generator '" + labels[row] + "' has the wrong number of qubits");
        }
        for (size_t q = 0; q < n; q++) {
            char c = p.letters[q];
            t.set_x(row, q, c == 'X' || c == 'Y');
            t.set_z(row, q, c == 'Z' || c == 'Y');
        }
        t.set_sign(row, p.negative);
    }
    return t;
}

Tableau Tableau::from_labels(std::initializer_list<std::string_view> labels) {
    std::vector<std::string> owned(labels.begin(), labels.end());
    return from_labels(std::span<const std::string>(owned));
}

void Tableau::set_x(size_t row, size_t qubit, bool v) {
    put_bit(xs_, row * words_ * 64 + qubit, v);
}

void Tableau::set_z(size_t row, size_t qubit, bool v) {
    put_bit(zs_, row * words_ * 64 + qubit, v);
}

void Tableau::set_sign(size_t row, bool v) {
    put_bit(signs_, row, v);
}

PauliLabel Tableau::row_label(size_t row) const {
    PauliLabel p;
    p.negative = sign(row);
    p.letters.reserve(n_);
    for (size_t q = 0; q < n_; q++) {
        static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
        p.letters.push_back(kLetters[x(row, q) | (z(row, q) << 1)]);
    }
    return p;
}

std::vector<std::string> Tableau::labels() const {
    std::vector<std::string> out;
    for (size_t row = 0; row < n_; row++) {
        out.push_back(row_label(row).str());
    }
    return out;
}

std::string Tableau::str() const {
    std::string out;
    for (size_t row = 0; row < n_; row++) {
        out += row_label(row).str();
        out += '\n';
    }
    return out;
}

void Tableau::check_qubit(size_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

// The single-qubit updates below touch one bit column. With the word and mask
// hoisted out, each row costs a handful of ALU ops.

void Tableau::apply_h(size_t q) {
    check_qubit(q);
    size_t w = q / 64;
    unsigned b = q % 64;
    for (size_t row = 0; row < n_; row++) {
        uint64_t &xw = xs_[row * words_ + w];
        uint64_t &zw = zs_[row * words_ + w];
        uint64_t xb = (xw >> b) & 1;
        uint64_t zb = (zw >> b) & 1;
        signs_[row / 64] ^= (xb & zb) << (row % 64);
        uint64_t diff = (xb ^ zb) << b;
        xw ^= diff;
        zw ^= diff;
    }
}

void Tableau::apply_s(size_t q) {
    check_qubit(q);
    size_t w = q / 64;
    unsigned b = q % 64;
    for (size_t row = 0; row < n_; row++) {
        uint64_t xw = xs_[row * words_ + w];
        uint64_t &zw = zs_[row * words_ + w];
        uint64_t xb = (xw >> b) & 1;
        uint64_t zb = (zw >> b) & 1;
        signs_[row / 64] ^= (xb & zb) << (row % 64);
        zw ^= xb << b;
    }
}

// Pauli conjugation only flips signs: X anticommutes with rows carrying Z or Y
// on q, Z with rows carrying X or Y, Y with rows carrying X or Z.

void Tableau::apply_x(size_t q) {
    check_qubit(q);
    for (size_t row = 0; row < n_; row++) {
        signs_[row / 64] ^= uint64_t{z(row, q)} << (row % 64);
    }
}

void Tableau::apply_z(size_t q) {
    check_qubit(q);
    for (size_t row = 0; row < n_; row++) {
        signs_[row / 64] ^= uint64_t{x(row, q)} << (row % 64);
    }
}

void Tableau::apply_y(size_t q) {
    check_qubit(q);
    for (size_t row = 0; row < n_; row++) {
        signs_[row / 64] ^= uint64_t{x(row, q) != z(row, q)} << (row % 64);
    }
}

void Tableau::apply_cnot(size_t control, size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    size_t wc = control / 64, wt = target / 64;
    unsigned bc = control % 64, bt = target % 64;
    for (size_t row = 0; row < n_; row++) {
        uint64_t *xr = &xs_[row * words_];
        uint64_t *zr = &zs_[row * words_];
        uint64_t xc = (xr[wc] >> bc) & 1;
        uint64_t xt = (xr[wt] >> bt) & 1;
        uint64_t zc = (zr[wc] >> bc) & 1;
        uint64_t zt = (zr[wt] >> bt) & 1;
        signs_[row / 64] ^= (xc & zt & (xt ^ zc ^ 1)) << (row % 64);
        xr[wt] ^= xc << bt;
        zr[wc] ^= zt << bc;
    }
}

void Tableau::apply(const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            apply_h(g.target);
            break;
        case GateKind::S:
            apply_s(g.target);
            break;
        case GateKind::X:
            apply_x(g.target);
            break;
        case GateKind::Y:
            apply_y(g.target);
            break;
        case GateKind::Z:
            apply_z(g.target);
            break;
        case GateKind::CNOT:
            if (!g.control.has_value()) {
                throw std::invalid_argument("CNOT without control");
            }
            apply_cnot(*g.control, g.target);
            break;
    }
}

void Tableau::apply(const Circuit &c) {
    if (c.num_qubits != n_) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(c.num_qubits) + " qubits but tableau has " + std::to_string(n_));
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
}

void Tableau::row_multiply(size_t a, size_t b, const kernels::RowKernels &k) {
    if (a == b) {
        throw std::invalid_argument("row_multiply: a row cannot be multiplied by itself");
    }
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("row_multiply: row out of range");
    }
    unsigned exponent = k.row_mul(&xs_[a * words_], &zs_[a * words_], &xs_[b * words_], &zs_[b * words_], words_);
    if (exponent & 1) {
        throw std::logic_error("row_multiply: rows anticommute");
    }
    bool flip = sign(b) ^ (exponent == 2);
    signs_[a / 64] ^= uint64_t{flip} << (a % 64);
}

void Tableau::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    for (size_t w = 0; w < words_; w++) {
        std::swap(xs_[a * words_ + w], xs_[b * words_ + w]);
        std::swap(zs_[a * words_ + w], zs_[b * words_ + w]);
    }
    bool sa = sign(a), sb = sign(b);
    set_sign(a, sb);
    set_sign(b, sa);
}

bool Tableau::rows_commute(const kernels::RowKernels &k) const {
    for (size_t a = 0; a < n_; a++) {
        for (size_t b = a + 1; b < n_; b++) {
            if (k.anticommutes(&xs_[a * words_], &zs_[a * words_], &xs_[b * words_], &zs_[b * words_], words_)) {
                return false;
            }
        }
    }
    return true;
}

bool Tableau::rows_independent() const {
    // Plain GF(2) elimination over (x | z); signs are irrelevant here.
    size_t stride = 2 * words_;
    std::vector<uint64_t> m(n_ * stride);
    for (size_t row = 0; row < n_; row++) {
        std::memcpy(&m[row * stride], &xs_[row * words_], words_ * sizeof(uint64_t));
        std::memcpy(&m[row * stride + words_], &zs_[row * words_], words_ * sizeof(uint64_t));
    }
    size_t rank = 0;
    for (size_t col = 0; col < stride * 64 && rank < n_; col++) {
        size_t w = col / 64;
        uint64_t mask = uint64_t{1} << (col % 64);
        size_t pivot = rank;
        while (pivot < n_ && !(m[pivot * stride + w] & mask)) {
            pivot++;
        }
        if (pivot == n_) {
            continue;
        }
        for (size_t k = 0; k < stride; k++) {
            std::swap(m[pivot * stride + k], m[rank * stride + k]);
        }
        for (size_t row = rank + 1; row < n_; row++) {
            if (m[row * stride + w] & mask) {
                for (size_t k = 0; k < stride; k++) {
                    m[row * stride + k] ^= m[rank * stride + k];
                }
            }
        }
        rank++;
    }
    return rank == n_;
}

void Tableau::validate() const {
    if (!rows_independent()) {
        throw std::logic_error("tableau rows are linearly dependent");
    }
    if (!rows_commute()) {
        throw std::logic_error("tableau rows do not pairwise commute");
    }
}

std::string Tableau::key() const {
    std::string out;
    size_t bytes = (xs_.size() + zs_.size() + signs_.size()) * sizeof(uint64_t);
    out.resize(bytes);
    char *p = out.data();
    std::memcpy(p, xs_.data(), xs_.size() * sizeof(uint64_t));
    p += xs_.size() * sizeof(uint64_t);
    std::memcpy(p, zs_.data(), zs_.size() * sizeof(uint64_t));
    p += zs_.size() * sizeof(uint64_t);
    std::memcpy(p, signs_.data(), signs_.size() * sizeof(uint64_t));
    return out;
}

Tableau apply_gate(Tableau t, const Gate &g) {
    t.apply(g);
    return t;
}

Tableau canonicalize(Tableau t, const kernels::RowKernels &k) {
    size_t n = t.num_qubits();
    size_t pivot_row = 0;
    // Columns in order x_0..x_{n-1}, z_0..z_{n-1}.
    for (size_t col = 0; col < 2 * n && pivot_row < n; col++) {
        bool is_x = col < n;
        size_t q = is_x ? col : col - n;
        auto has = [&](size_t row) {
            return is_x ? t.x(row, q) : t.z(row, q);
        };
        size_t found = pivot_row;
        while (found < n && !has(found)) {
            found++;
        }
        if (found == n) {
            continue;
        }
        t.swap_rows(found, pivot_row);
        for (size_t row = 0; row < n; row++) {
            if (row != pivot_row && has(row)) {
                t.row_multiply(row, pivot_row, k);
            }
        }
        pivot_row++;
    }
    if (pivot_row != n) {
        throw std::logic_error("canonicalize: tableau rows are linearly dependent");
    }
    return t;
}

}  // namespace qsat
