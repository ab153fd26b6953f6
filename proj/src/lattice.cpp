// Copyright (c) the bqs contributors
// SPDX-License-Identifier: Apache-2.0
#include "bqs/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bqs {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("multi-index must have dimension >= 1");
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("multi-index entries must be >= 0");
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zeros(int dim) { return constant(dim, 0); }
MultiIndex MultiIndex::ones(int dim) { return constant(dim, 1); }

MultiIndex MultiIndex::constant(int dim, int value) {
    if (dim < 1) throw std::invalid_argument("multi-index must have dimension >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), value));
}

int MultiIndex::degree() const {
    int total = 0;
    for (int e : entries_) total += e;
    return total;
}

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ',';
        os << entries_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

namespace {

void require_same_dim(const MultiIndex& a, const MultiIndex& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b);
    std::vector<int> out(a.entries());
    for (int i = 0; i < b.dim(); ++i) out[static_cast<std::size_t>(i)] += b[i];
    return MultiIndex(std::move(out));
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
    require_same_dim(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
}

ShiftExponent::ShiftExponent(MultiIndex n) : n_(std::move(n)) {
    for (int i = 0; i < n_.dim(); ++i)
        if (n_[i] < 1) throw std::invalid_argument("n entries must be >= 1");
}

ShiftExponent::ShiftExponent(std::initializer_list<int> entries)
    : ShiftExponent(MultiIndex(entries)) {}

bool ShiftExponent::trivial() const {
    for (int i = 0; i < n_.dim(); ++i)
        if (n_[i] != 1) return false;
    return true;
}

int ShiftExponent::min_entry() const { return n_[argmin()]; }

int ShiftExponent::argmin() const {
    int best = 0;
    for (int i = 1; i < n_.dim(); ++i)
        if (n_[i] < n_[best]) best = i;
    return best;
}

std::int64_t ShiftExponent::class_count() const {
    std::int64_t count = 1;
    for (int i = 0; i < n_.dim(); ++i) count *= n_[i];
    return count;
}

ResidueClass::ResidueClass(MultiIndex j, const ShiftExponent& n) : j_(std::move(j)) {
    if (j_.dim() != n.dim()) throw std::invalid_argument("dimension mismatch");
    for (int i = 0; i < j_.dim(); ++i)
        if (j_[i] >= n[i]) throw std::invalid_argument("j out of range for n");
}

Decomposition residue_decompose(const MultiIndex& l, const ShiftExponent& n) {
    if (l.dim() != n.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<int> k(static_cast<std::size_t>(l.dim()));
    std::vector<int> j(static_cast<std::size_t>(l.dim()));
    for (int i = 0; i < l.dim(); ++i) {
        k[static_cast<std::size_t>(i)] = l[i] / n[i];
        j[static_cast<std::size_t>(i)] = l[i] % n[i];
    }
    return Decomposition{MultiIndex(std::move(k)),
                         ResidueClass(MultiIndex(std::move(j)), n)};
}

MultiIndex compose_index(const MultiIndex& k, const ResidueClass& j,
                         const ShiftExponent& n) {
    if (k.dim() != n.dim() || j.dim() != n.dim())
        throw std::invalid_argument("dimension mismatch");
    std::vector<int> out(static_cast<std::size_t>(k.dim()));
    for (int i = 0; i < k.dim(); ++i)
        out[static_cast<std::size_t>(i)] = n[i] * k[i] + j[i];
    return MultiIndex(std::move(out));
}

namespace {

// Emits, in lexicographic order, every tail with the given exact degree.
void emit_fixed_degree(std::vector<int>& prefix, int positions_left, int degree,
                       std::vector<MultiIndex>& out) {
    if (positions_left == 1) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int head = 0; head <= degree; ++head) {
        prefix.push_back(head);
        emit_fixed_degree(prefix, positions_left - 1, degree - head, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_upto(int dim, int max_degree) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    for (int degree = 0; degree <= max_degree; ++degree)
        emit_fixed_degree(prefix, dim, degree, out);
    return out;
}

std::vector<MultiIndex> enumerate_class(const ShiftExponent& n,
                                        const ResidueClass& j, int max_degree) {
    if (j.dim() != n.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<MultiIndex> out;
    const int headroom = max_degree - j.index().degree();
    if (headroom < 0) return out;
    // |nk + j| = sum n_i k_i + |j|, so |k| can reach at most headroom.
    for (const MultiIndex& k : enumerate_upto(n.dim(), headroom)) {
        if (compose_index(k, j, n).degree() <= max_degree) out.push_back(k);
    }
    return out;
}

std::vector<ResidueClass> all_classes(const ShiftExponent& n) {
    std::vector<ResidueClass> out;
    std::vector<int> j(static_cast<std::size_t>(n.dim()), 0);
    while (true) {
        out.emplace_back(MultiIndex(j), n);
        int i = n.dim() - 1;
        while (i >= 0) {
            if (++j[static_cast<std::size_t>(i)] < n[i]) break;
            j[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

}  // namespace bqs
