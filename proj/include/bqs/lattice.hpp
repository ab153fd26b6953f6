// Copyright (c) the bqs contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bqs {

/// Exponent of a monomial z^k: a tuple of N >= 1 nonnegative integers.
///
/// Values are immutable after construction and safe to share across threads.
class MultiIndex {
  public:
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zeros(int dim);
    static MultiIndex ones(int dim);
    static MultiIndex constant(int dim, int value);

    int dim() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    /// Total degree |k| = k_1 + ... + k_N.
    int degree() const;
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    /// Rendering like "(2,0,1)".
    std::string str() const;

  private:
    std::vector<int> entries_;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);

/// Strict weak order: by total degree, ties broken lexicographically.
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

struct GradedLex {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_less(a, b);
    }
};

/// Displacement of a monomial shift; every entry >= 1. All entries equal to
/// one is the trivial regime (the decomposition collapses to one class).
class ShiftExponent {
  public:
    explicit ShiftExponent(MultiIndex n);
    ShiftExponent(std::initializer_list<int> entries);

    const MultiIndex& index() const { return n_; }
    int dim() const { return n_.dim(); }
    int operator[](int i) const { return n_[i]; }
    bool trivial() const;
    int min_entry() const;
    /// Smallest coordinate attaining min_entry().
    int argmin() const;
    /// Number of residue classes, prod n_i.
    std::int64_t class_count() const;

    friend bool operator==(const ShiftExponent&, const ShiftExponent&) = default;

  private:
    MultiIndex n_;
};

/// Residue j with 0 <= j < n componentwise; labels one class of the
/// decomposition l = nk + j.
class ResidueClass {
  public:
    ResidueClass(MultiIndex j, const ShiftExponent& n);

    const MultiIndex& index() const { return j_; }
    int dim() const { return j_.dim(); }
    int operator[](int i) const { return j_[i]; }

    friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

  private:
    MultiIndex j_;
};

struct Decomposition {
    MultiIndex k;
    ResidueClass j;
};

/// Unique split l = nk + j with 0 <= j < n componentwise.
Decomposition residue_decompose(const MultiIndex& l, const ShiftExponent& n);

/// Inverse of residue_decompose: returns nk + j.
MultiIndex compose_index(const MultiIndex& k, const ResidueClass& j,
                         const ShiftExponent& n);

/// All l with |l| <= max_degree, in graded lexicographic order.
/// The count is binomial(dim + max_degree, dim).
std::vector<MultiIndex> enumerate_upto(int dim, int max_degree);

/// All k with |nk + j| <= max_degree, in graded lexicographic order of k.
/// These parametrize the class basis within the truncation.
std::vector<MultiIndex> enumerate_class(const ShiftExponent& n,
                                        const ResidueClass& j, int max_degree);

/// Every residue class of n, in lexicographic (odometer) order of j.
std::vector<ResidueClass> all_classes(const ShiftExponent& n);

}  // namespace bqs
