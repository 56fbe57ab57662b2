// Copyright 2026 The tracecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRACECODE_GFLA_HPP
#define TRACECODE_GFLA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tracecode/galois.hpp"

namespace tracecode {

/// An F_q symbol, numbered as in `SubfieldEmbedding`.
using Symbol = std::uint8_t;

inline constexpr std::uint32_t kMaxSymbolFieldSize = 256;

/// Full operation tables for a small field F_q (q <= 256), derived from its
/// embedding in a larger field.
class SymbolField {
 public:
    explicit SymbolField(std::shared_ptr<const SubfieldEmbedding> embedding);

    std::uint32_t size() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    const SubfieldEmbedding& embedding() const { return *embedding_; }

    Symbol add(Symbol a, Symbol b) const { return add_[a * q_ + b]; }
    Symbol sub(Symbol a, Symbol b) const { return add_[a * q_ + neg_[b]]; }
    Symbol neg(Symbol a) const { return neg_[a]; }
    Symbol mul(Symbol a, Symbol b) const { return mul_[a * q_ + b]; }
    Symbol inv(Symbol a) const;
    Symbol pow(Symbol a, std::uint64_t k) const;

    /// Row of the addition table for `a`; add_row(a)[b] == add(a, b).
    const Symbol* add_row(Symbol a) const { return &add_[a * q_]; }
    const Symbol* mul_row(Symbol a) const { return &mul_[a * q_]; }

 private:
    std::shared_ptr<const SubfieldEmbedding> embedding_;
    std::uint32_t q_, p_;
    std::vector<Symbol> add_, mul_, neg_, inv_;
};

/// Canonical symbol field for F_q embedded in `field`.
std::shared_ptr<const SymbolField> make_symbol_field(std::shared_ptr<const FieldCtx> field, std::uint64_t q);

/// Dense row-major matrix over a `SymbolField`.
class GFMatrix {
 public:
    GFMatrix(std::shared_ptr<const SymbolField> field, std::size_t rows, std::size_t cols);
    static GFMatrix from_rows(std::shared_ptr<const SymbolField> field, const std::vector<std::vector<Symbol>>& rows,
                              std::size_t cols);

    const SymbolField& field() const { return *field_; }
    const std::shared_ptr<const SymbolField>& field_ptr() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Symbol v);
    std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Symbol> values);

    friend bool operator==(const GFMatrix& a, const GFMatrix& b);

 private:
    std::shared_ptr<const SymbolField> field_;
    std::size_t rows_, cols_;
    std::vector<Symbol> data_;
};

struct RowReduction {
    std::size_t rank = 0;
    GFMatrix rref;  // rank x cols, pivots normalized to 1
    std::vector<std::size_t> pivots;
};

/// Gaussian elimination to the unique reduced row echelon form.
RowReduction rank_and_rref(const GFMatrix& m);
std::size_t rank(const GFMatrix& m);
/// Rows spanning {v : M v = 0}, one per free column in ascending order.
GFMatrix nullspace(const GFMatrix& m);
bool same_row_space(const GFMatrix& a, const GFMatrix& b);
GFMatrix entrywise_power(const GFMatrix& m, std::uint64_t k);
/// message * g, computed directly.
std::vector<Symbol> encode(const GFMatrix& g, std::span<const Symbol> message);
std::size_t hamming_weight(std::span<const Symbol> word);

struct InnerProduct {
    enum class Kind { euclidean, hermitian };
    Kind kind = Kind::euclidean;
    std::uint64_t ell = 1;

    static InnerProduct euclidean() { return {}; }
    static InnerProduct hermitian(std::uint64_t ell) { return {Kind::hermitian, ell}; }
    std::string name() const;
};

/// True iff sum_i u_i^ell v_i (ell = 1 for euclidean) vanishes for every row
/// u of `a` and row v of `b`.
bool gram_is_zero(const GFMatrix& a, const GFMatrix& b, InnerProduct product);

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

struct EnumerationOptions {
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned threads = 1;
};

struct DistanceCertificate {
    enum class Method { exhaustive, sampled };
    Method method = Method::exhaustive;
    std::size_t value = 0;
    std::uint64_t enumerated = 0;
    std::vector<Symbol> witness;
};

std::string method_name(DistanceCertificate::Method method);

/// q^k - 1, or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> nonzero_codeword_count(std::uint32_t q, std::size_t k);

/// Exact minimum distance over all q^k - 1 nonzero codewords.
///
/// Messages are split on their first symbol; each part is walked in
/// minimal-change order, so every step adds one precomputed multiple of one
/// row. Ties resolve to the first codeword in (part, step) order, which makes
/// the witness independent of the thread count.
DistanceCertificate min_distance_exhaustive(const GFMatrix& g, const EnumerationOptions& options = {});

/// Minimum weight over `samples` random nonzero codewords: an upper bound.
DistanceCertificate min_distance_sampled(const GFMatrix& g, std::uint64_t samples, std::uint64_t seed);

/// Walks the codewords whose first message symbol is fixed, changing one
/// message symbol per step. Exposed for testing the incremental updates.
class CodewordWalker {
 public:
    CodewordWalker(const GFMatrix& g, Symbol lead);

    std::span<const Symbol> message() const { return message_; }
    std::span<const Symbol> codeword() const { return codeword_; }
    /// Moves to the next message; returns false once the part is exhausted.
    bool next();
    /// `next()` that also returns the new codeword's weight (0 when exhausted).
    std::size_t next_weight(bool& advanced);

 private:
    std::size_t step_digit();

    const SymbolField* field_;
    std::size_t cols_, free_digits_;
    std::uint32_t q_;
    bool xor_add_;
    std::vector<Symbol> deltas_;  // [digit][symbol] -> (symbol+1 - symbol) * row
    std::vector<std::uint32_t> counter_;
    std::vector<Symbol> message_, codeword_;
};

std::string to_text_grid(const GFMatrix& m);

}  // namespace tracecode

#endif
