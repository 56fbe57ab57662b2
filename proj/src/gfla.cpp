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

#include "tracecode/gfla.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "tracecode/errors.hpp"

namespace tracecode {

SymbolField::SymbolField(std::shared_ptr<const SubfieldEmbedding> embedding)
    : embedding_(std::move(embedding)), q_(embedding_->size()), p_(embedding_->field()->characteristic()) {
    if (q_ > kMaxSymbolFieldSize) {
        throw PreconditionError("symbol alphabets are limited to 256 elements, got " + std::to_string(q_));
    }
    const FieldCtx& big = *embedding_->field();
    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    auto project = [&](Elem x) {
        auto s = embedding_->project(x);
        if (!s) throw VerificationError("symbol arithmetic left the subfield");
        return static_cast<Symbol>(*s);
    };
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Elem ea = embedding_->embed(a);
        neg_[a] = project(big.neg(ea));
        if (a != 0) inv_[a] = project(big.inv(ea));
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Elem eb = embedding_->embed(b);
            add_[a * q_ + b] = project(big.add(ea, eb));
            mul_[a * q_ + b] = project(big.mul(ea, eb));
        }
    }
}

Symbol SymbolField::inv(Symbol a) const {
    if (a == 0) throw PreconditionError("inversion of zero");
    return inv_[a];
}

Symbol SymbolField::pow(Symbol a, std::uint64_t k) const {
    Symbol result = 1, base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::shared_ptr<const SymbolField> make_symbol_field(std::shared_ptr<const FieldCtx> field, std::uint64_t q) {
    return std::make_shared<const SymbolField>(std::make_shared<const SubfieldEmbedding>(std::move(field), q));
}

GFMatrix::GFMatrix(std::shared_ptr<const SymbolField> field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw PreconditionError("matrix without a field");
}

GFMatrix GFMatrix::from_rows(std::shared_ptr<const SymbolField> field, const std::vector<std::vector<Symbol>>& rows,
                             std::size_t cols) {
    GFMatrix m(std::move(field), 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

void GFMatrix::set(std::size_t r, std::size_t c, Symbol v) {
    if (v >= field_->size()) throw PreconditionError("symbol outside the field");
    data_[r * cols_ + c] = v;
}

void GFMatrix::append_row(std::span<const Symbol> values) {
    if (values.size() != cols_) throw PreconditionError("row length mismatch");
    for (Symbol v : values) {
        if (v >= field_->size()) throw PreconditionError("symbol outside the field");
    }
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool operator==(const GFMatrix& a, const GFMatrix& b) {
    return a.field_->size() == b.field_->size() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowReduction rank_and_rref(const GFMatrix& m) {
    const SymbolField& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    GFMatrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && work.at(pivot, c) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            auto a = work.row(pivot), b = work.row(rank);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = work.row(rank);
        const Symbol scale = f.inv(prow[c]);
        for (auto& v : prow) v = f.mul(v, scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const Symbol factor = work.at(r, c);
            if (factor == 0) continue;
            auto target = work.row(r);
            const Symbol* mul_row = f.mul_row(f.neg(factor));
            for (std::size_t k = c; k < cols; ++k) target[k] = f.add(target[k], mul_row[prow[k]]);
        }
        pivots.push_back(c);
        ++rank;
    }
    GFMatrix reduced(m.field_ptr(), 0, cols);
    for (std::size_t r = 0; r < rank; ++r) reduced.append_row(work.row(r));
    return RowReduction{rank, std::move(reduced), std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rank_and_rref(m).rank; }

GFMatrix nullspace(const GFMatrix& m) {
    const SymbolField& f = m.field();
    const RowReduction red = rank_and_rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivots) is_pivot[c] = true;
    GFMatrix out(m.field_ptr(), 0, m.cols());
    std::vector<Symbol> v(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.rref.at(i, free));
        out.append_row(v);
    }
    return out;
}

bool same_row_space(const GFMatrix& a, const GFMatrix& b) {
    if (a.cols() != b.cols() || a.field().size() != b.field().size()) return false;
    return rank_and_rref(a).rref == rank_and_rref(b).rref;
}

GFMatrix entrywise_power(const GFMatrix& m, std::uint64_t k) {
    GFMatrix out(m.field_ptr(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.field().pow(m.at(r, c), k));
    }
    return out;
}

std::vector<Symbol> encode(const GFMatrix& g, std::span<const Symbol> message) {
    if (message.size() != g.rows()) throw PreconditionError("message length mismatch");
    const SymbolField& f = g.field();
    std::vector<Symbol> word(g.cols(), 0);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (message[r] == 0) continue;
        const Symbol* mul_row = f.mul_row(message[r]);
        auto row = g.row(r);
        for (std::size_t c = 0; c < g.cols(); ++c) word[c] = f.add(word[c], mul_row[row[c]]);
    }
    return word;
}

std::size_t hamming_weight(std::span<const Symbol> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Symbol s) { return s != 0; }));
}

std::string InnerProduct::name() const {
    return kind == Kind::euclidean ? "euclidean" : "hermitian(" + std::to_string(ell) + ")";
}

bool gram_is_zero(const GFMatrix& a, const GFMatrix& b, InnerProduct product) {
    if (a.cols() != b.cols()) throw PreconditionError("gram product of matrices with different lengths");
    if (a.field().size() != b.field().size()) throw PreconditionError("gram product across fields");
    const SymbolField& f = a.field();
    if (product.kind == InnerProduct::Kind::hermitian) {
        if (product.ell < 2 || product.ell * product.ell != f.size()) {
            throw PreconditionError("hermitian product needs q = ell^2 with ell >= 2");
        }
    }
    const GFMatrix left = product.kind == InnerProduct::Kind::hermitian ? entrywise_power(a, product.ell) : a;
    for (std::size_t i = 0; i < left.rows(); ++i) {
        auto u = left.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            auto v = b.row(j);
            Symbol acc = 0;
            for (std::size_t c = 0; c < u.size(); ++c) acc = f.add(acc, f.mul(u[c], v[c]));
            if (acc != 0) return false;
        }
    }
    return true;
}

std::string method_name(DistanceCertificate::Method method) {
    return method == DistanceCertificate::Method::exhaustive ? "exhaustive" : "sampled";
}

std::optional<std::uint64_t> nonzero_codeword_count(std::uint32_t q, std::size_t k) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > UINT64_MAX / q) return std::nullopt;
        total *= q;
    }
    return total - 1;
}

CodewordWalker::CodewordWalker(const GFMatrix& g, Symbol lead)
    : field_(&g.field()),
      cols_(g.cols()),
      free_digits_(g.rows() == 0 ? 0 : g.rows() - 1),
      q_(g.field().size()),
      xor_add_(g.field().characteristic() == 2) {
    if (g.rows() == 0) throw PreconditionError("cannot walk the codewords of an empty matrix");
    if (lead >= q_) throw PreconditionError("lead symbol outside the field");
    deltas_.assign(free_digits_ * q_ * cols_, 0);
    for (std::size_t j = 0; j < free_digits_; ++j) {
        auto row = g.row(j + 1);
        for (std::uint32_t s = 0; s < q_; ++s) {
            const Symbol step = field_->sub(static_cast<Symbol>((s + 1) % q_), static_cast<Symbol>(s));
            const Symbol* mul_row = field_->mul_row(step);
            Symbol* out = &deltas_[(j * q_ + s) * cols_];
            for (std::size_t c = 0; c < cols_; ++c) out[c] = mul_row[row[c]];
        }
    }
    counter_.assign(free_digits_, 0);
    message_.assign(g.rows(), 0);
    message_[0] = lead;
    codeword_.assign(cols_, 0);
    const Symbol* mul_row = field_->mul_row(lead);
    auto row0 = g.row(0);
    for (std::size_t c = 0; c < cols_; ++c) codeword_[c] = mul_row[row0[c]];
}

std::size_t CodewordWalker::step_digit() {
    std::size_t j = 0;
    while (j < free_digits_ && counter_[j] == q_ - 1) ++j;
    if (j == free_digits_) return free_digits_;
    for (std::size_t i = 0; i < j; ++i) counter_[i] = 0;
    ++counter_[j];
    return j;
}

bool CodewordWalker::next() {
    bool advanced = false;
    next_weight(advanced);
    return advanced;
}

std::size_t CodewordWalker::next_weight(bool& advanced) {
    const std::size_t j = step_digit();
    if (j == free_digits_) {
        advanced = false;
        return 0;
    }
    advanced = true;
    Symbol& digit = message_[j + 1];
    const Symbol* delta = &deltas_[(j * q_ + digit) * cols_];
    digit = static_cast<Symbol>((digit + 1) % q_);
    std::size_t weight = 0;
    Symbol* word = codeword_.data();
    if (xor_add_) {
        for (std::size_t c = 0; c < cols_; ++c) {
            word[c] ^= delta[c];
            weight += word[c] != 0;
        }
    } else {
        for (std::size_t c = 0; c < cols_; ++c) {
            word[c] = field_->add(word[c], delta[c]);
            weight += word[c] != 0;
        }
    }
    return weight;
}

namespace {

struct PartResult {
    std::size_t best = SIZE_MAX;
    std::uint64_t enumerated = 0;
    std::vector<Symbol> witness;
};

PartResult walk_part(const GFMatrix& g, Symbol lead) {
    PartResult out;
    CodewordWalker walker(g, lead);
    if (lead != 0) {
        out.enumerated = 1;
        out.best = hamming_weight(walker.codeword());
        out.witness.assign(walker.codeword().begin(), walker.codeword().end());
    }
    bool advanced = true;
    while (true) {
        const std::size_t w = walker.next_weight(advanced);
        if (!advanced) break;
        ++out.enumerated;
        if (w < out.best) {
            out.best = w;
            out.witness.assign(walker.codeword().begin(), walker.codeword().end());
        }
    }
    return out;
}

}  // namespace

DistanceCertificate min_distance_exhaustive(const GFMatrix& g, const EnumerationOptions& options) {
    if (g.rows() == 0) throw PreconditionError("the zero code has no minimum distance");
    if (rank(g) != g.rows()) throw PreconditionError("generator matrix is rank deficient");
    const std::uint32_t q = g.field().size();
    const auto total = nonzero_codeword_count(q, g.rows());
    if (!total || *total > options.budget) {
        throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(g.rows()) +
                             " - 1 codewords exceeds the budget of " + std::to_string(options.budget));
    }

    std::vector<PartResult> parts(q);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, q));
    if (workers == 1) {
        for (std::uint32_t lead = 0; lead < q; ++lead) parts[lead] = walk_part(g, static_cast<Symbol>(lead));
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (std::uint32_t lead = next++; lead < q; lead = next++) {
                    parts[lead] = walk_part(g, static_cast<Symbol>(lead));
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    DistanceCertificate cert;
    cert.method = DistanceCertificate::Method::exhaustive;
    std::size_t best = SIZE_MAX;
    for (auto& part : parts) {
        cert.enumerated += part.enumerated;
        if (part.best < best) {
            best = part.best;
            cert.witness = std::move(part.witness);
        }
    }
    if (cert.enumerated != *total) throw VerificationError("enumeration visited the wrong number of codewords");
    cert.value = best;
    return cert;
}

DistanceCertificate min_distance_sampled(const GFMatrix& g, std::uint64_t samples, std::uint64_t seed) {
    if (g.rows() == 0) throw PreconditionError("the zero code has no minimum distance");
    if (samples == 0) throw PreconditionError("sampling needs at least one codeword");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> symbol(0, g.field().size() - 1);
    DistanceCertificate cert;
    cert.method = DistanceCertificate::Method::sampled;
    cert.value = SIZE_MAX;
    std::vector<Symbol> message(g.rows());
    for (std::uint64_t s = 0; s < samples; ++s) {
        do {
            for (auto& m : message) m = static_cast<Symbol>(symbol(rng));
        } while (std::all_of(message.begin(), message.end(), [](Symbol m) { return m == 0; }));
        auto word = encode(g, message);
        const std::size_t w = hamming_weight(word);
        ++cert.enumerated;
        if (w < cert.value) {
            cert.value = w;
            cert.witness = std::move(word);
        }
    }
    return cert;
}

std::string to_text_grid(const GFMatrix& m) {
    std::ostringstream out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << static_cast<unsigned>(m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace tracecode
