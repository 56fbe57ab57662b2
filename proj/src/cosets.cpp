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

#include "tracecode/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tracecode/errors.hpp"

namespace tracecode {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 24;

void check_qn(std::uint64_t q, std::uint64_t n) {
    if (n < 2) throw PreconditionError("n must be greater than 1");
    if (q < 2) throw PreconditionError("q must be at least 2");
    if (n > kMaxModulus) throw PreconditionError("n is too large for a coset table");
    if (std::gcd(q, n) != 1) {
        throw PreconditionError("gcd(q, n) = " + std::to_string(std::gcd(q, n)) + ", expected 1");
    }
}

}  // namespace

std::uint64_t order_mod(std::uint64_t q, std::uint64_t n) {
    check_qn(q, n);
    const std::uint64_t step = q % n;
    std::uint64_t v = step, m = 1;
    while (v != 1) {
        v = v * step % n;
        ++m;
    }
    return m;
}

CosetTable::CosetTable(std::uint64_t q, std::uint64_t n) : q_(q), n_(n), m_(order_mod(q, n)) {
    constexpr CosetId kUnset = static_cast<CosetId>(-1);
    index_.assign(n, kUnset);
    const std::uint64_t step = q % n;
    for (std::uint64_t a = 0; a < n; ++a) {
        if (index_[a] != kUnset) continue;
        Coset c;
        std::uint64_t x = a;
        do {
            c.elements.push_back(x);
            index_[x] = cosets_.size();
            x = x * step % n;
        } while (x != a);
        std::sort(c.elements.begin(), c.elements.end());
        if (m_ % c.size() != 0) throw VerificationError("coset size does not divide the order of q");
        cosets_.push_back(std::move(c));
    }
}

const Coset& CosetTable::coset(CosetId id) const {
    if (id >= cosets_.size()) throw PreconditionError("invalid coset id " + std::to_string(id));
    return cosets_[id];
}

std::shared_ptr<const CosetTable> compute_cosets(std::uint64_t q, std::uint64_t n) {
    return std::make_shared<const CosetTable>(q, n);
}

CosetId dual_coset(const CosetTable& table, CosetId id) {
    const std::uint64_t a = table.coset(id).min_rep();
    return table.id_of((table.n() - a) % table.n());
}

CosetFamily::CosetFamily(std::shared_ptr<const CosetTable> table, std::vector<CosetId> members)
    : table_(std::move(table)), members_(std::move(members)) {
    if (!table_) throw PreconditionError("family without a coset table");
    for (CosetId id : members_) {
        if (id >= table_->size()) throw PreconditionError("invalid coset id " + std::to_string(id));
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

CosetFamily CosetFamily::from_residues(std::shared_ptr<const CosetTable> table,
                                       std::span<const std::uint64_t> residues) {
    std::vector<CosetId> ids;
    for (auto r : residues) {
        if (r >= table->n()) {
            throw PreconditionError("residue " + std::to_string(r) + " outside Z_" + std::to_string(table->n()));
        }
        ids.push_back(table->id_of(r));
    }
    return CosetFamily(std::move(table), std::move(ids));
}

CosetFamily CosetFamily::all(std::shared_ptr<const CosetTable> table) {
    std::vector<CosetId> ids(table->size());
    std::iota(ids.begin(), ids.end(), CosetId{0});
    return CosetFamily(std::move(table), std::move(ids));
}

bool CosetFamily::contains(CosetId id) const { return std::binary_search(members_.begin(), members_.end(), id); }

std::size_t CosetFamily::dimension() const {
    std::size_t total = 0;
    for (CosetId id : members_) total += table_->coset(id).size();
    return total;
}

bool CosetFamily::is_subset_of(const CosetFamily& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

std::vector<std::vector<std::uint64_t>> CosetFamily::as_sets() const {
    std::vector<std::vector<std::uint64_t>> out;
    for (CosetId id : members_) out.push_back(table_->coset(id).elements);
    return out;
}

std::vector<std::uint64_t> CosetFamily::representatives() const {
    std::vector<std::uint64_t> out;
    for (CosetId id : members_) out.push_back(table_->coset(id).min_rep());
    return out;
}

bool operator==(const CosetFamily& a, const CosetFamily& b) {
    return (a.table_ == b.table_ || (a.table_->q() == b.table_->q() && a.table_->n() == b.table_->n())) &&
           a.members_ == b.members_;
}

CosetFamily scale_family(const CosetFamily& family, std::uint64_t ell) {
    const auto& table = family.table();
    std::vector<CosetId> ids;
    for (CosetId id : family.members()) {
        const std::uint64_t a = table.coset(id).min_rep();
        ids.push_back(table.id_of(a * (ell % table.n()) % table.n()));
    }
    return CosetFamily(family.table_ptr(), std::move(ids));
}

CosetFamily dual_family(const CosetFamily& family) {
    std::vector<CosetId> ids;
    for (CosetId id : family.members()) ids.push_back(dual_coset(family.table(), id));
    return CosetFamily(family.table_ptr(), std::move(ids));
}

CosetFamily family_difference(const CosetFamily& a, const CosetFamily& b) {
    std::vector<CosetId> ids;
    std::set_difference(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(ids));
    return CosetFamily(a.table_ptr(), std::move(ids));
}

namespace {
CosetFamily complement_plus_zero(const CosetFamily& excluded) {
    CosetFamily rest = family_difference(CosetFamily::all(excluded.table_ptr()), excluded);
    std::vector<CosetId> ids = rest.members();
    ids.push_back(0);
    return CosetFamily(excluded.table_ptr(), std::move(ids));
}

void require_zero(const CosetFamily& family) {
    if (!family.contains_zero()) throw PreconditionError("the family must contain the coset {0}");
}
}  // namespace

CosetFamily family_R(const CosetFamily& family) {
    require_zero(family);
    return complement_plus_zero(dual_family(family));
}

CosetFamily family_T(const CosetFamily& family, std::uint64_t ell) {
    require_zero(family);
    return complement_plus_zero(dual_family(scale_family(family, ell)));
}

std::uint64_t max_degree(const CosetFamily& family) {
    if (family.empty()) throw PreconditionError("max_degree of an empty family");
    std::uint64_t d = 0;
    for (CosetId id : family.members()) d = std::max(d, family.table().coset(id).max_elem());
    return d;
}

std::string format_coset(const Coset& coset) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < coset.elements.size(); ++i) {
        if (i) out << ',';
        out << coset.elements[i];
    }
    out << '}';
    return out.str();
}

std::string coset_table_text(const CosetTable& table, std::size_t columns) {
    if (columns == 0) columns = 1;
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (const auto& c : table.cosets()) {
        cells.push_back(format_coset(c));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const bool last_in_row = (i % columns == columns - 1) || i + 1 == cells.size();
        out << cells[i];
        if (!last_in_row) out << std::string(width - cells[i].size() + 2, ' ');
        if (last_in_row) out << '\n';
    }
    return out.str();
}

}  // namespace tracecode
