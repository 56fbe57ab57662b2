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

#ifndef TRACECODE_COSETS_HPP
#define TRACECODE_COSETS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace tracecode {

using CosetId = std::size_t;

/// One q-cyclotomic coset {a q^i mod n}.
struct Coset {
    std::vector<std::uint64_t> elements;  // sorted ascending
    std::uint64_t min_rep() const { return elements.front(); }
    std::uint64_t max_elem() const { return elements.back(); }
    std::size_t size() const { return elements.size(); }
};

/// Multiplicative order of q modulo n. Requires gcd(q, n) = 1 and n > 1.
std::uint64_t order_mod(std::uint64_t q, std::uint64_t n);

/// Partition of Z_n into q-cyclotomic cosets, ordered by minimum
/// representative. Coset id 0 is always {0}.
class CosetTable {
 public:
    CosetTable(std::uint64_t q, std::uint64_t n);

    std::uint64_t q() const { return q_; }
    std::uint64_t n() const { return n_; }
    /// Order of q modulo n.
    std::uint64_t m() const { return m_; }
    std::size_t size() const { return cosets_.size(); }
    const std::vector<Coset>& cosets() const { return cosets_; }
    const Coset& coset(CosetId id) const;
    /// Id of the coset containing `residue mod n`.
    CosetId id_of(std::uint64_t residue) const { return index_[residue % n_]; }

 private:
    std::uint64_t q_, n_, m_;
    std::vector<Coset> cosets_;
    std::vector<CosetId> index_;
};

std::shared_ptr<const CosetTable> compute_cosets(std::uint64_t q, std::uint64_t n);

/// The coset holding the negatives mod n of `id`'s elements.
CosetId dual_coset(const CosetTable& table, CosetId id);

/// A set of cosets from one table. Members are kept sorted and unique.
class CosetFamily {
 public:
    CosetFamily(std::shared_ptr<const CosetTable> table, std::vector<CosetId> members);

    /// Family of the cosets containing each residue (duplicates collapse).
    static CosetFamily from_residues(std::shared_ptr<const CosetTable> table, std::span<const std::uint64_t> residues);
    /// Every coset of the table.
    static CosetFamily all(std::shared_ptr<const CosetTable> table);

    const CosetTable& table() const { return *table_; }
    const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
    const std::vector<CosetId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(CosetId id) const;
    bool contains_zero() const { return contains(0); }
    /// Sum of member sizes, the F_q-dimension of the evaluation code.
    std::size_t dimension() const;
    bool is_subset_of(const CosetFamily& other) const;
    /// Members with their elements, in member order.
    std::vector<std::vector<std::uint64_t>> as_sets() const;
    /// Minimum representatives of the members.
    std::vector<std::uint64_t> representatives() const;

    friend bool operator==(const CosetFamily& a, const CosetFamily& b);

 private:
    std::shared_ptr<const CosetTable> table_;
    std::vector<CosetId> members_;
};

/// {S_{a ell}} for members S_a.
CosetFamily scale_family(const CosetFamily& family, std::uint64_t ell);
/// Member-wise dual.
CosetFamily dual_family(const CosetFamily& family);
/// Members of `a` not in `b`.
CosetFamily family_difference(const CosetFamily& a, const CosetFamily& b);
/// {{0}} plus every coset outside the dual family. Requires {0} in `family`.
CosetFamily family_R(const CosetFamily& family);
/// {{0}} plus every coset outside the dual of the ell-scaled family.
CosetFamily family_T(const CosetFamily& family, std::uint64_t ell);
/// Largest element over all members; 0 for {{0}}. Throws on an empty family.
std::uint64_t max_degree(const CosetFamily& family);

/// "{1,4,13,16}"
std::string format_coset(const Coset& coset);
/// Cosets laid out in rows of `columns` cells, as the tables are usually printed.
std::string coset_table_text(const CosetTable& table, std::size_t columns = 3);

}  // namespace tracecode

#endif
