/*
 * Copyright 2026 the acc workbench authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ACC_INTERFACE_HPP
#define ACC_INTERFACE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "acc/universe.hpp"

namespace acc {

// Multiplicities are arbitrary-precision: the interface group is torsion-free
// and unbounded, so no fixed-width type is safe under stress.
using Zint = boost::multiprecision::cpp_int;

// Signum, the only non-group operation the integer theory needs.
int signum(const Zint& k);

// The key of an active interface element f.m@g.
struct ActiveKey {
    Locus callee;
    Method method;
    Locus caller;
    auto operator<=>(const ActiveKey&) const = default;
};

// Canonical form of the interface group: a sparse multiset over active
// interface elements with nonzero integer multiplicities. Two interfaces are
// equal iff their maps are equal; the group laws hold definitionally.
class Interface {
public:
    Interface() = default;

    static Interface element(const ActiveKey& k, Zint multiplicity);

    Zint mult(const ActiveKey& k) const;
    bool is_empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Interface combine(const Interface& other) const;
    Interface invert() const;

    const std::map<ActiveKey, Zint>& entries() const { return entries_; }

    bool operator==(const Interface& o) const = default;

    // Canonical rendering: keys sorted lexicographically by (callee, method,
    // caller) names; negative multiplicities shown as passive elements, so an
    // entry (f,m,g) -> -n prints as "n * ~g.m@f".
    std::string render(const Universe& u) const;

private:
    std::map<ActiveKey, Zint> entries_; // invariant: no zero values
    void add(const ActiveKey& k, const Zint& v);
};

// Interface terms: the free syntax of IFGcc before normalization.
class IfaceTerm;
using IfaceTermPtr = std::shared_ptr<const IfaceTerm>;

class IfaceTerm {
public:
    enum class Kind { Zero, Elem, Sum, Neg };

    static IfaceTermPtr zero();
    static IfaceTermPtr elem(const Action& e); // e must be Active or Passive
    static IfaceTermPtr sum(IfaceTermPtr a, IfaceTermPtr b);
    static IfaceTermPtr neg(IfaceTermPtr a);

    Kind kind() const { return kind_; }
    const Action& element() const { return elem_; }
    const IfaceTermPtr& left() const { return left_; }
    const IfaceTermPtr& right() const { return right_; }

private:
    Kind kind_ = Kind::Zero;
    Action elem_{};
    IfaceTermPtr left_, right_;
};

// IFG1-IFG5: an active element contributes +1 at its own key, a passive
// element contributes -1 at the reversed key, sums add pointwise, negation
// inverts, zero entries vanish.
Interface normalize(const IfaceTermPtr& t);

} // namespace acc

#endif
