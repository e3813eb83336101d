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

#ifndef ACC_TERM_HPP
#define ACC_TERM_HPP

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acc/interface.hpp"
#include "acc/universe.hpp"

namespace acc {

class Term;
class RecSpec;
using TermPtr = std::shared_ptr<const Term>;
using RecSpecPtr = std::shared_ptr<const RecSpec>;

// Proc is the non-localized process sort of ACC, Locl the localized one.
// Both share the same node type; the factories enforce the signature of each
// sort (no communication merge, interface encapsulation or placement in Locl,
// only localized action constants in Locl, and vice versa).
enum class Sort : std::uint8_t { Proc, Locl };

enum class Guardedness { Guarded, NotShownGuarded };

// A set of recursion equations over one sort. Immutable; equations are kept
// sorted by variable name. Right-hand sides may refer to the specification's
// own variables only (nested recursion constants are self-contained).
class RecSpec {
public:
    static RecSpecPtr make(Sort sort, std::vector<std::pair<std::string, TermPtr>> equations,
                           int guard_budget = 8);

    Sort sort() const { return sort_; }
    const std::vector<std::pair<std::string, TermPtr>>& equations() const { return equations_; }
    Guardedness guardedness() const { return verdict_; }

    bool binds(const std::string& var) const;
    const TermPtr& body(const std::string& var) const;

private:
    Sort sort_ = Sort::Proc;
    std::vector<std::pair<std::string, TermPtr>> equations_;
    Guardedness verdict_ = Guardedness::NotShownGuarded;
};

class Term {
public:
    enum class Kind : std::uint8_t {
        Deadlock,  // delta
        Act,       // action constant
        Alt,       // +
        Seq,       // .
        Par,       // ||
        LeftMerge, // _|
        CommMerge, // |   (Proc only)
        Encap,     // encap{H}(..)
        IEncap,    // iencap[I](..)  (Proc only)
        Rec,       // <X|E>
        Var,       // recursion variable
        Placed,    // at f (..)  (Proc node over a Locl body)
    };

    static TermPtr deadlock(Sort s);
    static TermPtr act(const Action& a);
    static TermPtr alt(TermPtr l, TermPtr r);
    static TermPtr seq(TermPtr l, TermPtr r);
    static TermPtr par(TermPtr l, TermPtr r);
    static TermPtr left_merge(TermPtr l, TermPtr r);
    static TermPtr comm_merge(TermPtr l, TermPtr r);
    static TermPtr encap(std::vector<Action> blocked, TermPtr p);
    static TermPtr iencap(Interface i, TermPtr p);
    static TermPtr rec(const std::string& var, RecSpecPtr spec);
    static TermPtr var(const std::string& name, Sort s);
    static TermPtr placed(Locus at, TermPtr localized);

    Kind kind() const { return kind_; }
    Sort sort() const { return sort_; }
    const Action& action() const { return action_; }
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }
    const std::vector<Action>& encap_set() const { return encap_set_; }
    const Interface& iface() const { return iface_; }
    const std::string& var_name() const { return var_; }
    const RecSpecPtr& spec() const { return spec_; }
    Locus placed_at() const { return locus_; }

    std::size_t node_count() const;

private:
    Kind kind_ = Kind::Deadlock;
    Sort sort_ = Sort::Proc;
    Action action_{};
    TermPtr left_, right_;
    std::vector<Action> encap_set_;
    Interface iface_;
    std::string var_;
    RecSpecPtr spec_;
    Locus locus_{};
};

// Names of variables occurring outside any enclosing recursion binder.
std::set<std::string> free_variables(const TermPtr& t);

bool is_closed(const TermPtr& t);

// Exact tree equality, including variable names and equation order.
bool structurally_equal(const TermPtr& a, const TermPtr& b);

// Rendering in the workbench grammar; parseable back to an identical tree.
std::string render(const TermPtr& t, const Universe& u);

// Normal form modulo A1/A2/A3/A6 (alternative composition is a sorted
// duplicate-free sum without deadlock summands) plus alpha-renaming of
// recursion specs restricted to their reachable equations. State identity in
// LTS construction is canonical-form identity.
TermPtr canonical(const TermPtr& t, const Universe& u);

// render(canonical(t)); the state key used everywhere.
std::string canonical_key(const TermPtr& t, const Universe& u);

// Components: a basic component pairs an interface with a behaviour; composite
// components are parallel compositions of components.
class Comp;
using CompPtr = std::shared_ptr<const Comp>;

class Comp {
public:
    static CompPtr basic(Interface i, TermPtr behaviour); // behaviour of sort Proc
    static CompPtr parc(CompPtr l, CompPtr r);

    bool is_basic() const { return basic_; }
    const Interface& iface() const { return iface_; }
    const TermPtr& behaviour() const { return behaviour_; }
    const CompPtr& left() const { return left_; }
    const CompPtr& right() const { return right_; }

private:
    bool basic_ = true;
    Interface iface_;
    TermPtr behaviour_;
    CompPtr left_, right_;
};

std::string render(const CompPtr& c, const Universe& u);
CompPtr canonical(const CompPtr& c, const Universe& u);
std::string canonical_key(const CompPtr& c, const Universe& u);
bool structurally_equal(const CompPtr& a, const CompPtr& b);

} // namespace acc

#endif
