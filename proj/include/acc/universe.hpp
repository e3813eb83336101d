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

#ifndef ACC_UNIVERSE_HPP
#define ACC_UNIVERSE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acc {

// Loci and methods are interned against the declared finite universe.
// A Locus/Method value is only meaningful together with its Universe.
struct Locus {
    std::uint32_t id = 0;
    auto operator<=>(const Locus&) const = default;
};

struct Method {
    std::uint32_t id = 0;
    auto operator<=>(const Method&) const = default;
};

enum class ActKind : std::uint8_t {
    Active,     // f.m@g : the process at g requests the process at f to carry out m
    Passive,    // ~f.m@g : the process at g grants a request by the process at f
    Neutral,    // f.m*g : the synchronous performance of a matched request/grant pair
    LocActive,  // f.m   : localized request, no own locus
    LocPassive, // ~f.m  : localized grant
};

// One struct covers both the non-localized alphabet (first three kinds) and
// the localized one. `caller` is unused for localized kinds and fixed to 0.
struct Action {
    ActKind kind = ActKind::Active;
    Locus callee;
    Method method;
    Locus caller;

    auto operator<=>(const Action&) const = default;

    bool localized() const { return kind == ActKind::LocActive || kind == ActKind::LocPassive; }
    bool neutral() const { return kind == ActKind::Neutral; }
};

Action active(Locus callee, Method m, Locus caller);
Action passive(Locus callee, Method m, Locus caller);
Action neutral(Locus callee, Method m, Locus caller);
Action loc_active(Locus callee, Method m);
Action loc_passive(Locus callee, Method m);

class Universe {
public:
    Universe() = default;
    Universe(std::vector<std::string> loci, std::vector<std::string> methods);

    Locus add_locus(const std::string& name);
    Method add_method(const std::string& name);

    std::optional<Locus> find_locus(const std::string& name) const;
    std::optional<Method> find_method(const std::string& name) const;

    // Throwing lookups, used by parsers: undeclared name is an error.
    Locus locus(const std::string& name) const;
    Method method(const std::string& name) const;

    const std::string& name(Locus f) const { return loci_.at(f.id); }
    const std::string& name(Method m) const { return methods_.at(m.id); }

    std::size_t locus_count() const { return loci_.size(); }
    std::size_t method_count() const { return methods_.size(); }

    std::vector<Locus> all_loci() const;
    std::vector<Method> all_methods() const;

    // Rendering follows the workbench grammar: f.m@g, ~f.m@g, f.m*g, f.m, ~f.m.
    std::string render(const Action& a) const;

    // Name-lexicographic order on (callee, method, caller, kind); used for all
    // canonical sorting so output never depends on declaration order.
    bool action_less(const Action& a, const Action& b) const;

    bool operator==(const Universe& o) const = default;

private:
    std::vector<std::string> loci_;
    std::vector<std::string> methods_;
};

// The communication function of ACPcc: total, commutative, and nonzero only on
// matched active/passive pairs, gamma(f.m@g, ~g.m@f) = f.m*g.
// nullopt encodes the deadlock result; deadlock never communicates (C3).
std::optional<Action> gamma(const Action& a, const Action& b);

} // namespace acc

#endif
