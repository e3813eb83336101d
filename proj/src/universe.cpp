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

#include "acc/universe.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "acc/errors.hpp"

namespace acc {

Action active(Locus callee, Method m, Locus caller) {
    return Action{ActKind::Active, callee, m, caller};
}

Action passive(Locus callee, Method m, Locus caller) {
    return Action{ActKind::Passive, callee, m, caller};
}

Action neutral(Locus callee, Method m, Locus caller) {
    return Action{ActKind::Neutral, callee, m, caller};
}

Action loc_active(Locus callee, Method m) {
    return Action{ActKind::LocActive, callee, m, Locus{0}};
}

Action loc_passive(Locus callee, Method m) {
    return Action{ActKind::LocPassive, callee, m, Locus{0}};
}

Universe::Universe(std::vector<std::string> loci, std::vector<std::string> methods) {
    for (auto& l : loci) add_locus(l);
    for (auto& m : methods) add_method(m);
}

Locus Universe::add_locus(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("locus name must be nonempty");
    if (auto f = find_locus(name)) return *f;
    loci_.push_back(name);
    return Locus{static_cast<std::uint32_t>(loci_.size() - 1)};
}

Method Universe::add_method(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("method name must be nonempty");
    if (auto m = find_method(name)) return *m;
    methods_.push_back(name);
    return Method{static_cast<std::uint32_t>(methods_.size() - 1)};
}

std::optional<Locus> Universe::find_locus(const std::string& name) const {
    for (std::size_t i = 0; i < loci_.size(); ++i)
        if (loci_[i] == name) return Locus{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

std::optional<Method> Universe::find_method(const std::string& name) const {
    for (std::size_t i = 0; i < methods_.size(); ++i)
        if (methods_[i] == name) return Method{static_cast<std::uint32_t>(i)};
    return std::nullopt;
}

Locus Universe::locus(const std::string& name) const {
    if (auto f = find_locus(name)) return *f;
    throw std::invalid_argument("undeclared locus: " + name);
}

Method Universe::method(const std::string& name) const {
    if (auto m = find_method(name)) return *m;
    throw std::invalid_argument("undeclared method: " + name);
}

std::vector<Locus> Universe::all_loci() const {
    std::vector<Locus> out;
    for (std::size_t i = 0; i < loci_.size(); ++i) out.push_back(Locus{static_cast<std::uint32_t>(i)});
    return out;
}

std::vector<Method> Universe::all_methods() const {
    std::vector<Method> out;
    for (std::size_t i = 0; i < methods_.size(); ++i)
        out.push_back(Method{static_cast<std::uint32_t>(i)});
    return out;
}

std::string Universe::render(const Action& a) const {
    std::string s;
    switch (a.kind) {
    case ActKind::Passive:
    case ActKind::LocPassive:
        s += '~';
        break;
    default:
        break;
    }
    s += name(a.callee);
    s += '.';
    s += name(a.method);
    switch (a.kind) {
    case ActKind::Active:
    case ActKind::Passive:
        s += '@';
        s += name(a.caller);
        break;
    case ActKind::Neutral:
        s += '*';
        s += name(a.caller);
        break;
    default:
        break;
    }
    return s;
}

bool Universe::action_less(const Action& a, const Action& b) const {
    auto key = [this](const Action& x) {
        const std::string empty;
        const std::string& caller = x.localized() ? empty : name(x.caller);
        return std::tuple<const std::string&, const std::string&, const std::string&, int>(
            name(x.callee), name(x.method), caller, static_cast<int>(x.kind));
    };
    return key(a) < key(b);
}

std::optional<Action> gamma(const Action& a, const Action& b) {
    if (a.localized() || b.localized())
        throw std::invalid_argument("gamma is defined on non-localized actions only");
    const Action* act = nullptr;
    const Action* pas = nullptr;
    if (a.kind == ActKind::Active && b.kind == ActKind::Passive) {
        act = &a;
        pas = &b;
    } else if (b.kind == ActKind::Active && a.kind == ActKind::Passive) {
        act = &b;
        pas = &a;
    } else {
        return std::nullopt;
    }
    // f.m@g | ~g.m@f = f.m*g : the grant names the requester's locus and is
    // performed at the callee's locus.
    if (pas->callee == act->caller && pas->method == act->method && pas->caller == act->callee)
        return neutral(act->callee, act->method, act->caller);
    return std::nullopt;
}

} // namespace acc
