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

#include "acc/interface.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace acc {

int signum(const Zint& k) {
    if (k > 0) return 1;
    if (k < 0) return -1;
    return 0;
}

Interface Interface::element(const ActiveKey& k, Zint multiplicity) {
    Interface i;
    i.add(k, multiplicity);
    return i;
}

void Interface::add(const ActiveKey& k, const Zint& v) {
    if (v == 0) return;
    auto it = entries_.find(k);
    if (it == entries_.end()) {
        entries_.emplace(k, v);
        return;
    }
    it->second += v;
    if (it->second == 0) entries_.erase(it);
}

Zint Interface::mult(const ActiveKey& k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? Zint(0) : it->second;
}

Interface Interface::combine(const Interface& other) const {
    Interface out = *this;
    for (const auto& [k, v] : other.entries_) out.add(k, v);
    return out;
}

Interface Interface::invert() const {
    Interface out;
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, -v);
    return out;
}

std::string Interface::render(const Universe& u) const {
    if (entries_.empty()) return "0";
    std::vector<const std::pair<const ActiveKey, Zint>*> items;
    items.reserve(entries_.size());
    for (const auto& e : entries_) items.push_back(&e);
    std::sort(items.begin(), items.end(), [&u](const auto* a, const auto* b) {
        return std::tie(u.name(a->first.callee), u.name(a->first.method), u.name(a->first.caller)) <
               std::tie(u.name(b->first.callee), u.name(b->first.method), u.name(b->first.caller));
    });
    std::string s;
    for (const auto* e : items) {
        if (!s.empty()) s += " + ";
        const auto& [k, v] = *e;
        Zint n = v < 0 ? Zint(-v) : v;
        if (n != 1) {
            s += n.str();
            s += " * ";
        }
        // negative multiplicity is rendered as the inverse passive element
        if (v < 0)
            s += u.render(passive(k.caller, k.method, k.callee));
        else
            s += u.render(active(k.callee, k.method, k.caller));
    }
    return s;
}

IfaceTermPtr IfaceTerm::zero() {
    return std::make_shared<IfaceTerm>();
}

IfaceTermPtr IfaceTerm::elem(const Action& e) {
    if (e.kind != ActKind::Active && e.kind != ActKind::Passive)
        throw std::invalid_argument("interface elements are active or passive actions");
    auto t = std::make_shared<IfaceTerm>();
    t->kind_ = Kind::Elem;
    t->elem_ = e;
    return t;
}

IfaceTermPtr IfaceTerm::sum(IfaceTermPtr a, IfaceTermPtr b) {
    auto t = std::make_shared<IfaceTerm>();
    t->kind_ = Kind::Sum;
    t->left_ = std::move(a);
    t->right_ = std::move(b);
    return t;
}

IfaceTermPtr IfaceTerm::neg(IfaceTermPtr a) {
    auto t = std::make_shared<IfaceTerm>();
    t->kind_ = Kind::Neg;
    t->left_ = std::move(a);
    return t;
}

namespace {

void accumulate(const IfaceTermPtr& t, int sign, Interface& acc) {
    switch (t->kind()) {
    case IfaceTerm::Kind::Zero:
        return;
    case IfaceTerm::Kind::Elem: {
        const Action& e = t->element();
        if (e.kind == ActKind::Active) {
            acc = acc.combine(Interface::element({e.callee, e.method, e.caller}, sign));
        } else {
            // reflection law: ~f.m@g counts as -1 occurrence of g.m@f
            acc = acc.combine(Interface::element({e.caller, e.method, e.callee}, -sign));
        }
        return;
    }
    case IfaceTerm::Kind::Sum:
        accumulate(t->left(), sign, acc);
        accumulate(t->right(), sign, acc);
        return;
    case IfaceTerm::Kind::Neg:
        accumulate(t->left(), -sign, acc);
        return;
    }
}

} // namespace

Interface normalize(const IfaceTermPtr& t) {
    Interface acc;
    accumulate(t, 1, acc);
    return acc;
}

} // namespace acc
