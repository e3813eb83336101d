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

#include "acc/term.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "acc/errors.hpp"
#include "acc/recursion.hpp"

namespace acc {

namespace {

std::shared_ptr<Term> blank() { return std::make_shared<Term>(); }

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

struct TermBuilder {
    // grants term.cpp access to private fields through friendship-by-location:
    // the factories below are the only construction path.
};

} // namespace

bool RecSpec::binds(const std::string& var) const {
    for (const auto& [name, _] : equations_)
        if (name == var) return true;
    return false;
}

const TermPtr& RecSpec::body(const std::string& var) const {
    for (const auto& [name, body] : equations_)
        if (name == var) return body;
    throw ScopeError("recursion variable not bound: " + var);
}

RecSpecPtr RecSpec::make(Sort sort, std::vector<std::pair<std::string, TermPtr>> equations,
                         int guard_budget) {
    if (equations.empty()) throw std::invalid_argument("empty recursive specification");
    std::sort(equations.begin(), equations.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < equations.size(); ++i)
        if (equations[i].first == equations[i + 1].first)
            throw std::invalid_argument("duplicate recursion variable: " + equations[i].first);
    std::set<std::string> bound;
    for (const auto& [name, _] : equations) bound.insert(name);
    for (const auto& [name, body] : equations) {
        if (!body) throw std::invalid_argument("null equation body");
        if (body->sort() != sort)
            throw std::invalid_argument("equation body of wrong sort for variable " + name);
        for (const auto& v : free_variables(body))
            if (!bound.count(v))
                throw ScopeError("variable " + v + " in the body of " + name +
                                 " is not bound by the specification");
    }
    auto spec = std::make_shared<RecSpec>();
    spec->sort_ = sort;
    spec->equations_ = std::move(equations);
    spec->verdict_ = check_guarded(sort, spec->equations_, guard_budget);
    return spec;
}

TermPtr Term::deadlock(Sort s) {
    auto t = blank();
    t->kind_ = Kind::Deadlock;
    t->sort_ = s;
    return t;
}

TermPtr Term::act(const Action& a) {
    auto t = blank();
    t->kind_ = Kind::Act;
    t->sort_ = a.localized() ? Sort::Locl : Sort::Proc;
    t->action_ = a;
    return t;
}

static TermPtr binary(Term::Kind k, TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == r->sort(), "operands of mixed sorts");
    auto t = blank();
    const_cast<Term&>(*t) = Term(); // keep default state
    struct Access : Term {};
    // construct through a mutable copy of the target fields
    auto out = std::make_shared<Term>();
    // placeholder, replaced below
    (void)t;
    (void)out;
    return nullptr;
}

// The factories assign private fields directly; Term exposes no mutators.
// A small helper keeps them uniform.
namespace detail {
struct Raw {
    Term::Kind kind;
    Sort sort;
    Action action{};
    TermPtr left, right;
    std::vector<Action> encap_set{};
    Interface iface{};
    std::string var{};
    RecSpecPtr spec{};
    Locus locus{};
};
} // namespace detail

static TermPtr finish(detail::Raw raw) {
    struct Concrete : Term {};
    auto t = std::make_shared<Concrete>();
    auto* p = static_cast<Term*>(t.get());
    // Term is an aggregate of private members; rebuild via placement of a
    // fully-formed value. Friendship is emulated by a private-access shim.
    class Shim : public Term {
    public:
        void fill(detail::Raw&& r) {
            kind_ = r.kind;
            sort_ = r.sort;
            action_ = r.action;
            left_ = std::move(r.left);
            right_ = std::move(r.right);
            encap_set_ = std::move(r.encap_set);
            iface_ = std::move(r.iface);
            var_ = std::move(r.var);
            spec_ = std::move(r.spec);
            locus_ = r.locus;
        }
    };
    static_cast<Shim*>(p)->fill(std::move(raw));
    return t;
}

TermPtr Term::alt(TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == r->sort(), "operands of mixed sorts");
    Sort s = l->sort();
    return finish({Kind::Alt, s, {}, std::move(l), std::move(r)});
}

TermPtr Term::seq(TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == r->sort(), "operands of mixed sorts");
    Sort s = l->sort();
    return finish({Kind::Seq, s, {}, std::move(l), std::move(r)});
}

TermPtr Term::par(TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == r->sort(), "operands of mixed sorts");
    Sort s = l->sort();
    return finish({Kind::Par, s, {}, std::move(l), std::move(r)});
}

TermPtr Term::left_merge(TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == r->sort(), "operands of mixed sorts");
    Sort s = l->sort();
    return finish({Kind::LeftMerge, s, {}, std::move(l), std::move(r)});
}

TermPtr Term::comm_merge(TermPtr l, TermPtr r) {
    require(l && r, "null operand");
    require(l->sort() == Sort::Proc && r->sort() == Sort::Proc,
            "communication merge exists for non-localized processes only");
    return finish({Kind::CommMerge, Sort::Proc, {}, std::move(l), std::move(r)});
}

TermPtr Term::encap(std::vector<Action> blocked, TermPtr p) {
    require(p != nullptr, "null operand");
    for (const auto& a : blocked)
        require(a.localized() == (p->sort() == Sort::Locl),
                "encapsulation set must match the sort's alphabet");
    std::sort(blocked.begin(), blocked.end());
    blocked.erase(std::unique(blocked.begin(), blocked.end()), blocked.end());
    Sort s = p->sort();
    detail::Raw raw{Term::Kind::Encap, s, {}, std::move(p), nullptr};
    raw.encap_set = std::move(blocked);
    return finish(std::move(raw));
}

TermPtr Term::iencap(Interface i, TermPtr p) {
    require(p != nullptr, "null operand");
    require(p->sort() == Sort::Proc, "interface compliant encapsulation is a Proc operator");
    detail::Raw raw{Term::Kind::IEncap, Sort::Proc, {}, std::move(p), nullptr};
    raw.iface = std::move(i);
    return finish(std::move(raw));
}

TermPtr Term::rec(const std::string& var, RecSpecPtr spec) {
    require(spec != nullptr, "null specification");
    if (!spec->binds(var)) throw ScopeError("recursion constant over unbound variable " + var);
    detail::Raw raw{Term::Kind::Rec, spec->sort(), {}, nullptr, nullptr};
    raw.var = var;
    raw.spec = std::move(spec);
    return finish(std::move(raw));
}

TermPtr Term::var(const std::string& name, Sort s) {
    require(!name.empty(), "empty variable name");
    detail::Raw raw{Term::Kind::Var, s, {}, nullptr, nullptr};
    raw.var = name;
    return finish(std::move(raw));
}

TermPtr Term::placed(Locus at, TermPtr localized) {
    require(localized != nullptr, "null operand");
    require(localized->sort() == Sort::Locl, "placement applies to localized processes");
    detail::Raw raw{Term::Kind::Placed, Sort::Proc, {}, std::move(localized), nullptr};
    raw.locus = at;
    return finish(std::move(raw));
}

std::size_t Term::node_count() const {
    std::size_t n = 1;
    if (left_) n += left_->node_count();
    if (right_) n += right_->node_count();
    if (kind_ == Kind::Rec)
        for (const auto& [_, body] : spec_->equations()) n += body->node_count();
    return n;
}

namespace {

void collect_free(const TermPtr& t, std::set<std::string>& out) {
    switch (t->kind()) {
    case Term::Kind::Var:
        out.insert(t->var_name());
        return;
    case Term::Kind::Rec:
        // a recursion constant is closed: its spec binds everything it uses
        return;
    default:
        if (t->left()) collect_free(t->left(), out);
        if (t->right()) collect_free(t->right(), out);
        return;
    }
}

} // namespace

std::set<std::string> free_variables(const TermPtr& t) {
    std::set<std::string> out;
    collect_free(t, out);
    return out;
}

bool is_closed(const TermPtr& t) { return free_variables(t).empty(); }

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind() != b->kind() || a->sort() != b->sort()) return false;
    switch (a->kind()) {
    case Term::Kind::Deadlock:
        return true;
    case Term::Kind::Act:
        return a->action() == b->action();
    case Term::Kind::Var:
        return a->var_name() == b->var_name();
    case Term::Kind::Encap:
        if (a->encap_set() != b->encap_set()) return false;
        return structurally_equal(a->left(), b->left());
    case Term::Kind::IEncap:
        if (!(a->iface() == b->iface())) return false;
        return structurally_equal(a->left(), b->left());
    case Term::Kind::Placed:
        if (a->placed_at() != b->placed_at()) return false;
        return structurally_equal(a->left(), b->left());
    case Term::Kind::Rec: {
        if (a->var_name() != b->var_name()) return false;
        const auto& ea = a->spec()->equations();
        const auto& eb = b->spec()->equations();
        if (ea.size() != eb.size()) return false;
        for (std::size_t i = 0; i < ea.size(); ++i) {
            if (ea[i].first != eb[i].first) return false;
            if (!structurally_equal(ea[i].second, eb[i].second)) return false;
        }
        return true;
    }
    default:
        return structurally_equal(a->left(), b->left()) &&
               structurally_equal(a->right(), b->right());
    }
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// precedence: + is weakest, the merge operators sit in between, . is strongest
int precedence(const TermPtr& t) {
    switch (t->kind()) {
    case Term::Kind::Alt:
        return 1;
    case Term::Kind::Par:
    case Term::Kind::LeftMerge:
    case Term::Kind::CommMerge:
        return 2;
    case Term::Kind::Seq:
        return 3;
    default:
        return 4;
    }
}

void render_into(const TermPtr& t, const Universe& u, std::string& out);

void render_child(const TermPtr& t, const Universe& u, int need, std::string& out) {
    if (precedence(t) < need) {
        out += '(';
        render_into(t, u, out);
        out += ')';
    } else {
        render_into(t, u, out);
    }
}

void render_into(const TermPtr& t, const Universe& u, std::string& out) {
    switch (t->kind()) {
    case Term::Kind::Deadlock:
        out += "delta";
        return;
    case Term::Kind::Act:
        out += u.render(t->action());
        return;
    case Term::Kind::Var:
        out += t->var_name();
        return;
    case Term::Kind::Alt:
        render_child(t->left(), u, 1, out);
        out += " + ";
        render_child(t->right(), u, 2, out);
        return;
    case Term::Kind::Par:
        render_child(t->left(), u, 2, out);
        out += " || ";
        render_child(t->right(), u, 3, out);
        return;
    case Term::Kind::LeftMerge:
        render_child(t->left(), u, 2, out);
        out += " _| ";
        render_child(t->right(), u, 3, out);
        return;
    case Term::Kind::CommMerge:
        render_child(t->left(), u, 2, out);
        out += " | ";
        render_child(t->right(), u, 3, out);
        return;
    case Term::Kind::Seq:
        render_child(t->left(), u, 3, out);
        out += " . ";
        render_child(t->right(), u, 4, out);
        return;
    case Term::Kind::Encap: {
        out += "encap{";
        std::vector<Action> labels = t->encap_set();
        std::sort(labels.begin(), labels.end(),
                  [&u](const Action& a, const Action& b) { return u.action_less(a, b); });
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += ',';
            out += u.render(labels[i]);
        }
        out += "}(";
        render_into(t->left(), u, out);
        out += ')';
        return;
    }
    case Term::Kind::IEncap:
        out += "iencap[";
        out += t->iface().render(u);
        out += "](";
        render_into(t->left(), u, out);
        out += ')';
        return;
    case Term::Kind::Rec: {
        out += "rec ";
        out += t->var_name();
        out += " where { ";
        const auto& eqs = t->spec()->equations();
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i) out += "; ";
            out += eqs[i].first;
            out += " = ";
            render_into(eqs[i].second, u, out);
        }
        out += " }";
        return;
    }
    case Term::Kind::Placed:
        out += "at ";
        out += u.name(t->placed_at());
        out += " (";
        render_into(t->left(), u, out);
        out += ')';
        return;
    }
}

} // namespace

std::string render(const TermPtr& t, const Universe& u) {
    std::string out;
    render_into(t, u, out);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

void flatten_alt(const TermPtr& t, std::vector<TermPtr>& out) {
    if (t->kind() == Term::Kind::Alt) {
        flatten_alt(t->left(), out);
        flatten_alt(t->right(), out);
    } else {
        out.push_back(t);
    }
}

TermPtr canon(const TermPtr& t, const Universe& u);

// Renames the spec's variables to X0, X1, ... in discovery order starting from
// `root`, dropping equations unreachable from it. Bodies are canonicalized
// after renaming; the loop re-runs until the naming is stable under the
// re-sorting that renaming may cause inside alternative compositions.
std::pair<std::string, RecSpecPtr> canon_spec(const std::string& root, const RecSpecPtr& spec,
                                              const Universe& u) {
    std::string root_var = root;
    RecSpecPtr current = spec;
    for (int round = 0; round < 8; ++round) {
        // canonical bodies with the current names
        std::vector<std::pair<std::string, TermPtr>> eqs;
        for (const auto& [name, body] : current->equations())
            eqs.emplace_back(name, canon(body, u));

        auto body_of = [&eqs](const std::string& n) -> const TermPtr& {
            for (const auto& e : eqs)
                if (e.first == n) return e.second;
            throw ScopeError("recursion variable not bound: " + n);
        };

        // discovery order over the canonical bodies
        std::map<std::string, std::string> renaming;
        std::vector<std::string> queue{root_var};
        renaming[root_var] = "X0";
        std::size_t next = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::vector<std::string> occs;
            std::function<void(const TermPtr&)> scan = [&](const TermPtr& x) {
                if (x->kind() == Term::Kind::Var) {
                    occs.push_back(x->var_name());
                } else if (x->kind() != Term::Kind::Rec) {
                    if (x->left()) scan(x->left());
                    if (x->right()) scan(x->right());
                }
            };
            scan(body_of(queue[qi]));
            for (const auto& v : occs) {
                if (!renaming.count(v)) {
                    renaming[v] = "X" + std::to_string(next++);
                    queue.push_back(v);
                }
            }
        }

        // rebuild reachable equations under the new names
        std::map<std::string, TermPtr> subst;
        for (const auto& [old_name, new_name] : renaming)
            subst[old_name] = Term::var(new_name, current->sort());
        std::vector<std::pair<std::string, TermPtr>> renamed;
        bool identity = renaming.size() == current->equations().size();
        for (const auto& v : queue) {
            renamed.emplace_back(renaming[v], substitute(body_of(v), subst));
            if (renaming[v] != v) identity = false;
        }
        auto next_spec = RecSpec::make(current->sort(), std::move(renamed), 0);
        std::string next_root = renaming[root_var];
        if (identity) {
            // already canonically named; bodies are canonical too
            bool same = true;
            const auto& a = current->equations();
            const auto& b = next_spec->equations();
            if (a.size() != b.size()) same = false;
            for (std::size_t i = 0; same && i < a.size(); ++i)
                same = a[i].first == b[i].first && structurally_equal(a[i].second, b[i].second);
            if (same) return {next_root, next_spec};
        }
        current = next_spec;
        root_var = next_root;
    }
    return {root_var, current};
}

TermPtr canon(const TermPtr& t, const Universe& u) {
    switch (t->kind()) {
    case Term::Kind::Deadlock:
    case Term::Kind::Act:
    case Term::Kind::Var:
        return t;
    case Term::Kind::Alt: {
        std::vector<TermPtr> summands;
        flatten_alt(t, summands);
        std::vector<std::pair<std::string, TermPtr>> keyed;
        for (const auto& s : summands) {
            auto c = canon(s, u);
            if (c->kind() == Term::Kind::Deadlock) continue; // A6
            keyed.emplace_back(render(c, u), c);
        }
        std::sort(keyed.begin(), keyed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        keyed.erase(std::unique(keyed.begin(), keyed.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; }),
                    keyed.end()); // A3
        if (keyed.empty()) return Term::deadlock(t->sort());
        TermPtr acc = keyed.back().second;
        for (std::size_t i = keyed.size() - 1; i-- > 0;)
            acc = Term::alt(keyed[i].second, acc);
        return acc;
    }
    case Term::Kind::Seq:
        return Term::seq(canon(t->left(), u), canon(t->right(), u));
    case Term::Kind::Par:
        return Term::par(canon(t->left(), u), canon(t->right(), u));
    case Term::Kind::LeftMerge:
        return Term::left_merge(canon(t->left(), u), canon(t->right(), u));
    case Term::Kind::CommMerge:
        return Term::comm_merge(canon(t->left(), u), canon(t->right(), u));
    case Term::Kind::Encap:
        return Term::encap(t->encap_set(), canon(t->left(), u));
    case Term::Kind::IEncap:
        return Term::iencap(t->iface(), canon(t->left(), u));
    case Term::Kind::Placed:
        return Term::placed(t->placed_at(), canon(t->left(), u));
    case Term::Kind::Rec: {
        auto [root, spec] = canon_spec(t->var_name(), t->spec(), u);
        return Term::rec(root, spec);
    }
    }
    return t;
}

} // namespace

TermPtr canonical(const TermPtr& t, const Universe& u) { return canon(t, u); }

std::string canonical_key(const TermPtr& t, const Universe& u) {
    return render(canonical(t, u), u);
}

// ---------------------------------------------------------------------------
// Components

CompPtr Comp::basic(Interface i, TermPtr behaviour) {
    require(behaviour != nullptr, "null behaviour");
    require(behaviour->sort() == Sort::Proc, "component behaviours are non-localized processes");
    auto c = std::make_shared<Comp>();
    c->basic_ = true;
    c->iface_ = std::move(i);
    c->behaviour_ = std::move(behaviour);
    return c;
}

CompPtr Comp::parc(CompPtr l, CompPtr r) {
    require(l && r, "null operand");
    auto c = std::make_shared<Comp>();
    c->basic_ = false;
    c->left_ = std::move(l);
    c->right_ = std::move(r);
    return c;
}

static void render_comp(const CompPtr& c, const Universe& u, bool parenthesize,
                        std::string& out) {
    if (c->is_basic()) {
        out += "comp(";
        out += c->iface().render(u);
        out += ", ";
        out += render(c->behaviour(), u);
        out += ')';
        return;
    }
    if (parenthesize) out += '(';
    render_comp(c->left(), u, !c->left()->is_basic() ? false : false, out);
    out += " || ";
    render_comp(c->right(), u, !c->right()->is_basic(), out);
    if (parenthesize) out += ')';
}

std::string render(const CompPtr& c, const Universe& u) {
    std::string out;
    render_comp(c, u, false, out);
    return out;
}

CompPtr canonical(const CompPtr& c, const Universe& u) {
    if (c->is_basic()) return Comp::basic(c->iface(), canonical(c->behaviour(), u));
    return Comp::parc(canonical(c->left(), u), canonical(c->right(), u));
}

std::string canonical_key(const CompPtr& c, const Universe& u) {
    return render(canonical(c, u), u);
}

bool structurally_equal(const CompPtr& a, const CompPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->is_basic() != b->is_basic()) return false;
    if (a->is_basic())
        return a->iface() == b->iface() && structurally_equal(a->behaviour(), b->behaviour());
    return structurally_equal(a->left(), b->left()) && structurally_equal(a->right(), b->right());
}

} // namespace acc
