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

#ifndef ACC_RECURSION_HPP
#define ACC_RECURSION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acc/term.hpp"

namespace acc {

// Guardedness is checked syntactically, after substituting equation bodies for
// variables up to `budget` rounds: every surviving variable occurrence must sit
// behind an action prefix. The verdict is conservative; NotShownGuarded only
// means the budgeted search failed, not that the spec is unguarded.
Guardedness check_guarded(Sort sort,
                          const std::vector<std::pair<std::string, TermPtr>>& equations,
                          int budget = 8);

Guardedness check_guarded(const RecSpecPtr& spec, int budget = 8);

// Capture-free substitution of recursion variables. Does not descend into
// nested recursion constants; their specifications cannot refer to outer
// variables by construction.
TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& subst);

// RDP, one step: <X|E> becomes t_X with every Y in vars(E) replaced by <Y|E>.
TermPtr unfold(const TermPtr& rec_const);

} // namespace acc

#endif
