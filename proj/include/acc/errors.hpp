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

#ifndef ACC_ERRORS_HPP
#define ACC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace acc {

// A term refers to a variable that is not bound anywhere.
class ScopeError : public std::runtime_error {
public:
    explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

// A recursive specification could not be shown guarded.
class GuardednessError : public std::runtime_error {
public:
    explicit GuardednessError(const std::string& what) : std::runtime_error(what) {}
};

// A rewriting fuel budget ran out before a head normal form was reached.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Spec-file syntax or resolution error, carries a source position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line(line),
          column(column) {}
    int line;
    int column;
};

} // namespace acc

#endif
