// Copyright 2026 The opdiscord Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace opd {

/// Input violates a mathematical precondition (unnormalized state, bad family, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Objects from different systems, or a non-bipartite state where one was required.
class TypeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Requested operation is not available for this backend.
class UnsupportedBackend : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A search exceeded its configured budget.
class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A proven identity failed numerically. Indicates corrupted input or a bug.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace opd
