// Copyright 2026 The cvpurify Authors
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

#ifndef CVPURIFY_SRC_RULE_CACHE_HPP
#define CVPURIFY_SRC_RULE_CACHE_HPP

#include <map>
#include <mutex>

#include "cvpurify/gauss_hermite.hpp"

namespace cvpurify {

// Rules are immutable once built; map nodes never move, so the returned
// reference stays valid for the life of the process.
inline const GaussHermiteRule &cached_gauss_hermite(int order) {
    static std::mutex mutex;
    static std::map<int, GaussHermiteRule> rules;
    std::lock_guard lock(mutex);
    auto it = rules.find(order);
    if (it == rules.end()) {
        it = rules.emplace(order, gauss_hermite(order)).first;
    }
    return it->second;
}

}  // namespace cvpurify

#endif  // CVPURIFY_SRC_RULE_CACHE_HPP
