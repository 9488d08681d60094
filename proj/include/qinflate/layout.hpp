// Copyright 2026 The qinflate Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file layout.hpp
 * Ordered tensor-factor description of a composite Hilbert space.
 */
#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace qinflate {

class SubsystemLayout {
  public:
    SubsystemLayout() = default;
    SubsystemLayout(std::vector<std::string> labels, std::vector<std::size_t> dims);

    /// n subsystems labelled "A", "B", ... each of dimension d.
    static SubsystemLayout uniform(std::size_t n, std::size_t d);

    [[nodiscard]] const std::vector<std::string> &labels() const { return labels_; }
    [[nodiscard]] const std::vector<std::size_t> &dims() const { return dims_; }
    [[nodiscard]] std::size_t size() const { return labels_.size(); }
    [[nodiscard]] std::size_t total_dim() const;
    [[nodiscard]] bool contains(const std::string &label) const;
    /// Position of a label; throws UnknownLabel.
    [[nodiscard]] std::size_t index_of(const std::string &label) const;
    [[nodiscard]] std::size_t dim_of(const std::string &label) const { return dims_[index_of(label)]; }
    [[nodiscard]] std::set<std::string> label_set() const;

    /// Concatenation; throws DuplicateLabel on collision.
    [[nodiscard]] SubsystemLayout concat(const SubsystemLayout &other) const;
    /// Restriction to `keep`, original order preserved; throws UnknownLabel.
    [[nodiscard]] SubsystemLayout restrict_to(const std::set<std::string> &keep) const;
    /// Same factors reordered as `order`.
    [[nodiscard]] SubsystemLayout reordered(const std::vector<std::string> &order) const;
    /// Same factors, labels sorted alphabetically.
    [[nodiscard]] SubsystemLayout canonical() const;
    [[nodiscard]] bool is_canonical() const;

    /// Row-major multi-index digits of a flat index.
    [[nodiscard]] std::vector<std::size_t> digits(std::size_t flat) const;
    [[nodiscard]] std::size_t flat(const std::vector<std::size_t> &digits) const;

    bool operator==(const SubsystemLayout &) const = default;

  private:
    std::vector<std::string> labels_;
    std::vector<std::size_t> dims_;
};

} // namespace qinflate
