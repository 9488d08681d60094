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
#include "qinflate/layout.hpp"

#include <algorithm>

#include "qinflate/error.hpp"

namespace qinflate {

SubsystemLayout::SubsystemLayout(std::vector<std::string> labels, std::vector<std::size_t> dims)
    : labels_(std::move(labels)), dims_(std::move(dims)) {
    if (labels_.size() != dims_.size()) {
        throw Error(ErrorCode::DimensionError, "layout needs one dim per label");
    }
    if (labels_.empty()) {
        throw Error(ErrorCode::DimensionError, "layout needs at least one subsystem");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) {
            throw Error(ErrorCode::InvalidParameter, "empty subsystem label");
        }
        if (!seen.insert(labels_[i]).second) {
            throw Error(ErrorCode::DuplicateLabel, "label '" + labels_[i] + "' appears twice");
        }
        if (dims_[i] < 1) {
            throw Error(ErrorCode::DimensionError, "subsystem '" + labels_[i] + "' has dim 0");
        }
    }
}

SubsystemLayout SubsystemLayout::uniform(std::size_t n, std::size_t d) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('A' + i));
    }
    return {labels, std::vector<std::size_t>(n, d)};
}

std::size_t SubsystemLayout::total_dim() const {
    std::size_t n = 1;
    for (auto d : dims_) {
        n *= d;
    }
    return n;
}

bool SubsystemLayout::contains(const std::string &label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t SubsystemLayout::index_of(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw Error(ErrorCode::UnknownLabel, "no subsystem labelled '" + label + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::set<std::string> SubsystemLayout::label_set() const {
    return {labels_.begin(), labels_.end()};
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout &other) const {
    auto labels = labels_;
    auto dims = dims_;
    labels.insert(labels.end(), other.labels_.begin(), other.labels_.end());
    dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
    return {labels, dims};
}

SubsystemLayout SubsystemLayout::restrict_to(const std::set<std::string> &keep) const {
    for (const auto &k : keep) {
        (void)index_of(k);
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (keep.count(labels_[i]) != 0) {
            labels.push_back(labels_[i]);
            dims.push_back(dims_[i]);
        }
    }
    return {labels, dims};
}

SubsystemLayout SubsystemLayout::reordered(const std::vector<std::string> &order) const {
    if (order.size() != labels_.size()) {
        throw Error(ErrorCode::DimensionError, "reordering must name every subsystem once");
    }
    std::vector<std::size_t> dims;
    for (const auto &l : order) {
        dims.push_back(dims_[index_of(l)]);
    }
    return {order, dims};
}

SubsystemLayout SubsystemLayout::canonical() const {
    auto order = labels_;
    std::sort(order.begin(), order.end());
    return reordered(order);
}

bool SubsystemLayout::is_canonical() const {
    return std::is_sorted(labels_.begin(), labels_.end());
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t flat) const {
    std::vector<std::size_t> out(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
        out[i] = flat % dims_[i];
        flat /= dims_[i];
    }
    return out;
}

std::size_t SubsystemLayout::flat(const std::vector<std::size_t> &digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        idx = idx * dims_[i] + digits[i];
    }
    return idx;
}

} // namespace qinflate
