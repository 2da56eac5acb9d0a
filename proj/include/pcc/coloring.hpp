#pragma once

#include <span>
#include <vector>

#include "pcc/common.hpp"

namespace pcc {

/// Per-vertex color tuples of 1..4 coordinates. `shape` gives the exclusive
/// bound of each coordinate; the row-major flattening is a bijection between
/// tuples within the shape and 0..palette_size-1.
class ColorAssignment {
public:
    ColorAssignment() = default;
    ColorAssignment(int n, std::vector<int> shape);

    static ColorAssignment from_flat(std::vector<int> colors, int palette);

    int n() const { return n_; }
    int coords() const { return static_cast<int>(shape_.size()); }
    const std::vector<int>& shape() const { return shape_; }
    long long palette_size() const;

    int get(int v, int k) const { return data_[idx(v, k)]; }
    void set(int v, int k, int value);
    void set_tuple(int v, std::span<const int> tuple);
    std::vector<int> tuple(int v) const;

    /// Row-major flattening of vertex v's tuple.
    long long flat(int v) const;

    /// Flattened colors for all vertices; throws input_error when the palette
    /// does not fit in int.
    std::vector<int> flat_all() const;

    long long distinct_used() const;

    /// Throws input_error when any coordinate is out of shape.
    void validate() const;

    bool operator==(const ColorAssignment&) const = default;

private:
    std::size_t idx(int v, int k) const {
        return static_cast<std::size_t>(v) * shape_.size() + static_cast<std::size_t>(k);
    }

    int n_ = 0;
    std::vector<int> shape_;
    std::vector<int> data_;
};

}  // namespace pcc
