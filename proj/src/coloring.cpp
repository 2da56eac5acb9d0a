#include "pcc/coloring.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pcc {

ColorAssignment::ColorAssignment(int n, std::vector<int> shape) : n_(n), shape_(std::move(shape)) {
    if (n < 0)
        throw input_error("negative vertex count");
    if (shape_.empty() || shape_.size() > 4)
        throw input_error("color tuples must have 1 to 4 coordinates");
    for (int b : shape_)
        if (b < 1)
            throw input_error("palette shape bounds must be positive");
    data_.assign(static_cast<std::size_t>(n) * shape_.size(), 0);
}

ColorAssignment ColorAssignment::from_flat(std::vector<int> colors, int palette) {
    ColorAssignment c(static_cast<int>(colors.size()), {palette});
    for (int v = 0; v < c.n_; ++v) c.set(v, 0, colors[static_cast<std::size_t>(v)]);
    return c;
}

long long ColorAssignment::palette_size() const {
    long long p = 1;
    for (int b : shape_) p *= b;
    return p;
}

void ColorAssignment::set(int v, int k, int value) {
    if (value < 0 || value >= shape_[static_cast<std::size_t>(k)])
        throw input_error("color coordinate " + std::to_string(value) +
                          " out of bound " + std::to_string(shape_[static_cast<std::size_t>(k)]));
    data_[idx(v, k)] = value;
}

void ColorAssignment::set_tuple(int v, std::span<const int> t) {
    if (static_cast<int>(t.size()) != coords())
        throw input_error("tuple arity mismatch");
    for (int k = 0; k < coords(); ++k) set(v, k, t[static_cast<std::size_t>(k)]);
}

std::vector<int> ColorAssignment::tuple(int v) const {
    std::vector<int> t(shape_.size());
    for (int k = 0; k < coords(); ++k) t[static_cast<std::size_t>(k)] = get(v, k);
    return t;
}

long long ColorAssignment::flat(int v) const {
    long long f = 0;
    for (int k = 0; k < coords(); ++k) f = f * shape_[static_cast<std::size_t>(k)] + get(v, k);
    return f;
}

std::vector<int> ColorAssignment::flat_all() const {
    if (palette_size() > std::numeric_limits<int>::max())
        throw input_error("palette too large to flatten into int colors");
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = static_cast<int>(flat(v));
    return out;
}

long long ColorAssignment::distinct_used() const {
    std::vector<long long> used(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) used[static_cast<std::size_t>(v)] = flat(v);
    std::sort(used.begin(), used.end());
    return static_cast<long long>(std::unique(used.begin(), used.end()) - used.begin());
}

void ColorAssignment::validate() const {
    for (std::size_t i = 0; i < data_.size(); ++i) {
        int bound = shape_[i % shape_.size()];
        if (data_[i] < 0 || data_[i] >= bound)
            throw input_error("color coordinate out of palette shape");
    }
}

}  // namespace pcc
