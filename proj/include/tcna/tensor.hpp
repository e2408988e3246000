#pragma once

#include <cstddef>
#include <vector>

namespace tcna {

// (batch, channels, time) tensor in row-major layout.
struct Tensor {
    int batch = 0;
    int channels = 0;
    int time = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int b, int c, int t)
        : batch(b), channels(c), time(t),
          data(static_cast<std::size_t>(b) * c * t, 0.0) {}

    double& at(int b, int c, int t) {
        return data[(static_cast<std::size_t>(b) * channels + c) * time + t];
    }
    double at(int b, int c, int t) const {
        return data[(static_cast<std::size_t>(b) * channels + c) * time + t];
    }

    bool same_shape(const Tensor& o) const {
        return batch == o.batch && channels == o.channels && time == o.time;
    }
};

// Raises NumericError naming `where` if any element is NaN or infinite.
void check_finite(const Tensor& x, const char* where);

} // namespace tcna
