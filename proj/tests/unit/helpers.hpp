#pragma once

#include <random>

#include "mdsconv/errors.hpp"
#include "mdsconv/linalg.hpp"

namespace testing {

/// Code of the mdsconv::Error thrown by fn; InternalInvariant when none is.
template <class Fn>
mdsconv::ErrorCode error_code(Fn&& fn) {
    try {
        fn();
    } catch (const mdsconv::Error& e) {
        return e.code();
    }
    return mdsconv::ErrorCode::InternalInvariant;
}

inline mdsconv::Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, unsigned q) {
    std::uniform_int_distribution<mdsconv::Elem> d(0, q - 1);
    mdsconv::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

}  // namespace testing
