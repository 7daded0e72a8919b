#pragma once

#include <initializer_list>

#include "bipot/core.hpp"

namespace testing {

inline bipot::Vec vec(std::initializer_list<double> v) {
    bipot::Vec out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double d : v) out[i++] = d;
    return out;
}

}  // namespace testing
