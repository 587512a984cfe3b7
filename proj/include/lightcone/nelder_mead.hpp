// Copyright 2026 The Lightcone Authors
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

#include <cstddef>
#include <functional>
#include <vector>

namespace lightcone {

struct NelderMeadOptions {
    /// Edge length of the initial simplex along each axis.
    double scale = 0.5;
    std::size_t max_iterations = 2000;
    /// Converged once the spread of vertex values falls to this.
    double f_tolerance = 1e-10;
    /// Converged once every vertex lies this close to the best one.
    double x_tolerance = 1e-10;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;

    /// Throws ValidationError on non-positive scale or out-of-range coefficients.
    void validate() const;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
    /// Best value after each iteration, starting with the initial simplex.
    std::vector<double> trace;
};

/// Minimizes `f` from `x0` with the derivative-free downhill simplex method. Returns the best point found; `converged`
/// is false when the iteration budget ran out.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadOptions &options = {});

}  // namespace lightcone
