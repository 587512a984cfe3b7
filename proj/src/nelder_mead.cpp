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

#include "lightcone/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lightcone/error.hpp"

namespace lightcone {

void NelderMeadOptions::validate() const {
    if (!(scale > 0.0)) {
        throw ValidationError("simplex scale must be positive");
    }
    if (!(reflection > 0.0) || !(expansion > 1.0) || !(contraction > 0.0 && contraction < 1.0) ||
        !(shrink > 0.0 && shrink < 1.0)) {
        throw ValidationError("simplex coefficients out of range");
    }
    if (f_tolerance < 0.0 || x_tolerance < 0.0) {
        throw ValidationError("simplex tolerances must be non-negative");
    }
}

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

std::vector<double> affine(const std::vector<double> &a, const std::vector<double> &b, double t) {
    std::vector<double> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] = a[k] + t * (b[k] - a[k]);
    }
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadOptions &options) {
    options.validate();
    NelderMeadResult result;
    const std::size_t n = x0.size();
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<Vertex> simplex;
    simplex.push_back({x0, eval(x0)});
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> x = x0;
        x[k] += options.scale;
        simplex.push_back({x, eval(x)});
    }
    auto by_value = [](const Vertex &a, const Vertex &b) { return a.f < b.f; };
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    result.trace.push_back(simplex.front().f);

    auto converged = [&] {
        if (n == 0 || simplex.back().f - simplex.front().f <= options.f_tolerance) {
            return true;
        }
        double size = 0.0;
        for (std::size_t v = 1; v <= n; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                size = std::max(size, std::abs(simplex[v].x[k] - simplex[0].x[k]));
            }
        }
        return size <= options.x_tolerance;
    };

    while (!converged()) {
        if (result.iterations >= options.max_iterations) {
            break;
        }
        ++result.iterations;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t k = 0; k < n; ++k) {
                centroid[k] += simplex[v].x[k] / static_cast<double>(n);
            }
        }
        Vertex &worst = simplex.back();
        Vertex reflected{affine(centroid, worst.x, -options.reflection), 0.0};
        reflected.f = eval(reflected.x);
        if (reflected.f < simplex.front().f) {
            Vertex expanded{affine(centroid, worst.x, -options.reflection * options.expansion), 0.0};
            expanded.f = eval(expanded.x);
            worst = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
        } else if (reflected.f < simplex[n - 1].f) {
            worst = std::move(reflected);
        } else {
            const bool outside = reflected.f < worst.f;
            Vertex contracted{outside ? affine(centroid, reflected.x, options.contraction)
                                      : affine(centroid, worst.x, options.contraction),
                              0.0};
            contracted.f = eval(contracted.x);
            if (contracted.f < (outside ? reflected.f : worst.f)) {
                worst = std::move(contracted);
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    simplex[v].x = affine(simplex[0].x, simplex[v].x, options.shrink);
                    simplex[v].f = eval(simplex[v].x);
                }
            }
        }
        std::stable_sort(simplex.begin(), simplex.end(), by_value);
        result.trace.push_back(simplex.front().f);
    }
    result.converged = converged();
    result.x = simplex.front().x;
    result.value = simplex.front().f;
    return result;
}

}  // namespace lightcone
