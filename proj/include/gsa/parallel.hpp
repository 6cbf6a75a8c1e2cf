#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gsa/distributions.hpp"
#include "gsa/matrix.hpp"

namespace gsa {

// Execution policy for the data-parallel kernels. Serial is the
// reference implementation; the OpenMP path must produce bit-identical
// results (per-element writes, no reduction reordering) and the tests
// hold it to that.
enum class Exec { Serial, OpenMp };

// Column-wise inverse-CDF transform of a unit-interval sample matrix.
SampleMatrix transform_matrix(const SampleMatrix& m, const DistributionSpec& spec,
                              Exec exec = Exec::OpenMp);

// Row-wise evaluation of a scalar function over a matrix of points.
std::vector<double> evaluate_rows(const SampleMatrix& m,
                                  const std::function<double(std::span<const double>)>& fn,
                                  Exec exec = Exec::OpenMp);

// Number of OpenMP threads the kernels will use (1 when built without
// OpenMP).
int worker_count();
void set_worker_count(int workers);  // 0 = library default

}  // namespace gsa
