// Copyright 2026 The lqioc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LQIOC_DATASET_IO_HPP_
#define LQIOC_DATASET_IO_HPP_

#include <string>

#include "lqioc/trajectory.hpp"

namespace lqioc {

// Line-delimited JSON: a header record {"schema":1,"nu2":..,"n":..,"m":..}
// followed by one trajectory per line. Floats are written with 17
// significant digits so a round trip is lossless and byte-stable.
void write_dataset(const Dataset& ds, const std::string& path,
                   int control_dim);

// Throws ConfigError naming the first bad line on malformed input.
Dataset read_dataset(const std::string& path);

}  // namespace lqioc

#endif  // LQIOC_DATASET_IO_HPP_
