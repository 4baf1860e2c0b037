// Copyright 2026 The Phonoise Authors
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

#ifndef PHONOISE_IO_UTIL_H_
#define PHONOISE_IO_UTIL_H_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace phonoise {

// Shortest decimal form that parses back to the same double
// (std::to_chars), so serialized tables round-trip bit-exactly.
std::string format_double(double value);

double parse_double(std::string_view s);
long long parse_int(std::string_view s);

// Writes via `<path>.tmp` + rename so readers never observe a partial
// file; the temp file is removed if `writer` throws.
void atomic_write(const std::string& path,
                  const std::function<void(std::ostream&)>& writer);

std::vector<std::string> read_lines(const std::string& path);

// Runs fn(shard_index, begin, end) over `workers` contiguous shards of
// [0, n). workers <= 1 runs inline; results must be merged by the caller
// in shard order so worker count never changes output.
void parallel_shards(size_t n, unsigned workers,
                     const std::function<void(unsigned, size_t, size_t)>& fn);

}  // namespace phonoise

#endif  // PHONOISE_IO_UTIL_H_
