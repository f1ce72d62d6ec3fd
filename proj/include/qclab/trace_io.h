//
// Copyright 2026 The qclab Authors
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
//
#ifndef QCLAB_TRACE_IO_H_
#define QCLAB_TRACE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "qclab/run_trace.h"

namespace qclab {

inline constexpr std::string_view kTraceHeader =
    "iter,f,grad_norm_sq,tau,p,gamma,alpha,clipped,noise_scale,x_norm";

// Decimal form with 17 significant digits ("%.17g"), which round-trips
// every double. Non-finite values print as nan, inf and -inf.
std::string FormatNumber(double value);

// Header line plus one line per recorded row, '\n' terminated.
std::string TraceCsv(const RunTrace& trace);

// Writes `contents` to a temporary file next to `path`, then renames it into
// place, so readers never observe a partial file. Creates parent
// directories. Throws std::runtime_error on failure.
void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents);

}  // namespace qclab

#endif  // QCLAB_TRACE_IO_H_
