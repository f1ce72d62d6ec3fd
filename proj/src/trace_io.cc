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
#include "qclab/trace_io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace qclab {

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string TraceCsv(const RunTrace& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const TraceRow& row : trace.rows) {
    out += std::to_string(row.iter);
    for (double value : {row.f, row.grad_norm_sq, row.tau, row.p, row.gamma,
                         row.alpha}) {
      out += ',';
      out += FormatNumber(value);
    }
    out += row.clipped ? ",1," : ",0,";
    out += FormatNumber(row.noise_scale);
    out += ',';
    out += FormatNumber(row.x_norm);
    out += '\n';
  }
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code error;
    std::filesystem::create_directories(path.parent_path(), error);
    if (error) {
      throw std::runtime_error("cannot create directory " +
                               path.parent_path().string() + ": " +
                               error.message());
    }
  }
  std::filesystem::path temp = path;
  temp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw std::runtime_error("cannot write " + temp.string());
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::filesystem::remove(temp, error);
    throw std::runtime_error("cannot move " + temp.string() + " to " +
                             path.string());
  }
}

}  // namespace qclab
