// Copyright 2026 <authors>
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

#include "gth/gth_c.h"

#include <new>
#include <string>

#include "gth/cohomology.hpp"
#include "gth/commands.hpp"

struct gth_result {
  gth_status status = GTH_OK;
  std::string output, error;
};

struct gth_group {
  gth::Group group;
};

namespace {

thread_local std::string g_last_error;

gth_status status_of(gth::ErrorKind k) {
  switch (k) {
    case gth::ErrorKind::Parse: return GTH_E_PARSE;
    case gth::ErrorKind::Limit: return GTH_E_LIMIT;
    case gth::ErrorKind::Data: return GTH_E_DATA;
    case gth::ErrorKind::Invalid: return GTH_E_INVALID;
    case gth::ErrorKind::Internal: return GTH_E_INTERNAL;
  }
  return GTH_E_INTERNAL;
}

// Runs fn, translating exceptions into a status and the thread-local message.
template <class Fn>
gth_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const gth::Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GTH_E_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GTH_E_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* gth_version(void) { return "1.0.0"; }

const char* gth_status_name(gth_status s) {
  switch (s) {
    case GTH_OK: return "ok";
    case GTH_MISMATCH: return "verification mismatch";
    case GTH_E_PARSE: return "parse error";
    case GTH_E_LIMIT: return "size limit";
    case GTH_E_DATA: return "data error";
    case GTH_E_INVALID: return "invalid input";
    case GTH_E_INTERNAL: return "internal error";
    case GTH_E_ARGUMENT: return "bad argument";
  }
  return "unknown";
}

int gth_exit_code(gth_status s) {
  switch (s) {
    case GTH_OK: return 0;
    case GTH_MISMATCH: return 1;
    case GTH_E_PARSE:
    case GTH_E_INVALID:
    case GTH_E_ARGUMENT: return 2;
    default: return 3;
  }
}

gth_status gth_run(const char* verb, const char* const* args, int nargs, unsigned flags,
                   const char* const* only, int nonly, int threads, gth_result** out) {
  gth_result* r = new (std::nothrow) gth_result;
  if (out) *out = r;
  if (!r) return GTH_E_LIMIT;
  if (!verb || nargs < 0 || nonly < 0 || (nargs > 0 && !args) || (nonly > 0 && !only)) {
    r->status = GTH_E_ARGUMENT;
    r->error = g_last_error = "gth_run: bad argument";
  } else {
    r->status = guarded([&] {
      gth::CommandRequest req;
      req.verb = verb;
      for (int i = 0; i < nargs; ++i) req.args.emplace_back(args[i] ? args[i] : "");
      for (int i = 0; i < nonly; ++i) req.only.emplace_back(only[i] ? only[i] : "");
      req.json = flags & GTH_FLAG_JSON;
      req.markdown = flags & GTH_FLAG_MARKDOWN;
      req.all = flags & GTH_FLAG_ALL;
      req.stamp = flags & GTH_FLAG_STAMP;
      req.threads = threads;
      gth::CommandResult res = gth::run_command(req);
      r->output = std::move(res.out);
      return res.exit_code == 0 ? GTH_OK : GTH_MISMATCH;
    });
    if (r->status != GTH_OK && r->status != GTH_MISMATCH) r->error = g_last_error;
  }
  gth_status s = r->status;
  if (!out) delete r;
  return s;
}

gth_status gth_result_status(const gth_result* r) { return r ? r->status : GTH_E_ARGUMENT; }
const char* gth_result_output(const gth_result* r) { return r ? r->output.c_str() : ""; }
const char* gth_result_error(const gth_result* r) { return r ? r->error.c_str() : ""; }
void gth_result_free(gth_result* r) { delete r; }

gth_status gth_group_new(const char* spec, gth_group** out) {
  if (!spec || !out) return GTH_E_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new gth_group{gth::construct(spec)};
    return GTH_OK;
  });
}

int gth_group_order(const gth_group* g) { return g ? g->group.order() : 0; }

int gth_group_mul(const gth_group* g, int a, int b) {
  if (!g || a < 0 || b < 0 || a >= g->group.order() || b >= g->group.order()) return -1;
  return g->group.mul(a, b);
}

const char* gth_group_label(const gth_group* g, int element) {
  if (!g || element < 0 || element >= g->group.order()) return nullptr;
  return g->group.label(element).c_str();
}

gth_status gth_group_h2(const gth_group* g, int* factors, int capacity, int* count) {
  if (!g || !count || capacity < 0 || (capacity > 0 && !factors)) return GTH_E_ARGUMENT;
  return guarded([&] {
    gth::CohomologyGroup h(g->group, g->group.order());
    auto inv = h.invariant_factors();
    *count = static_cast<int>(inv.size());
    for (int i = 0; i < capacity && i < *count; ++i) factors[i] = inv[i];
    return GTH_OK;
  });
}

void gth_group_free(gth_group* g) { delete g; }

const char* gth_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
