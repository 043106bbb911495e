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

#ifndef GTH_C_H
#define GTH_C_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GTH_API __declspec(dllexport)
#else
#define GTH_API __attribute__((visibility("default")))
#endif

typedef enum gth_status {
  GTH_OK = 0,
  GTH_MISMATCH = 1,  /* a verification check failed */
  GTH_E_PARSE = 2,   /* malformed command, group spec, label or rack name */
  GTH_E_LIMIT = 3,   /* size limit exceeded */
  GTH_E_DATA = 4,    /* unreadable or corrupted expected-value file */
  GTH_E_INVALID = 5, /* well-formed but mathematically invalid input */
  GTH_E_INTERNAL = 6,
  GTH_E_ARGUMENT = 7 /* null or out-of-range argument to this API */
} gth_status;

enum {
  GTH_FLAG_JSON = 1u,
  GTH_FLAG_MARKDOWN = 2u,
  GTH_FLAG_ALL = 4u,
  GTH_FLAG_STAMP = 8u
};

typedef struct gth_result gth_result;
typedef struct gth_group gth_group;

GTH_API const char* gth_version(void);
GTH_API const char* gth_status_name(gth_status s);
/* Process exit status for a status: 0, 1, 2 (usage) or 3 (limit/data). */
GTH_API int gth_exit_code(gth_status s);

/* Runs one verb. On return *out holds a result, also on failure, unless out
   is null. `only` filters verify-paper suites; threads = 0 keeps the default. */
GTH_API gth_status gth_run(const char* verb, const char* const* args, int nargs, unsigned flags,
                           const char* const* only, int nonly, int threads, gth_result** out);
GTH_API gth_status gth_result_status(const gth_result* r);
GTH_API const char* gth_result_output(const gth_result* r);
GTH_API const char* gth_result_error(const gth_result* r);
GTH_API void gth_result_free(gth_result* r);

GTH_API gth_status gth_group_new(const char* spec, gth_group** out);
GTH_API int gth_group_order(const gth_group* g);
GTH_API int gth_group_mul(const gth_group* g, int a, int b);
/* Null when the element is out of range. */
GTH_API const char* gth_group_label(const gth_group* g, int element);
/* Invariant factors of H^2(G, k^x); *count receives the number of factors
   even when capacity is too small. */
GTH_API gth_status gth_group_h2(const gth_group* g, int* factors, int capacity, int* count);
GTH_API void gth_group_free(gth_group* g);
/* Message of the last failing call on this thread. */
GTH_API const char* gth_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
