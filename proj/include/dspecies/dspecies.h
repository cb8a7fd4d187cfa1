// Copyright 2026 The dspecies Authors.
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


#ifndef DSPECIES_DSPECIES_H
#define DSPECIES_DSPECIES_H

/* C interface of the dspecies library.  Every function returns a status
 * code; on failure dsp_last_error() describes the problem.  Strings returned
 * through out-parameters are owned by the caller and released with
 * dsp_string_free(). */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(DSP_BUILDING_LIBRARY)
#define DSP_API __attribute__((visibility("default")))
#else
#define DSP_API
#endif

typedef struct dsp_species dsp_species;

typedef enum dsp_status {
  DSP_OK = 0,
  DSP_CHECK_FAILED = 1,
  DSP_PARSE_ERROR = 2,
  DSP_VALIDATION_ERROR = 3,
  DSP_NOT_CONNECTED = 4,
  DSP_INVALID_ARGUMENT = 5,
  DSP_BOUND_EXCEEDED = 6,
  DSP_NOT_MONOIDAL = 7,
  DSP_INTERNAL_ERROR = 9
} dsp_status;

/* Built-in species by name ("set", "graph", "poset", "forest", "linear",
 * "dposet", "dag").  `edges` bounds graph decorations during enumeration. */
DSP_API dsp_status dsp_species_create(const char* name, int edges, dsp_species** out);
DSP_API void dsp_species_destroy(dsp_species* s);
DSP_API const char* dsp_species_tag(const dsp_species* s);

/* Coproduct of a structure given in the species' JSON format. */
DSP_API dsp_status dsp_coproduct_json(dsp_species* s, const char* structure_json, char** out);
/* Antipode of a structure; the convolution identity is verified first. */
DSP_API dsp_status dsp_antipode_json(dsp_species* s, const char* structure_json, char** out);
/* Runs a named check suite (or "all").  Returns DSP_CHECK_FAILED, with the
 * report still written, when some suite fails unexpectedly. */
DSP_API dsp_status dsp_check_json(dsp_species* s, const char* which, int size, int levels, char** out);
/* Basis counts and coproduct table; format is "json" or "csv". */
DSP_API dsp_status dsp_table(dsp_species* s, int size, const char* format, char** out);

DSP_API void dsp_string_free(char* p);
/* Message of the last failure on this thread, or "". */
DSP_API const char* dsp_last_error(void);
DSP_API const char* dsp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DSPECIES_DSPECIES_H */
