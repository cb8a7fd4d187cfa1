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


#include "dspecies/dspecies.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "dspecies/coalg.hpp"
#include "dspecies/error.hpp"
#include "dspecies/io.hpp"
#include "dspecies/suites.hpp"

struct dsp_species {
  dsp::SpeciesPtr species;
  dsp::EnumBounds bounds;
  std::unique_ptr<dsp::Coalgebra> algebra;
  std::string tag;
};

namespace {

thread_local std::string last_error;

dsp_status fail(dsp_status s, const std::string& what) {
  last_error = what;
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
dsp_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const dsp::Error& e) {
    return fail(static_cast<dsp_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DSP_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(DSP_INTERNAL_ERROR, e.what());
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

dsp_status check_args(const dsp_species* s, const void* a, char** out) {
  if (!s || !a || !out) return fail(DSP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return DSP_OK;
}

}  // namespace

extern "C" {

dsp_status dsp_species_create(const char* name, int edges, dsp_species** out) {
  if (!name || !out) return fail(DSP_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (edges < 0) return fail(DSP_INVALID_ARGUMENT, "edge bound must be non-negative");
  return guarded([&] {
    auto s = std::make_unique<dsp_species>();
    s->species = dsp::species_by_name(name);
    s->bounds.edges = edges;
    s->algebra = std::make_unique<dsp::Coalgebra>(s->species, s->bounds);
    s->tag = s->species->tag();
    *out = s.release();
    return DSP_OK;
  });
}

void dsp_species_destroy(dsp_species* s) { delete s; }

const char* dsp_species_tag(const dsp_species* s) { return s ? s->tag.c_str() : ""; }

dsp_status dsp_coproduct_json(dsp_species* s, const char* structure_json, char** out) {
  if (dsp_status st = check_args(s, structure_json, out)) return st;
  return guarded([&] {
    const dsp::Structure x = dsp::parse_structure(*s->species, structure_json);
    *out = copy_out(dsp::to_json(*s->algebra, s->algebra->coproduct(s->algebra->key(x))));
    return DSP_OK;
  });
}

dsp_status dsp_antipode_json(dsp_species* s, const char* structure_json, char** out) {
  if (dsp_status st = check_args(s, structure_json, out)) return st;
  return guarded([&] {
    const dsp::Structure x = dsp::parse_structure(*s->species, structure_json);
    const dsp::Key k = s->algebra->key(x);
    const dsp::ModuleElement a = s->algebra->antipode(k);
    dsp::ModuleElement unit;
    unit.add(s->algebra->unit(), s->algebra->counit(k));
    if (!(s->algebra->convolution(k) == unit))
      return fail(DSP_INTERNAL_ERROR, "convolution identity fails for this structure");
    *out = copy_out(dsp::to_json(*s->algebra, a));
    return DSP_OK;
  });
}

dsp_status dsp_check_json(dsp_species* s, const char* which, int size, int levels, char** out) {
  if (dsp_status st = check_args(s, which, out)) return st;
  return guarded([&] {
    dsp::SuiteConfig c;
    c.size = size;
    c.levels = levels;
    c.decoration = s->bounds;
    const auto results = dsp::run_suites(s->species, which, c);
    *out = copy_out(dsp::to_json(*s->species, results));
    for (const auto& r : results)
      if (!r.ok()) return fail(DSP_CHECK_FAILED, "suite '" + r.report.suite + "' failed");
    return DSP_OK;
  });
}

dsp_status dsp_table(dsp_species* s, int size, const char* format, char** out) {
  if (dsp_status st = check_args(s, format, out)) return st;
  return guarded([&] {
    *out = copy_out(dsp::basis_table(*s->algebra, size, dsp::parse_table_format(format)));
    return DSP_OK;
  });
}

void dsp_string_free(char* p) { std::free(p); }

const char* dsp_last_error(void) { return last_error.c_str(); }

const char* dsp_version(void) { return "0.1.0"; }

}  // extern "C"
