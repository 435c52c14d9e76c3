#include "daha/daha.h"

#include <cstring>
#include <string>

#include "daha/algebra.hpp"
#include "daha/dunkl.hpp"
#include "daha/ideals.hpp"
#include "daha/report.hpp"
#include "daha/root_data.hpp"
#include "daha/suites.hpp"

struct daha_poly {
  daha::LaurentPoly value;
};

struct daha_report {
  daha::Report value;
};

struct daha_slice {
  daha::GradedSlice value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_position = 0;

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
int guarded(F&& f) {
  last_error.clear();
  last_position = 0;
  try {
    f();
    return DAHA_OK;
  } catch (const daha::SyntaxError& e) {
    last_error = e.what();
    last_position = e.position();
    return DAHA_ERR_SYNTAX;
  } catch (const daha::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DAHA_ERR_INTERNAL;
  }
}

int null_error() {
  last_error = "null argument";
  return DAHA_ERR_NULL;
}

daha::RootData root_data(const std::string& name, int n) {
  if (name == "A") return daha::RootData::type_A(n);
  if (name == "SL2") return daha::RootData::sl2();
  if (name == "PGL2") return daha::RootData::pgl2();
  if (name == "C2") return daha::RootData::c2();
  if (name == "G2") return daha::RootData::g2();
  throw daha::Error(daha::ErrorCode::UnsupportedRootData, "unknown root data '" + name + "'");
}

}  // namespace

extern "C" {

const char* daha_status_name(int status) {
  switch (status) {
    case DAHA_OK: return "ok";
    case DAHA_ERR_CONTEXT_MISMATCH: return "context mismatch";
    case DAHA_ERR_SYNTAX: return "syntax error";
    case DAHA_ERR_NOT_DIVISIBLE: return "not divisible";
    case DAHA_ERR_NOT_POLYNOMIAL_PRESERVING: return "not polynomial preserving";
    case DAHA_ERR_INVALID_INDEX: return "invalid index";
    case DAHA_ERR_NON_MINUSCULE: return "non-minuscule coweight";
    case DAHA_ERR_ASYMMETRIC_INPUT: return "asymmetric input";
    case DAHA_ERR_TAG_MISMATCH: return "tag mismatch";
    case DAHA_ERR_NO_DICTIONARY: return "no dictionary";
    case DAHA_ERR_UNSUPPORTED_ROOT_DATA: return "unsupported root data";
    case DAHA_ERR_WINDOW_TOO_LARGE: return "window too large";
    case DAHA_ERR_MEMBERSHIP_FAILURE: return "membership failure";
    case DAHA_ERR_UNKNOWN_SUITE: return "unknown suite";
    case DAHA_ERR_INVALID_RANK: return "invalid rank";
    case DAHA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DAHA_ERR_NULL: return "null argument";
    default: return "internal error";
  }
}

const char* daha_last_error(void) { return last_error.c_str(); }

size_t daha_last_error_position(void) { return last_position; }

void daha_string_free(char* s) { delete[] s; }

void daha_config_default(daha_config* cfg) {
  if (!cfg) return;
  daha::CheckConfig d;
  cfg->suite = "all";
  cfg->n = d.n;
  cfg->d_max = d.d_max;
  cfg->ydeg = d.ydeg;
  cfg->x_radius = d.x_radius;
  cfg->seed = d.seed;
  cfg->budget_ms = d.budget_ms;
  cfg->record_timing = 0;
}

size_t daha_suite_count(void) { return daha::suite_names().size(); }

const char* daha_suite_name(size_t index) {
  const auto& names = daha::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

int daha_poly_parse(const char* text, int n, daha_poly** out) {
  if (!text || !out) return null_error();
  return guarded([&] {
    if (n < 1 || n > daha::kMaxRank) throw daha::Error(daha::ErrorCode::InvalidRank, "rank out of range");
    *out = new daha_poly{daha::parse_poly(text, daha::VarContext{n})};
  });
}

int daha_poly_to_string(const daha_poly* p, char** out) {
  if (!p || !out) return null_error();
  return guarded([&] { *out = copy_string(daha::to_string(p->value)); });
}

int daha_poly_add(const daha_poly* a, const daha_poly* b, daha_poly** out) {
  if (!a || !b || !out) return null_error();
  return guarded([&] { *out = new daha_poly{a->value + b->value}; });
}

int daha_poly_mul(const daha_poly* a, const daha_poly* b, daha_poly** out) {
  if (!a || !b || !out) return null_error();
  return guarded([&] { *out = new daha_poly{a->value * b->value}; });
}

int daha_poly_equal(const daha_poly* a, const daha_poly* b, int* out) {
  if (!a || !b || !out) return null_error();
  return guarded([&] { *out = a->value == b->value ? 1 : 0; });
}

void daha_poly_free(daha_poly* p) { delete p; }

int daha_membership(const daha_poly* f, const char* roots, int d, int* member, char** witness) {
  if (!f || !roots || !member) return null_error();
  return guarded([&] {
    daha::MembershipResult r = daha::membership(f->value, {root_data(roots, f->value.n()), d});
    *member = r.member ? 1 : 0;
    if (witness) *witness = r.member ? nullptr : copy_string(daha::to_string(r.witness));
  });
}

int daha_graded_dimension(const char* roots, int n, int d, int isotypic, int use_isotypic, int xlo,
                          int xhi, int ydeg, daha_slice** out) {
  if (!roots || !out) return null_error();
  return guarded([&] {
    if (n < 1 || n > daha::kMaxRank) throw daha::Error(daha::ErrorCode::InvalidRank, "rank out of range");
    std::optional<int> iso;
    if (use_isotypic) iso = isotypic;
    *out = new daha_slice{daha::graded_dimension({root_data(roots, n), d}, iso, daha::Window{xlo, xhi, ydeg})};
  });
}

size_t daha_slice_dimension(const daha_slice* s) { return s ? s->value.dimension() : 0; }

int daha_slice_to_json(const daha_slice* s, char** out) {
  if (!s || !out) return null_error();
  return guarded([&] { *out = copy_string(s->value.to_json()); });
}

void daha_slice_free(daha_slice* s) { delete s; }

int daha_eval_word(const char* word, int n, char** out) {
  if (!word || !out) return null_error();
  return guarded([&] {
    if (n < 1 || n > daha::kMaxRank) throw daha::Error(daha::ErrorCode::InvalidRank, "rank out of range");
    *out = copy_string(daha::to_string(daha::evaluate(daha::parse_word(word, n), n)));
  });
}

int daha_run_suite(const daha_config* cfg, daha_report** out) {
  if (!cfg || !out) return null_error();
  return guarded([&] {
    daha::CheckConfig c;
    c.suite = cfg->suite ? cfg->suite : "all";
    c.n = cfg->n;
    c.d_max = cfg->d_max;
    c.ydeg = cfg->ydeg;
    c.x_radius = cfg->x_radius;
    c.seed = cfg->seed;
    c.budget_ms = cfg->budget_ms;
    c.record_timing = cfg->record_timing != 0;
    *out = new daha_report{daha::run_suite(c)};
  });
}

int daha_report_serialize(const daha_report* r, char** out) {
  if (!r || !out) return null_error();
  return guarded([&] { *out = copy_string(daha::serialize(r->value)); });
}

int daha_report_all_pass(const daha_report* r, int* out) {
  if (!r || !out) return null_error();
  return guarded([&] { *out = r->value.all_pass() ? 1 : 0; });
}

size_t daha_report_size(const daha_report* r) { return r ? r->value.entries.size() : 0; }

int daha_report_entry(const daha_report* r, size_t index, const char** label, int* status,
                      const char** witness) {
  if (!r) return null_error();
  if (index >= r->value.entries.size()) {
    last_error = "entry index out of range";
    return DAHA_ERR_INVALID_INDEX;
  }
  const auto& e = r->value.entries[index];
  if (label) *label = e.label.c_str();
  if (status) *status = static_cast<int>(e.status);
  if (witness) *witness = e.witness.c_str();
  return DAHA_OK;
}

void daha_report_free(daha_report* r) { delete r; }

}  // extern "C"
