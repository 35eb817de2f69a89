#include "platcalc/platcalc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "platcalc/bracket.hpp"
#include "platcalc/movedsl.hpp"
#include "platcalc/plat.hpp"
#include "platcalc/render.hpp"
#include "platcalc/search.hpp"
#include "platcalc/textio.hpp"
#include "platcalc/tiling.hpp"

struct platcalc_plat {
  platcalc::Plat value;
};

struct platcalc_trace {
  platcalc::SimplificationTrace value;
};

struct platcalc_tiling {
  platcalc::TilingTree value;
};

namespace {

thread_local std::string g_last_error;

platcalc_status set_error(platcalc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, translating exceptions to statuses: parse failures from
// std::invalid_argument, move preconditions from MoveError, everything
// else reported as a domain error.
template <typename Fn>
platcalc_status guarded(Fn&& body) {
  try {
    return body();
  } catch (const platcalc::MoveError& e) {
    return set_error(PLATCALC_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(PLATCALC_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PLATCALC_ERR_DOMAIN, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PLATCALC_ERR_DOMAIN, e.what());
  }
}

platcalc_status require(bool ok, const char* what) {
  return ok ? PLATCALC_OK : set_error(PLATCALC_ERR_DOMAIN, what);
}

}  // namespace

extern "C" {

const char* platcalc_last_error(void) { return g_last_error.c_str(); }

void platcalc_string_free(char* s) { std::free(s); }

platcalc_status platcalc_plat_parse(const char* text, platcalc_plat** out) {
  if (require(text && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    auto plat = platcalc::parse_plat(text);
    *out = new platcalc_plat{std::move(plat)};
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_plat_from_word(int strands, const int* letters,
                                        size_t letter_count,
                                        platcalc_plat** out) {
  if (require(out && (letters || letter_count == 0), "null argument") !=
      PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    std::vector<int> word(letters, letters + letter_count);
    auto plat = platcalc::make_plat(strands, std::move(word));
    *out = new platcalc_plat{std::move(plat)};
    return PLATCALC_OK;
  });
}

void platcalc_plat_free(platcalc_plat* p) { delete p; }

char* platcalc_plat_format(const platcalc_plat* p) {
  if (!p) return nullptr;
  return dup_string(platcalc::format_plat(p->value));
}

int platcalc_plat_strands(const platcalc_plat* p) {
  return p ? p->value.strands() : 0;
}

int platcalc_plat_bridge_index(const platcalc_plat* p) {
  return p ? p->value.bridge_index() : 0;
}

int platcalc_plat_crossings(const platcalc_plat* p) {
  return p ? platcalc::crossing_count(p->value) : 0;
}

int platcalc_plat_components(const platcalc_plat* p) {
  return p ? platcalc::component_count(p->value) : 0;
}

platcalc_status platcalc_plat_oracle(const platcalc_plat* p, int budget,
                                     char** out) {
  if (require(p && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&]() -> platcalc_status {
    int limit = budget > 0 ? budget : platcalc::kDefaultBracketBudget;
    auto value = platcalc::oracle_value(p->value, limit);
    if (!value) {
      return set_error(PLATCALC_ERR_BUDGET,
                       "plat has more crossings than the bracket budget");
    }
    *out = dup_string(value->str());
    return PLATCALC_OK;
  });
}

int platcalc_plat_unknot_evidence(const platcalc_plat* p, int budget) {
  if (!p) return -1;
  int limit = budget > 0 ? budget : platcalc::kDefaultBracketBudget;
  try {
    auto verdict = platcalc::unknot_evidence(p->value, limit);
    if (!verdict) return -1;
    return *verdict ? 1 : 0;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return -1;
  }
}

platcalc_status platcalc_plat_apply(const platcalc_plat* p, const char* move,
                                    platcalc_plat** out) {
  if (require(p && move && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    auto params = platcalc::parse_move(move);
    auto next = platcalc::apply_move(p->value, params);
    next.word = platcalc::isotopy_normalize(std::move(next.word));
    *out = new platcalc_plat{std::move(next)};
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_plat_scramble(const platcalc_plat* p,
                                       unsigned long long seed, int moves,
                                       platcalc_plat** out) {
  if (require(p && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  if (require(moves >= 0, "move budget must not be negative") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    *out = new platcalc_plat{platcalc::scramble(p->value, seed, moves)};
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_plat_simplify(const platcalc_plat* p,
                                       const platcalc_search_config* config,
                                       platcalc_trace** out) {
  if (require(p && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    platcalc::SearchConfig cfg;
    if (config) {
      if (config->beam_width > 0) cfg.beam_width = config->beam_width;
      if (config->node_budget > 0) cfg.node_budget = config->node_budget;
      if (config->crossing_cap > 0) cfg.crossing_cap = config->crossing_cap;
      cfg.seed = config->seed;
    }
    *out = new platcalc_trace{platcalc::simplify(p->value, cfg)};
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_plat_render(const platcalc_plat* p,
                                     const char* format, char** out) {
  if (require(p && format && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&]() -> platcalc_status {
    std::string fmt(format);
    if (fmt == "ascii") {
      *out = dup_string(platcalc::render_ascii(p->value));
    } else if (fmt == "svg") {
      *out = dup_string(platcalc::render_svg(p->value));
    } else {
      return set_error(PLATCALC_ERR_PARSE,
                       "render format must be ascii or svg, got '" + fmt +
                           "'");
    }
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_trace_parse(const char* text, platcalc_trace** out) {
  if (require(text && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    *out = new platcalc_trace{platcalc::parse_trace(text)};
    return PLATCALC_OK;
  });
}

void platcalc_trace_free(platcalc_trace* t) { delete t; }

char* platcalc_trace_format(const platcalc_trace* t) {
  if (!t) return nullptr;
  return dup_string(platcalc::format_trace(t->value));
}

int platcalc_trace_reached_standard(const platcalc_trace* t) {
  return t && t->value.outcome == platcalc::SearchOutcome::ReachedStandard
             ? 1
             : 0;
}

size_t platcalc_trace_step_count(const platcalc_trace* t) {
  return t ? t->value.steps.size() : 0;
}

platcalc_status platcalc_trace_step_plat(const platcalc_trace* t,
                                         size_t index, platcalc_plat** out) {
  if (require(t && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  if (index >= t->value.steps.size()) {
    return set_error(PLATCALC_ERR_DOMAIN,
                     "step " + std::to_string(index) + " is out of range");
  }
  return guarded([&] {
    *out = new platcalc_plat{t->value.steps[index].plat};
    return PLATCALC_OK;
  });
}

char* platcalc_trace_step_move(const platcalc_trace* t, size_t index) {
  if (!t || index >= t->value.steps.size()) return nullptr;
  const auto& move = t->value.steps[index].move;
  if (!move) return nullptr;
  return dup_string(platcalc::format_move(*move));
}

platcalc_status platcalc_trace_certify(const platcalc_trace* t,
                                       int crossing_cap, int oracle_budget,
                                       char** out) {
  if (require(t && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    std::optional<int> cap;
    if (crossing_cap > 0) cap = crossing_cap;
    int budget = oracle_budget > 0 ? oracle_budget
                                   : platcalc::kDefaultBracketBudget;
    auto violations = platcalc::certify_trace(t->value, cap, budget);
    std::string joined;
    for (const auto& v : violations) {
      joined += v;
      joined += '\n';
    }
    *out = dup_string(joined);
    return PLATCALC_OK;
  });
}

platcalc_status platcalc_tiling_parse(const char* text,
                                      platcalc_tiling** out) {
  if (require(text && out, "null argument") != PLATCALC_OK) {
    return PLATCALC_ERR_DOMAIN;
  }
  return guarded([&] {
    *out = new platcalc_tiling{platcalc::parse_tiling(text)};
    return PLATCALC_OK;
  });
}

void platcalc_tiling_free(platcalc_tiling* t) { delete t; }

char* platcalc_tiling_format(const platcalc_tiling* t) {
  if (!t) return nullptr;
  return dup_string(platcalc::format_tiling(t->value));
}

int platcalc_tiling_valid(const platcalc_tiling* t) {
  if (!t) return 0;
  try {
    return platcalc::validate(t->value).empty() ? 1 : 0;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return 0;
  }
}

char* platcalc_tiling_report(const platcalc_tiling* t) {
  if (!t) return nullptr;
  std::string text;
  try {
    auto violations = platcalc::validate(t->value);
    if (violations.empty()) {
      text += "valid: yes\n";
    } else {
      text += "valid: no\n";
      for (const auto& v : violations) {
        text += "- " + v + "\n";
      }
    }
    auto c = platcalc::census(t->value);
    text += "census: t440=" + std::to_string(c.t440) +
            " t221=" + std::to_string(c.t221) +
            " t003=" + std::to_string(c.t003) +
            " t001=" + std::to_string(c.t001) +
            " t110=" + std::to_string(c.t110) + "\n";
    text += "identity: " + std::to_string(c.t001) + " interior extrema vs " +
            std::to_string(c.t221 + c.t003) + " circle-side saddles\n";
    if (violations.empty()) {
      text += "euler: " +
              std::to_string(platcalc::euler_characteristic(t->value)) + "\n";
      auto cx = platcalc::complexity(t->value);
      text += "complexity: (" + std::to_string(cx.first) + ", " +
              std::to_string(cx.second) + ")\n";
      if (auto v = platcalc::find_reducible_vertex(t->value)) {
        text += "reducible: tile " + std::to_string(v->tile_id) +
                " condition " + v->condition + "\n";
      } else {
        text += "reducible: none\n";
      }
    }
  } catch (const std::exception& e) {
    text += std::string("report failed: ") + e.what() + "\n";
  }
  return dup_string(text);
}

}  // extern "C"
